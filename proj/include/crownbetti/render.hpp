#pragma once

#include <string>

#include "json.hpp"

#include "crownbetti/betti_table.hpp"
#include "crownbetti/graph.hpp"

namespace crownbetti {

/// Macaulay2-style diagram: columns are homological degrees i, rows are
/// j - i, zeros print as '.'.
///
///            0 1 2 3
///     total: 6 9 6 2
///         2: 6 6 . .
///         3: . 3 6 2
std::string render_betti_diagram(const BettiTable& table);

/// One "i j count" line per nonzero graded Betti number.
std::string render_graded_triples(const BettiTable& table);

/// One "i  monomial  multiplicity" line per entry, sorted by (i, exponent vector).
std::string render_multigraded(const BettiTable& table);

/// {"graded": [[i, j, count]], "multigraded": [[i, [exponents], count]],
///  "pdim": p, "reg": r, "total": [...], "variables": [...]}
nlohmann::json betti_table_to_json(const BettiTable& table);
/// Compact dump of betti_table_to_json plus a trailing newline.
std::string render_json(const BettiTable& table);

/// Inverse of betti_table_to_json. Throws UsageError on malformed documents or
/// when the aggregate fields disagree with the multigraded entries.
BettiTable betti_table_from_json(const nlohmann::json& doc);

/// Parses a graph document:
///   {"vertices": ["x1", "y1"], "edges": [["x1", "y1"]], "weights": {"y1": 3}}
/// Missing weights default to 1. Throws UsageError; syntax errors carry
/// "line L, column C".
WeightedOrientedGraph parse_graph_document(const std::string& text);
std::string graph_document(const WeightedOrientedGraph& graph);

}  // namespace crownbetti
