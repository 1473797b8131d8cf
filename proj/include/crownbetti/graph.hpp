#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crownbetti/monomial_ideal.hpp"
#include "crownbetti/multidegree.hpp"

namespace crownbetti {

struct DirectedEdge {
    std::size_t tail;
    std::size_t head;
    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// A directed simple graph with a positive weight on every vertex. The vertex
/// labels double as the variables of the edge ideal.
///
/// Weights on tails never enter the edge ideal; for the crown families every
/// edge points x -> y, so only the y-weights matter.
class WeightedOrientedGraph {
public:
    /// Validates: no loops, no repeated edges, no antiparallel pairs, all
    /// weights >= 1 and one weight per vertex.
    WeightedOrientedGraph(VariableSet vertices, std::vector<DirectedEdge> edges,
                          std::vector<Exponent> weights);

    const VariableSet& vertices() const { return vertices_; }
    const std::vector<DirectedEdge>& edges() const { return edges_; }
    const std::vector<Exponent>& weights() const { return weights_; }
    Exponent weight(std::size_t v) const { return weights_[v]; }

    /// Vertices incident to at least one edge, ascending.
    std::vector<std::size_t> non_isolated() const;

private:
    VariableSet vertices_;
    std::vector<DirectedEdge> edges_;
    std::vector<Exponent> weights_;
};

/// I(D) = (tail * head^{w(head)} : (tail, head) in E(D)).
MonomialIdeal edge_ideal(const WeightedOrientedGraph& graph);

/// The labels x1..xn, y1..yn in that order.
VariableSet crown_variables(std::size_t n);
/// Labels x1..xs, y1..yt.
VariableSet bipartite_variables(std::size_t s, std::size_t t);

/// Validates a y-weight vector of the given length; an empty vector means all ones.
std::vector<Exponent> resolve_weights(const std::vector<Exponent>& weights, std::size_t count);

/// The crown graph G_n: edges x_i -> y_j for all i != j, w(y_j) = weights[j-1].
WeightedOrientedGraph crown(std::size_t n, const std::vector<Exponent>& weights = {});
/// G_{s,t}: edges x_i -> y_j, i != j, 1 <= i <= s, 1 <= j <= t. Needs 1 < t < s.
WeightedOrientedGraph unbalanced_crown(std::size_t s, std::size_t t,
                                       const std::vector<Exponent>& weights = {});
/// G_{m,s,t}: the G_{s,t} edges plus x_i -> y_j for m < i <= s and every j.
/// Needs 1 < m < s and m < t.
WeightedOrientedGraph generalized_crown(std::size_t m, std::size_t s, std::size_t t,
                                        const std::vector<Exponent>& weights = {});
/// K_{s,t}: every edge x_i -> y_j. Needs s, t >= 1.
WeightedOrientedGraph complete_bipartite(std::size_t s, std::size_t t,
                                         const std::vector<Exponent>& weights = {});

/// The induced subgraph on `subset`; keeps the labels of `graph` in order.
WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& graph,
                                       const std::set<std::string>& subset);

/// lcm of the minimal generators of I(H). Throws UsageError for edgeless graphs.
Multidegree theta(const WeightedOrientedGraph& graph);

/// A vertex subset of the crown graph G_n, as bitmasks over the indices 1..n
/// (bit i-1 stands for x_i or y_i).
struct CrownSubset {
    std::uint64_t x_mask = 0;
    std::uint64_t y_mask = 0;

    std::size_t complete_pairs() const;
    std::size_t size() const;
    std::set<std::string> labels() const;
    static CrownSubset from_labels(std::size_t n, const std::set<std::string>& labels);
    /// Enumeration order used by sweeps: bit i of `code` is x_{i+1} for i < n,
    /// y_{i-n+1} otherwise.
    static CrownSubset from_code(std::size_t n, std::uint64_t code);
};

enum class SubgraphKind { CrownLike, CompleteBipartite, OnePair, Degenerate };

struct SubgraphClass {
    SubgraphKind kind;
    std::size_t complete_pairs;
    friend bool operator==(const SubgraphClass&, const SubgraphClass&) = default;
};

/// Classifies G_n[W] by the number k of complete pairs {x_i, y_i} in W:
/// CrownLike for k >= 2, OnePair for k = 1, and for k = 0 CompleteBipartite
/// when W meets both sides, Degenerate otherwise.
SubgraphClass classify_induced(std::size_t n, const CrownSubset& subset);

std::string to_string(SubgraphKind kind);

}  // namespace crownbetti
