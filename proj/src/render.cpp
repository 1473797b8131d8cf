#include "crownbetti/render.hpp"

#include <algorithm>
#include <sstream>

#include "crownbetti/error.hpp"

namespace crownbetti {

using nlohmann::json;

std::string render_betti_diagram(const BettiTable& table) {
    const auto graded = graded_betti(table);
    const auto totals = total_betti(table);
    const int columns = static_cast<int>(totals.size());
    std::int64_t low = 0, high = 0;
    bool first = true;
    for (const auto& [key, count] : graded) {
        const auto row = static_cast<std::int64_t>(key.second) - key.first;
        low = first ? row : std::min(low, row);
        high = first ? row : std::max(high, row);
        first = false;
    }

    auto cell = [&](std::int64_t row, int i) -> std::string {
        auto it = graded.find({i, static_cast<Count>(row + i)});
        return it == graded.end() ? "." : std::to_string(it->second);
    };
    std::vector<std::size_t> width(static_cast<std::size_t>(columns));
    for (int i = 0; i < columns; ++i) {
        auto& w = width[static_cast<std::size_t>(i)];
        w = std::max(std::to_string(i).size(), std::to_string(totals[static_cast<std::size_t>(i)]).size());
        for (auto row = low; row <= high; ++row) w = std::max(w, cell(row, i).size());
    }
    std::size_t label_width = std::string("total:").size();
    for (auto row = low; row <= high; ++row)
        label_width = std::max(label_width, std::to_string(row).size() + 1);

    std::ostringstream out;
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    auto line = [&](const std::string& label, auto value_of) {
        out << pad(label, label_width);
        for (int i = 0; i < columns; ++i) out << ' ' << pad(value_of(i), width[static_cast<std::size_t>(i)]);
        out << '\n';
    };
    line("", [](int i) { return std::to_string(i); });
    line("total:", [&](int i) { return std::to_string(totals[static_cast<std::size_t>(i)]); });
    for (auto row = low; row <= high; ++row)
        line(std::to_string(row) + ":", [&](int i) { return cell(row, i); });
    return out.str();
}

std::string render_graded_triples(const BettiTable& table) {
    std::ostringstream out;
    for (const auto& [key, count] : graded_betti(table))
        out << key.first << ' ' << key.second << ' ' << count << '\n';
    return out.str();
}

std::string render_multigraded(const BettiTable& table) {
    std::ostringstream out;
    for (const auto& [key, count] : table.entries())
        out << key.first << "  " << to_string(key.second) << "  " << count << '\n';
    return out.str();
}

json betti_table_to_json(const BettiTable& table) {
    json doc;
    doc["variables"] = table.vars().names();
    doc["pdim"] = pdim(table);
    doc["reg"] = regularity(table);
    doc["total"] = total_betti(table);
    json graded = json::array();
    for (const auto& [key, count] : graded_betti(table)) graded.push_back({key.first, key.second, count});
    doc["graded"] = std::move(graded);
    json multi = json::array();
    for (const auto& [key, count] : table.entries())
        multi.push_back({key.first, key.second.exponents(), count});
    doc["multigraded"] = std::move(multi);
    return doc;
}

std::string render_json(const BettiTable& table) { return betti_table_to_json(table).dump() + "\n"; }

BettiTable betti_table_from_json(const json& doc) {
    try {
        const VariableSet vars(doc.at("variables").get<std::vector<std::string>>());
        BettiTable table(vars);
        for (const auto& row : doc.at("multigraded")) {
            if (!row.is_array() || row.size() != 3) throw UsageError("multigraded rows need 3 fields");
            const auto count = row[2].get<Count>();
            if (count == 0) throw UsageError("multigraded rows must have positive counts");
            const auto i = row[0].get<int>();
            if (i < 0) throw UsageError("homological index must be nonnegative");
            const Multidegree a(vars, row[1].get<std::vector<Exponent>>());
            if (table.at(i, a) != 0) throw UsageError("repeated multigraded entry");
            table.add(i, a, count);
        }
        // The aggregates are redundant; reject documents where they disagree.
        auto expected = betti_table_to_json(table);
        for (const char* key : {"pdim", "reg", "total", "graded"})
            if (doc.at(key) != expected.at(key))
                throw UsageError(std::string("field '") + key + "' disagrees with the multigraded entries");
        return table;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed Betti table document: ") + e.what());
    }
}

namespace {

std::string locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

WeightedOrientedGraph parse_graph_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann prefixes its own position; keep only the description.
        std::string what = e.what();
        const auto colon = what.find(": ");
        if (colon != std::string::npos) what = what.substr(colon + 2);
        throw UsageError("parse error at " + locate(text, e.byte) + ": " + what);
    }
    try {
        if (!doc.is_object()) throw UsageError("graph document must be a JSON object");
        for (const auto& item : doc.items())
            if (item.key() != "vertices" && item.key() != "edges" && item.key() != "weights")
                throw UsageError("unknown field '" + item.key() + "'");

        const VariableSet vertices(doc.at("vertices").get<std::vector<std::string>>());
        std::vector<DirectedEdge> edges;
        if (doc.contains("edges")) {
            for (const auto& e : doc.at("edges")) {
                const auto ends = e.get<std::vector<std::string>>();
                if (ends.size() != 2) throw UsageError("each edge is a [tail, head] pair");
                for (const auto& label : ends)
                    if (!vertices.contains(label))
                        throw UsageError("edge references undeclared vertex '" + label + "'");
                edges.push_back({vertices.index_of(ends[0]), vertices.index_of(ends[1])});
            }
        }
        std::vector<Exponent> weights(vertices.size(), 1);
        if (doc.contains("weights")) {
            for (const auto& [label, value] : doc.at("weights").items()) {
                if (!vertices.contains(label))
                    throw UsageError("weight given for undeclared vertex '" + label + "'");
                if (!value.is_number_integer() || value.get<std::int64_t>() < 1 ||
                    value.get<std::int64_t>() > 1'000'000)
                    throw UsageError("weight of '" + label + "' must be an integer in 1..1000000");
                weights[vertices.index_of(label)] = value.get<Exponent>();
            }
        }
        return WeightedOrientedGraph(vertices, std::move(edges), std::move(weights));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed graph document: ") + e.what());
    }
}

std::string graph_document(const WeightedOrientedGraph& graph) {
    const auto& vs = graph.vertices();
    json doc;
    doc["vertices"] = vs.names();
    json edges = json::array();
    for (const auto& e : graph.edges()) edges.push_back({vs.name(e.tail), vs.name(e.head)});
    doc["edges"] = std::move(edges);
    json weights = json::object();
    for (std::size_t v = 0; v < vs.size(); ++v)
        if (graph.weight(v) != 1) weights[vs.name(v)] = graph.weight(v);
    doc["weights"] = std::move(weights);
    return doc.dump(2) + "\n";
}

}  // namespace crownbetti
