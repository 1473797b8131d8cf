#include "crownbetti/graph.hpp"

#include <algorithm>
#include <bit>

#include "crownbetti/error.hpp"

namespace crownbetti {

WeightedOrientedGraph::WeightedOrientedGraph(VariableSet vertices, std::vector<DirectedEdge> edges,
                                             std::vector<Exponent> weights)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), weights_(std::move(weights)) {
    if (weights_.size() != vertices_.size())
        throw UsageError("expected one weight per vertex");
    for (std::size_t v = 0; v < weights_.size(); ++v)
        if (weights_[v] < 1)
            throw UsageError("weight of '" + vertices_.name(v) + "' must be a positive integer");

    std::set<std::pair<std::size_t, std::size_t>> undirected;
    for (const auto& e : edges_) {
        if (e.tail >= vertices_.size() || e.head >= vertices_.size())
            throw UsageError("edge endpoint out of range");
        if (e.tail == e.head) throw UsageError("loop at '" + vertices_.name(e.tail) + "'");
        auto key = std::minmax(e.tail, e.head);
        if (!undirected.insert(key).second)
            throw UsageError("repeated edge between '" + vertices_.name(e.tail) + "' and '" +
                             vertices_.name(e.head) + "'");
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<std::size_t> WeightedOrientedGraph::non_isolated() const {
    std::vector<bool> hit(vertices_.size(), false);
    for (const auto& e : edges_) hit[e.tail] = hit[e.head] = true;
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < hit.size(); ++v)
        if (hit[v]) out.push_back(v);
    return out;
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph& graph) {
    std::vector<Multidegree> gens;
    for (const auto& e : graph.edges()) {
        std::vector<Exponent> x(graph.vertices().size(), 0);
        x[e.tail] += 1;
        x[e.head] += graph.weight(e.head);
        gens.emplace_back(graph.vertices(), std::move(x));
    }
    return MonomialIdeal(graph.vertices(), std::move(gens));
}

VariableSet bipartite_variables(std::size_t s, std::size_t t) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= s; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t j = 1; j <= t; ++j) names.push_back("y" + std::to_string(j));
    return VariableSet(std::move(names));
}

VariableSet crown_variables(std::size_t n) { return bipartite_variables(n, n); }

std::vector<Exponent> resolve_weights(const std::vector<Exponent>& weights, std::size_t count) {
    if (weights.empty()) return std::vector<Exponent>(count, 1);
    if (weights.size() != count)
        throw UsageError("expected " + std::to_string(count) + " weights, got " +
                         std::to_string(weights.size()));
    for (auto w : weights)
        if (w < 1) throw UsageError("weights must be positive integers");
    return weights;
}

namespace {

// Bipartite graph on x1..xs, y1..yt with edges chosen by `keep(i, j)`
// (1-based indices); x-weights are 1.
template <class Keep>
WeightedOrientedGraph bipartite(std::size_t s, std::size_t t, const std::vector<Exponent>& weights,
                                Keep keep) {
    auto yw = resolve_weights(weights, t);
    std::vector<Exponent> all(s, 1);
    all.insert(all.end(), yw.begin(), yw.end());
    std::vector<DirectedEdge> edges;
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = 1; j <= t; ++j)
            if (keep(i, j)) edges.push_back({i - 1, s + j - 1});
    return WeightedOrientedGraph(bipartite_variables(s, t), std::move(edges), std::move(all));
}

}  // namespace

WeightedOrientedGraph crown(std::size_t n, const std::vector<Exponent>& weights) {
    if (n < 2) throw UsageError("crown graph needs n >= 2");
    if (n > 62) throw UsageError("crown graph size too large");
    return bipartite(n, n, weights, [](std::size_t i, std::size_t j) { return i != j; });
}

WeightedOrientedGraph unbalanced_crown(std::size_t s, std::size_t t,
                                       const std::vector<Exponent>& weights) {
    if (!(1 < t && t < s)) throw UsageError("unbalanced crown needs 1 < t < s");
    return bipartite(s, t, weights, [](std::size_t i, std::size_t j) { return i != j; });
}

WeightedOrientedGraph generalized_crown(std::size_t m, std::size_t s, std::size_t t,
                                        const std::vector<Exponent>& weights) {
    if (!(1 < m && m < s && m < t))
        throw UsageError("generalized crown needs 1 < m < s and m < t");
    return bipartite(s, t, weights,
                     [m](std::size_t i, std::size_t j) { return i != j || i > m; });
}

WeightedOrientedGraph complete_bipartite(std::size_t s, std::size_t t,
                                         const std::vector<Exponent>& weights) {
    if (s < 1 || t < 1) throw UsageError("complete bipartite graph needs s, t >= 1");
    return bipartite(s, t, weights, [](std::size_t, std::size_t) { return true; });
}

WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& graph,
                                       const std::set<std::string>& subset) {
    const auto& vs = graph.vertices();
    for (const auto& label : subset)
        if (!vs.contains(label)) throw UsageError("'" + label + "' is not a vertex of the graph");

    std::vector<std::size_t> new_index(vs.size(), vs.size());
    std::vector<std::string> names;
    std::vector<Exponent> weights;
    for (std::size_t v = 0; v < vs.size(); ++v) {
        if (!subset.count(vs.name(v))) continue;
        new_index[v] = names.size();
        names.push_back(vs.name(v));
        weights.push_back(graph.weight(v));
    }
    std::vector<DirectedEdge> edges;
    for (const auto& e : graph.edges())
        if (new_index[e.tail] < vs.size() && new_index[e.head] < vs.size())
            edges.push_back({new_index[e.tail], new_index[e.head]});
    return WeightedOrientedGraph(VariableSet(std::move(names)), std::move(edges),
                                 std::move(weights));
}

Multidegree theta(const WeightedOrientedGraph& graph) {
    const auto ideal = edge_ideal(graph);
    if (ideal.is_zero()) throw UsageError("no edges");
    return lcm_of_generators(ideal);
}

std::size_t CrownSubset::complete_pairs() const {
    return static_cast<std::size_t>(std::popcount(x_mask & y_mask));
}

std::size_t CrownSubset::size() const {
    return static_cast<std::size_t>(std::popcount(x_mask) + std::popcount(y_mask));
}

std::set<std::string> CrownSubset::labels() const {
    std::set<std::string> out;
    for (int i = 0; i < 64; ++i) {
        if (x_mask >> i & 1) out.insert("x" + std::to_string(i + 1));
        if (y_mask >> i & 1) out.insert("y" + std::to_string(i + 1));
    }
    return out;
}

CrownSubset CrownSubset::from_labels(std::size_t n, const std::set<std::string>& labels) {
    const auto vars = crown_variables(n);
    CrownSubset out;
    for (const auto& label : labels) {
        const auto v = vars.index_of(label);
        if (v < n)
            out.x_mask |= std::uint64_t{1} << v;
        else
            out.y_mask |= std::uint64_t{1} << (v - n);
    }
    return out;
}

CrownSubset CrownSubset::from_code(std::size_t n, std::uint64_t code) {
    const std::uint64_t low = (std::uint64_t{1} << n) - 1;
    return {code & low, (code >> n) & low};
}

SubgraphClass classify_induced(std::size_t n, const CrownSubset& subset) {
    const std::uint64_t all = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if ((subset.x_mask | subset.y_mask) & ~all)
        throw UsageError("vertex subset is not contained in V(G_n)");
    const auto k = subset.complete_pairs();
    if (k >= 2) return {SubgraphKind::CrownLike, k};
    if (k == 1) return {SubgraphKind::OnePair, 1};
    if (subset.x_mask != 0 && subset.y_mask != 0) return {SubgraphKind::CompleteBipartite, 0};
    return {SubgraphKind::Degenerate, 0};
}

std::string to_string(SubgraphKind kind) {
    switch (kind) {
        case SubgraphKind::CrownLike: return "crown-like";
        case SubgraphKind::CompleteBipartite: return "complete-bipartite";
        case SubgraphKind::OnePair: return "one-pair";
        case SubgraphKind::Degenerate: return "degenerate";
    }
    return "unknown";
}

}  // namespace crownbetti
