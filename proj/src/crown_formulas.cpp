#include "crownbetti/crown_formulas.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <type_traits>

#include "crownbetti/error.hpp"

namespace crownbetti {

Count total_betti_closed_form(std::int64_t n, std::int64_t i) {
    if (n < 2 || i < 0) return 0;
    Count total = 0;
    for (std::int64_t k = 2; k <= n; ++k) {
        const std::int64_t singles = i + 3 - 2 * k;
        const Count ways = binomial(n, k) * binomial(n - k, singles);
        if (ways == 0) continue;
        total += static_cast<Count>(k - 1) * pow2(static_cast<int>(singles)) * ways;
    }
    const Count bipartite = binomial(n, i + 2);
    if (bipartite != 0) total += (pow2(static_cast<int>(i + 2)) - 2) * bipartite;
    return total;
}

namespace {

// Calls f(mask) for every r-subset of the bits set in `pool`.
template <class F>
void for_each_subset_of_size(std::uint64_t pool, std::size_t r, F f) {
    std::vector<std::uint64_t> bits;
    for (std::uint64_t rest = pool; rest; rest &= rest - 1) bits.push_back(rest & -rest);
    if (r > bits.size()) return;
    if (r == 0) {
        f(std::uint64_t{0});
        return;
    }
    // Gosper's hack over positions into `bits`.
    const std::size_t m = bits.size();
    for (std::uint64_t pick = (std::uint64_t{1} << r) - 1; pick < (std::uint64_t{1} << m);) {
        std::uint64_t mask = 0;
        for (std::size_t b = 0; b < m; ++b)
            if (pick >> b & 1) mask |= bits[b];
        f(mask);
        const std::uint64_t c = pick & -pick, next = pick + c;
        pick = (((next ^ pick) >> 2) / c) | next;
    }
}

// Splits `singles` into x-side and y-side by every assignment in
// [first, last] (bit b of the assignment puts the b-th single on the y side).
template <class F>
void for_each_side_assignment(std::uint64_t singles, std::uint64_t first, std::uint64_t last, F f) {
    std::vector<std::uint64_t> bits;
    for (std::uint64_t rest = singles; rest; rest &= rest - 1) bits.push_back(rest & -rest);
    for (std::uint64_t assign = first; assign <= last; ++assign) {
        CrownSubset subset;
        for (std::size_t b = 0; b < bits.size(); ++b)
            (assign >> b & 1 ? subset.y_mask : subset.x_mask) |= bits[b];
        f(subset);
        if (assign == last) break;
    }
}

std::uint64_t all_indices(std::size_t n) {
    if (n > 32) throw UsageError("crown formulas support n <= 32");
    return (std::uint64_t{1} << n) - 1;
}

}  // namespace

Multidegree theta_of_selection(std::size_t n, const std::vector<Exponent>& weights,
                               const CrownSubset& subset) {
    const auto w = resolve_weights(weights, n);
    std::vector<Exponent> e(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (subset.x_mask >> i & 1) e[i] = 1;
        if (subset.y_mask >> i & 1) e[n + i] = w[i];
    }
    return Multidegree(crown_variables(n), std::move(e));
}

std::vector<Multidegree> enumerate_N(std::size_t n, const std::vector<Exponent>& weights,
                                     std::int64_t i, std::size_t k) {
    const auto w = resolve_weights(weights, n);
    const auto all = all_indices(n);
    const std::int64_t singles = i + 3 - 2 * static_cast<std::int64_t>(k);
    std::vector<Multidegree> out;
    if (k < 2 || k > n || singles < 0) return out;
    for_each_subset_of_size(all, k, [&](std::uint64_t pairs) {
        for_each_subset_of_size(all & ~pairs, static_cast<std::size_t>(singles), [&](std::uint64_t s) {
            const auto last = (std::uint64_t{1} << singles) - 1;
            for_each_side_assignment(s, 0, last, [&](CrownSubset subset) {
                subset.x_mask |= pairs;
                subset.y_mask |= pairs;
                out.push_back(theta_of_selection(n, w, subset));
            });
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Multidegree> enumerate_M(std::size_t n, const std::vector<Exponent>& weights,
                                     std::int64_t i) {
    const auto w = resolve_weights(weights, n);
    const auto all = all_indices(n);
    const std::int64_t size = i + 2;
    std::vector<Multidegree> out;
    if (i < 0 || size > static_cast<std::int64_t>(n)) return out;
    for_each_subset_of_size(all, static_cast<std::size_t>(size), [&](std::uint64_t chosen) {
        // Both sides nonempty: skip the all-x and all-y assignments.
        const auto last = (std::uint64_t{1} << size) - 2;
        for_each_side_assignment(chosen, 1, last, [&](const CrownSubset& subset) {
            out.push_back(theta_of_selection(n, w, subset));
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

BettiTable multigraded_betti_formula(std::size_t n, const std::vector<Exponent>& weights) {
    if (n < 2) throw UsageError("crown graph needs n >= 2");
    const auto w = resolve_weights(weights, n);
    BettiTable table(crown_variables(n));
    const auto top = static_cast<std::int64_t>(2 * n - 3);
    for (std::int64_t i = 0; i <= top; ++i) {
        for (std::size_t k = 2; k <= n; ++k)
            for (const auto& a : enumerate_N(n, w, i, k)) table.add(static_cast<int>(i), a, k - 1);
        for (const auto& a : enumerate_M(n, w, i)) table.add(static_cast<int>(i), a, 1);
    }
    return table;
}

Count graded_betti_formula(std::size_t n, const std::vector<Exponent>& weights, std::int64_t i,
                           std::int64_t j) {
    if (n < 2) throw UsageError("crown graph needs n >= 2");
    const auto w = resolve_weights(weights, n);
    if (j < 0) return 0;
    const auto degree = static_cast<Count>(j);
    Count total = 0;
    for (std::size_t k = 2; k <= n; ++k)
        for (const auto& a : enumerate_N(n, w, i, k))
            if (a.degree() == degree) total += k - 1;
    for (const auto& a : enumerate_M(n, w, i))
        if (a.degree() == degree) ++total;
    return total;
}

std::int64_t regularity_formula(std::size_t n, const std::vector<Exponent>& weights) {
    if (n < 2) throw UsageError("crown graph needs n >= 2");
    const auto w = resolve_weights(weights, n);
    const auto sum = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    return sum - static_cast<std::int64_t>(n) + 3;
}

WeightedOrientedGraph family_graph(const FamilySpec& family, const std::vector<Exponent>& weights) {
    struct Build {
        const std::vector<Exponent>& w;
        WeightedOrientedGraph operator()(const CrownFamily& f) const { return crown(f.s, w); }
        WeightedOrientedGraph operator()(const UnbalancedFamily& f) const {
            return unbalanced_crown(f.s, f.t, w);
        }
        WeightedOrientedGraph operator()(const GeneralizedFamily& f) const {
            return generalized_crown(f.m, f.s, f.t, w);
        }
        WeightedOrientedGraph operator()(const BipartiteFamily& f) const {
            return complete_bipartite(f.s, f.t, w);
        }
    };
    return std::visit(Build{weights}, family);
}

FamilyTopBetti family_top_betti(const FamilySpec& family, const std::vector<Exponent>& weights) {
    const auto graph = family_graph(family, weights);
    struct Top {
        std::pair<std::int64_t, Count> operator()(const CrownFamily& f) const {
            return {2 * static_cast<std::int64_t>(f.s) - 3, f.s - 1};
        }
        std::pair<std::int64_t, Count> operator()(const UnbalancedFamily& f) const {
            return {static_cast<std::int64_t>(f.s + f.t) - 3, f.t - 1};
        }
        std::pair<std::int64_t, Count> operator()(const GeneralizedFamily& f) const {
            return {static_cast<std::int64_t>(f.s + f.t) - 3, f.m - 1};
        }
        std::pair<std::int64_t, Count> operator()(const BipartiteFamily& f) const {
            return {static_cast<std::int64_t>(f.s + f.t) - 2, 1};
        }
    };
    const auto [p, value] = std::visit(Top{}, family);
    return {static_cast<int>(p), theta(graph), value};
}

std::string to_string(const FamilySpec& family) {
    struct Name {
        std::string operator()(const CrownFamily& f) const {
            return "crown(" + std::to_string(f.s) + ")";
        }
        std::string operator()(const UnbalancedFamily& f) const {
            return "unbalanced(" + std::to_string(f.s) + "," + std::to_string(f.t) + ")";
        }
        std::string operator()(const GeneralizedFamily& f) const {
            return "generalized(" + std::to_string(f.m) + "," + std::to_string(f.s) + "," +
                   std::to_string(f.t) + ")";
        }
        std::string operator()(const BipartiteFamily& f) const {
            return "bipartite(" + std::to_string(f.s) + "," + std::to_string(f.t) + ")";
        }
    };
    return std::visit(Name{}, family);
}

SplittingTriple family_splitting_triple(const FamilySpec& family, const std::vector<Exponent>& weights) {
    const auto graph = family_graph(family, weights);
    const auto& vars = graph.vertices();
    auto x = [](std::size_t i) { return "x" + std::to_string(i); };
    auto y = [](std::size_t j) { return "y" + std::to_string(j); };
    // The induced subgraph on x_1..x_a, y_1..y_b.
    auto corner = [&](std::size_t a, std::size_t b) {
        std::set<std::string> labels;
        for (std::size_t i = 1; i <= a; ++i) labels.insert(x(i));
        for (std::size_t j = 1; j <= b; ++j) labels.insert(y(j));
        return edge_ideal(induced_subgraph(graph, labels)).relabeled(vars);
    };
    auto xs = [&](std::size_t from, std::size_t to) {
        std::vector<Multidegree> gens;
        for (std::size_t i = from; i <= to; ++i) gens.push_back(Multidegree::from_powers(vars, {{x(i), 1}}));
        return MonomialIdeal(vars, gens);
    };
    auto ys = [&](std::size_t from, std::size_t to) {
        std::vector<Multidegree> gens;
        for (std::size_t j = from; j <= to; ++j)
            gens.push_back(Multidegree::from_powers(vars, {{y(j), graph.weight(vars.index_of(y(j)))}}));
        return MonomialIdeal(vars, gens);
    };

    return std::visit(
        [&](const auto& f) -> SplittingTriple {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, CrownFamily>) {
                if (f.s < 3) throw UsageError("the crown induction starts at s = 3");
                return {corner(f.s - 1, f.s - 1), ys(f.s, f.s), xs(1, f.s - 1)};
            } else if constexpr (std::is_same_v<F, UnbalancedFamily>) {
                return {corner(f.t, f.t), xs(f.t + 1, f.s), ys(1, f.t)};
            } else if constexpr (std::is_same_v<F, GeneralizedFamily>) {
                return {corner(f.s, f.m), ys(f.m + 1, f.t), xs(1, f.s)};
            } else {
                throw UsageError("complete bipartite graphs are handled as a product, not a splitting");
            }
        },
        family);
}

std::optional<Contribution> predicted_contribution(std::size_t n, const std::vector<Exponent>& weights,
                                                   const CrownSubset& subset) {
    const auto cls = classify_induced(n, subset);
    const auto size = static_cast<int>(subset.size());
    switch (cls.kind) {
        case SubgraphKind::CrownLike:
            return Contribution{size - 3, theta_of_selection(n, weights, subset), cls.complete_pairs - 1};
        case SubgraphKind::CompleteBipartite:
            return Contribution{size - 2, theta_of_selection(n, weights, subset), 1};
        case SubgraphKind::OnePair:
        case SubgraphKind::Degenerate:
            break;
    }
    return std::nullopt;
}

}  // namespace crownbetti
