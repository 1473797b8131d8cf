#include "crownbetti/splitting.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "crownbetti/error.hpp"
#include "crownbetti/graph.hpp"

namespace crownbetti {

BettiTable taylor_betti_dominant(const MonomialIdeal& ideal) {
    if (!is_dominant(ideal)) throw UsageError("Taylor Betti table requires a dominant ideal");
    const auto& gens = ideal.generators();
    if (gens.size() > 24) throw UsageError("too many generators for Taylor enumeration");

    BettiTable table(ideal.vars());
    // Depth-first over subsets, carrying the running lcm.
    std::function<void(std::size_t, const Multidegree&, int)> visit =
        [&](std::size_t next, const Multidegree& running, int chosen) {
            for (std::size_t g = next; g < gens.size(); ++g) {
                const auto l = lcm(running, gens[g]);
                table.add(chosen, l, 1);
                visit(g + 1, l, chosen + 1);
            }
        };
    visit(0, Multidegree(ideal.vars()), 0);
    return table;
}

SplittingReport verify_betti_splitting(const MonomialIdeal& whole, const MonomialIdeal& left,
                                       const MonomialIdeal& right, FieldSpec field) {
    if (!(whole.vars() == left.vars()) || !(whole.vars() == right.vars()))
        throw UsageError("splitting parts over different variable sets");
    std::vector<Multidegree> joined = left.generators();
    joined.insert(joined.end(), right.generators().begin(), right.generators().end());
    std::sort(joined.begin(), joined.end());
    const bool disjoint = std::adjacent_find(joined.begin(), joined.end()) == joined.end();
    if (!disjoint || joined != whole.generators())
        throw UsageError("G(I) is not the disjoint union of G(J) and G(K)");

    SplittingReport report{true, std::nullopt, multigraded_betti(whole, field),
                           multigraded_betti(left, field), multigraded_betti(right, field),
                           multigraded_betti(intersect(left, right), field)};

    BettiTable predicted(whole.vars());
    for (const auto& [key, count] : report.left.entries()) predicted.add(key.first, key.second, count);
    for (const auto& [key, count] : report.right.entries()) predicted.add(key.first, key.second, count);
    for (const auto& [key, count] : report.intersection.entries())
        predicted.add(key.first + 1, key.second, count);

    if (auto diff = first_difference(report.whole, predicted)) {
        report.is_splitting = false;
        report.witness = SplittingWitness{diff->i, diff->a, diff->left, diff->right};
    }
    return report;
}

bool check_splitting_lemma_hypotheses(const MonomialIdeal& i_part, const MonomialIdeal& j_part,
                                      const MonomialIdeal& k_part) {
    if (!(i_part.vars() == j_part.vars()) || !(i_part.vars() == k_part.vars()))
        throw UsageError("ideals over different variable sets");
    const auto supp_i = support(i_part), supp_j = support(j_part), supp_k = support(k_part);
    auto meets = [](const std::set<std::string>& a, const std::set<std::string>& b) {
        return std::any_of(a.begin(), a.end(), [&](const auto& v) { return b.count(v) != 0; });
    };
    if (meets(supp_j, supp_i) || meets(supp_j, supp_k)) return false;

    const auto jk = product(j_part, k_part);
    for (const auto& u : i_part.generators())
        if (std::binary_search(jk.generators().begin(), jk.generators().end(), u)) return false;

    for (const auto& u : i_part.generators()) {
        bool factors = false;
        for (const auto& u1 : k_part.generators()) {
            if (!divides(u1, u)) continue;
            const auto u2 = quotient(u, u1);
            if (u2.degree() > 0 && !meets(support(u2), supp_k)) {
                factors = true;
                break;
            }
        }
        if (!factors) return false;
    }
    return true;
}

namespace {

void require_disjoint_tables(const BettiTable& left, const BettiTable& right) {
    if (!(left.vars() == right.vars())) throw UsageError("tables over different variable sets");
    const auto a = support(left), b = support(right);
    for (const auto& v : a)
        if (b.count(v)) throw UsageError("ideals share the variable '" + v + "'");
}

}  // namespace

BettiTable betti_product_disjoint(const BettiTable& left, const BettiTable& right) {
    require_disjoint_tables(left, right);
    BettiTable out(left.vars());
    for (const auto& [ka, ca] : left.entries())
        for (const auto& [kb, cb] : right.entries())
            out.add(ka.first + kb.first, multiply(ka.second, kb.second), ca * cb);
    return out;
}

BettiTable betti_sum_disjoint(const BettiTable& left, const BettiTable& right) {
    require_disjoint_tables(left, right);
    using Entry = std::pair<BettiTable::Key, Count>;
    auto augmented = [](const BettiTable& t) {
        std::vector<Entry> e{{{-1, Multidegree(t.vars())}, 1}};
        e.insert(e.end(), t.entries().begin(), t.entries().end());
        return e;
    };
    const auto a = augmented(left), b = augmented(right);
    BettiTable out(left.vars());
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const int i = ka.first + kb.first + 1;
            if (i < 0) continue;  // the formal unit times the formal unit
            out.add(i, multiply(ka.second, kb.second), ca * cb);
        }
    return out;
}

Count mapping_cone_upper_bound(std::int64_t n, std::int64_t i, BoundMemo& memo) {
    if (n < 2) throw UsageError("mapping-cone bound needs n >= 2");
    if (i < 0) return 0;
    if (n == 2) return i == 0 ? 2 : i == 1 ? 1 : 0;
    if (auto it = memo.find({n, i}); it != memo.end()) return it->second;
    const Count value = mapping_cone_upper_bound(n - 1, i, memo) + 2 * binomial(n - 1, i + 1) +
                        2 * mapping_cone_upper_bound(n - 1, i - 1, memo) +
                        static_cast<Count>(n - 1) * binomial(2 * n - 4, i - 1);
    memo[{n, i}] = value;
    return value;
}

Count mapping_cone_upper_bound(std::int64_t n, std::int64_t i) {
    BoundMemo memo;
    return mapping_cone_upper_bound(n, i, memo);
}

namespace {

Multidegree crown_monomial(const VariableSet& vars, std::size_t n,
                           std::initializer_list<std::pair<std::size_t, Exponent>> x_powers,
                           std::initializer_list<std::pair<std::size_t, Exponent>> y_powers) {
    std::vector<Exponent> e(vars.size(), 0);
    for (auto [i, p] : x_powers) e[i - 1] += p;
    for (auto [j, p] : y_powers) e[n + j - 1] += p;
    return Multidegree(vars, std::move(e));
}

}  // namespace

CrownDecomposition crown_decomposition(std::size_t n, const std::vector<Exponent>& weights) {
    if (n < 2) throw UsageError("crown decomposition needs n >= 2");
    const auto w = resolve_weights(weights, n);
    const auto vars = crown_variables(n);
    std::vector<Multidegree> prev, a, b, left_extra, right;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (i != j) prev.push_back(crown_monomial(vars, n, {{i, 1}}, {{j, w[j - 1]}}));
    for (std::size_t j = 1; j < n; ++j) {
        a.push_back(crown_monomial(vars, n, {}, {{j, w[j - 1]}}));
        b.push_back(crown_monomial(vars, n, {{j, 1}}, {}));
    }
    const MonomialIdeal previous(vars, prev), ideal_a(vars, a), ideal_b(vars, b);
    const auto xn = crown_monomial(vars, n, {{n, 1}}, {});
    const auto yn = crown_monomial(vars, n, {}, {{n, w[n - 1]}});
    return {previous, ideal_a, ideal_b, sum(previous, scale(xn, ideal_a)), scale(yn, ideal_b)};
}

CrownColonComponents crowncolon_components(std::size_t n, const std::vector<Exponent>& weights,
                                           std::size_t s) {
    if (n < 2) throw UsageError("crown colon components need n >= 2");
    if (s < 1 || s > n - 1) throw UsageError("colon index s must lie in 1..n-1");
    const auto w = resolve_weights(weights, n);
    const auto vars = crown_variables(n);
    const auto decomposition = crown_decomposition(n, w);

    auto extra = [&](std::size_t j) {
        return crown_monomial(vars, n, {{n, 1}, {j, 1}}, {{j, w[j - 1]}});
    };
    auto q = [&](std::size_t upto) {
        std::vector<Multidegree> gens = decomposition.previous.generators();
        for (std::size_t j = 1; j <= upto; ++j) gens.push_back(extra(j));
        return MonomialIdeal(vars, std::move(gens));
    };

    std::vector<Multidegree> expected;
    for (std::size_t j = 1; j < n; ++j) {
        if (j == s) continue;
        expected.push_back(crown_monomial(vars, n, {{j, 1}}, {}));
        expected.push_back(crown_monomial(vars, n, {}, {{j, w[j - 1]}}));
    }
    CrownColonComponents out{q(s), colon(q(s - 1), extra(s)), q(n - 1),
                             MonomialIdeal(vars, std::move(expected))};
    if (!(out.p_s == out.expected_p_s))
        throw std::logic_error("colon ideal " + to_string(out.p_s) +
                               " differs from the expected complete intersection " +
                               to_string(out.expected_p_s));
    return out;
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const VariableSet& vars,
                                    std::size_t max_generators, Exponent max_exponent) {
    std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_generators));
    std::uniform_int_distribution<Exponent> exponent(0, max_exponent);
    for (;;) {
        std::vector<Multidegree> gens;
        const auto m = count(rng);
        for (std::size_t g = 0; g < m; ++g) {
            std::vector<Exponent> e(vars.size());
            for (auto& x : e) x = exponent(rng);
            gens.emplace_back(vars, std::move(e));
        }
        MonomialIdeal ideal(vars, std::move(gens));
        if (!ideal.is_zero() && !ideal.is_unit()) return ideal;
    }
}

MonomialIdeal random_dominant_ideal(std::mt19937_64& rng, const VariableSet& vars,
                                    std::size_t max_generators, Exponent max_exponent) {
    if (vars.size() == 0 || max_generators == 0)
        throw UsageError("random dominant ideal needs variables and generators");
    const auto limit = std::min(max_generators, vars.size());
    const auto m = std::uniform_int_distribution<std::size_t>(1, limit)(rng);
    std::vector<std::size_t> order(vars.size());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::vector<Exponent>> e(m, std::vector<Exponent>(vars.size(), 0));
    std::uniform_int_distribution<Exponent> any(0, max_exponent);
    for (auto& row : e)
        for (auto& x : row) x = any(rng);
    // Generator g owns variable order[g]: its exponent there beats everyone else's.
    for (std::size_t g = 0; g < m; ++g) {
        const auto v = order[g];
        const Exponent own = std::uniform_int_distribution<Exponent>(1, max_exponent + 1)(rng);
        e[g][v] = own;
        for (std::size_t h = 0; h < m; ++h)
            if (h != g) e[h][v] = std::uniform_int_distribution<Exponent>(0, own - 1)(rng);
    }
    std::vector<Multidegree> gens;
    for (auto& row : e) gens.emplace_back(vars, std::move(row));
    return MonomialIdeal(vars, std::move(gens));
}

std::optional<SplittingCounterexample> find_non_splitting(std::uint64_t seed, std::size_t attempts,
                                                          FieldSpec field) {
    std::mt19937_64 rng(seed);
    const VariableSet vars{"a", "b", "c"};
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        const auto whole = random_monomial_ideal(rng, vars, 4, 2);
        if (whole.size() < 2) continue;
        const auto& gens = whole.generators();
        const auto mask = std::uniform_int_distribution<std::uint64_t>(
            1, (std::uint64_t{1} << gens.size()) - 2)(rng);
        std::vector<Multidegree> left, right;
        for (std::size_t g = 0; g < gens.size(); ++g) (mask >> g & 1 ? left : right).push_back(gens[g]);
        const MonomialIdeal j(vars, left), k(vars, right);
        auto report = verify_betti_splitting(whole, j, k, field);
        if (!report.is_splitting) return SplittingCounterexample{whole, j, k, *report.witness};
    }
    return std::nullopt;
}

}  // namespace crownbetti
