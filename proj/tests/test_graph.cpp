#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "crownbetti/crown_formulas.hpp"
#include "crownbetti/error.hpp"
#include "crownbetti/graph.hpp"
#include "support.hpp"

using namespace crownbetti;
using testing::ideal;
using testing::mono;

TEST_SUITE("graph") {
    TEST_CASE("validation") {
        const VariableSet v{"a", "b", "c"};
        CHECK_NOTHROW(WeightedOrientedGraph(v, {{0, 1}, {1, 2}}, {1, 1, 1}));
        CHECK_THROWS_AS(WeightedOrientedGraph(v, {{0, 0}}, {1, 1, 1}), UsageError);
        CHECK_THROWS_AS(WeightedOrientedGraph(v, {{0, 1}, {0, 1}}, {1, 1, 1}), UsageError);
        CHECK_THROWS_AS(WeightedOrientedGraph(v, {{0, 1}, {1, 0}}, {1, 1, 1}), UsageError);
        CHECK_THROWS_AS(WeightedOrientedGraph(v, {{0, 3}}, {1, 1, 1}), UsageError);
        CHECK_THROWS_AS(WeightedOrientedGraph(v, {}, {1, 0, 1}), UsageError);
        CHECK_THROWS_AS(WeightedOrientedGraph(v, {}, {1, 1}), UsageError);
    }

    TEST_CASE("edge ideal uses the head weight") {
        const VariableSet v{"a", "b"};
        CHECK(edge_ideal(WeightedOrientedGraph(v, {{0, 1}}, {5, 3})) == ideal(v, {"a*b^3"}));
        CHECK(edge_ideal(WeightedOrientedGraph(v, {{1, 0}}, {5, 3})) == ideal(v, {"a^5*b"}));
        CHECK(edge_ideal(WeightedOrientedGraph(v, {}, {1, 1})).is_zero());
    }

    TEST_CASE("crown graph G_2") {
        const auto g = crown(2, {2, 5});
        CHECK(g.edges().size() == 2);
        CHECK(edge_ideal(g) == ideal(crown_variables(2), {"x1*y2^5", "x2*y1^2"}));
        CHECK(theta(g) == mono(crown_variables(2), "x1*x2*y1^2*y2^5"));
    }

    TEST_CASE("crown edge and generator counts") {
        CHECK(crown(3).edges().size() == 6);
        for (std::size_t n = 2; n <= 6; ++n) CHECK(edge_ideal(crown(n)).size() == n * (n - 1));
        CHECK(edge_ideal(crown(4)).size() == 12);
        CHECK_THROWS_AS(crown(1), UsageError);
        CHECK_THROWS_AS(crown(3, {1, 1}), UsageError);
        CHECK_THROWS_AS(crown(3, {1, 0, 1}), UsageError);
    }

    TEST_CASE("unbalanced crown") {
        CHECK(unbalanced_crown(4, 2).edges().size() == 6);
        CHECK(unbalanced_crown(3, 2).edges().size() == 4);
        const auto v = bipartite_variables(3, 2);
        CHECK(edge_ideal(unbalanced_crown(3, 2)) == ideal(v, {"x1*y2", "x2*y1", "x3*y1", "x3*y2"}));
        CHECK_THROWS_AS(unbalanced_crown(3, 3), UsageError);
        CHECK_THROWS_AS(unbalanced_crown(3, 1), UsageError);
        CHECK_THROWS_AS(unbalanced_crown(2, 3), UsageError);
    }

    TEST_CASE("generalized crown") {
        const auto g = generalized_crown(2, 3, 3);
        CHECK(g.edges().size() == 7);
        const auto v = bipartite_variables(3, 3);
        CHECK(edge_ideal(g) == ideal(v, {"x1*y2", "x1*y3", "x2*y1", "x2*y3", "x3*y1", "x3*y2", "x3*y3"}));
        CHECK_THROWS_AS(generalized_crown(2, 3, 2), UsageError);
        CHECK_THROWS_AS(generalized_crown(1, 3, 3), UsageError);
        CHECK_THROWS_AS(generalized_crown(3, 3, 4), UsageError);
    }

    TEST_CASE("complete bipartite") {
        const auto v11 = bipartite_variables(1, 1);
        CHECK(edge_ideal(complete_bipartite(1, 1, {4})) == ideal(v11, {"x1*y1^4"}));
        CHECK(edge_ideal(complete_bipartite(2, 2)).size() == 4);
        const auto v = bipartite_variables(2, 3);
        const std::vector<Exponent> w{2, 1, 3};
        const auto a = ideal(v, {"x1", "x2"});
        const auto b = ideal(v, {"y1^2", "y2", "y3^3"});
        CHECK(edge_ideal(complete_bipartite(2, 3, w)) == product(a, b));
        CHECK(theta(complete_bipartite(1, 1, {4})) == mono(v11, "x1*y1^4"));
        CHECK_THROWS_AS(complete_bipartite(0, 2), UsageError);
    }

    TEST_CASE("induced subgraphs") {
        const auto g = crown(3, {1, 2, 3});
        const auto all = std::set<std::string>(g.vertices().names().begin(), g.vertices().names().end());
        const auto same = induced_subgraph(g, all);
        CHECK(same.vertices() == g.vertices());
        CHECK(same.edges() == g.edges());
        CHECK(edge_ideal(induced_subgraph(g, {"x1", "y1"})).is_zero());
        const auto h = induced_subgraph(g, {"x1", "x2", "y1", "y2"});
        CHECK(edge_ideal(h).relabeled(crown_variables(2)) == edge_ideal(crown(2, {1, 2})));
        CHECK(h.vertices().names() == std::vector<std::string>{"x1", "x2", "y1", "y2"});
        CHECK_THROWS_AS(induced_subgraph(g, {"x4"}), UsageError);
    }

    TEST_CASE("induced edge ideal is the generators supported in W") {
        const std::size_t n = 4;
        const std::vector<Exponent> w{1, 3, 2, 2};
        const auto g = crown(n, w);
        const auto full = edge_ideal(g);
        for (std::uint64_t code = 0; code < (1u << (2 * n)); ++code) {
            const auto subset = CrownSubset::from_code(n, code);
            const auto labels = subset.labels();
            std::vector<Multidegree> inside;
            for (const auto& u : full.generators()) {
                const auto s = support(u);
                if (std::includes(labels.begin(), labels.end(), s.begin(), s.end())) inside.push_back(u);
            }
            const auto h = induced_subgraph(g, labels);
            CHECK(edge_ideal(h).relabeled(g.vertices()) == MonomialIdeal(g.vertices(), inside));
            if (!edge_ideal(h).is_zero()) {
                std::set<std::string> busy;
                for (auto v : h.non_isolated()) busy.insert(h.vertices().name(v));
                CHECK(support(theta(h)) == busy);
            }
        }
    }

    TEST_CASE("theta of an edgeless graph") {
        const VariableSet v{"a", "b"};
        CHECK_THROWS_WITH_AS(theta(WeightedOrientedGraph(v, {}, {1, 1})), "no edges", UsageError);
        CHECK(theta(WeightedOrientedGraph(v, {{1, 0}}, {2, 1})) == mono(v, "a^2*b"));
    }

    TEST_CASE("relabeling indices commutes with the crown construction") {
        std::mt19937_64 rng(424242);
        for (std::size_t n = 2; n <= 5; ++n) {
            std::vector<std::size_t> sigma(n);
            std::iota(sigma.begin(), sigma.end(), 0);
            std::vector<Exponent> w(n);
            std::uniform_int_distribution<Exponent> pick(1, 4);
            for (int trial = 0; trial < 5; ++trial) {
                std::shuffle(sigma.begin(), sigma.end(), rng);
                for (auto& x : w) x = pick(rng);
                // Rename x_i -> x_sigma(i), y_i -> y_sigma(i).
                std::vector<std::string> renamed(2 * n);
                std::vector<Exponent> permuted(n);
                for (std::size_t i = 0; i < n; ++i) {
                    renamed[i] = "x" + std::to_string(sigma[i] + 1);
                    renamed[n + i] = "y" + std::to_string(sigma[i] + 1);
                    permuted[sigma[i]] = w[i];
                }
                const VariableSet target(renamed);
                const auto original = edge_ideal(crown(n, w));
                std::vector<Multidegree> moved;
                for (const auto& u : original.generators()) moved.emplace_back(target, u.exponents());
                const MonomialIdeal image(target, moved);
                CHECK(image.relabeled(crown_variables(n)) == edge_ideal(crown(n, permuted)));
            }
        }
    }
}

TEST_SUITE("crown subsets") {
    TEST_CASE("labels and codes") {
        const auto s = CrownSubset::from_labels(3, {"x1", "y1", "x3"});
        CHECK(s.x_mask == 0b101);
        CHECK(s.y_mask == 0b001);
        CHECK(s.size() == 3);
        CHECK(s.complete_pairs() == 1);
        CHECK(s.labels() == std::set<std::string>{"x1", "x3", "y1"});
        const auto c = CrownSubset::from_code(3, 0b001101);
        CHECK(c.x_mask == 0b101);
        CHECK(c.y_mask == 0b001);
        CHECK_THROWS_AS(CrownSubset::from_labels(3, {"x4"}), UsageError);
        CHECK_THROWS_AS(CrownSubset::from_labels(3, {"z1"}), UsageError);
    }

    TEST_CASE("classification") {
        const std::size_t n = 3;
        const auto all = CrownSubset::from_code(n, 0b111111);
        CHECK(classify_induced(n, all) == SubgraphClass{SubgraphKind::CrownLike, 3});
        CHECK(classify_induced(n, CrownSubset::from_labels(n, {"x1", "y2"})).kind ==
              SubgraphKind::CompleteBipartite);
        CHECK(classify_induced(n, CrownSubset::from_labels(n, {"x1", "y1", "x2"})).kind == SubgraphKind::OnePair);
        CHECK(classify_induced(n, CrownSubset::from_labels(n, {"x1", "x2"})).kind == SubgraphKind::Degenerate);
        CHECK(classify_induced(n, CrownSubset{}).kind == SubgraphKind::Degenerate);
        CHECK(to_string(SubgraphKind::CrownLike) == "crown-like");
    }

    TEST_CASE("crown-like subsets have no isolated vertices") {
        const std::size_t n = 4;
        const auto g = crown(n);
        for (std::uint64_t code = 0; code < (1u << (2 * n)); ++code) {
            const auto subset = CrownSubset::from_code(n, code);
            const auto cls = classify_induced(n, subset);
            if (cls.kind != SubgraphKind::CrownLike) continue;
            CHECK(cls.complete_pairs == subset.complete_pairs());
            CHECK(cls.complete_pairs >= 2);
            const auto h = induced_subgraph(g, subset.labels());
            CHECK(h.non_isolated().size() == subset.size());
        }
    }
}
