#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "crownbetti/error.hpp"
#include "crownbetti/graph.hpp"
#include "crownbetti/monomial_ideal.hpp"
#include "crownbetti/multidegree.hpp"
#include "support.hpp"

using namespace crownbetti;
using testing::ideal;
using testing::mono;

namespace {

const VariableSet XY{"x", "y"};
const VariableSet XYZ{"x", "y", "z"};

Multidegree random_multidegree(std::mt19937_64& rng, const VariableSet& vars, Exponent max_exp) {
    std::uniform_int_distribution<Exponent> e(0, max_exp);
    std::vector<Exponent> out(vars.size());
    for (auto& v : out) v = e(rng);
    return Multidegree(vars, out);
}

}  // namespace

TEST_SUITE("variables") {
    TEST_CASE("labels keep their order and index") {
        const VariableSet v{"b", "a", "c"};
        CHECK(v.size() == 3);
        CHECK(v.index_of("a") == 1);
        CHECK(v.name(2) == "c");
        CHECK(v.contains("b"));
        CHECK_FALSE(v.contains("d"));
        CHECK_THROWS_AS(v.index_of("d"), UsageError);
    }

    TEST_CASE("duplicate or empty labels are rejected") {
        CHECK_THROWS_AS(VariableSet({"x", "x"}), UsageError);
        CHECK_THROWS_AS(VariableSet({"x", ""}), UsageError);
    }

    TEST_CASE("equality is by labels") {
        CHECK(VariableSet{"x", "y"} == XY);
        CHECK_FALSE(VariableSet{"y", "x"} == XY);
    }
}

TEST_SUITE("multidegree") {
    TEST_CASE("construction checks the length") {
        CHECK_THROWS_AS(Multidegree(XY, {1, 2, 3}), UsageError);
        CHECK(Multidegree(XY).is_one());
        CHECK(Multidegree(XY, {2, 1}).degree() == 3);
    }

    TEST_CASE("from_powers adds repeated labels") {
        const auto m = Multidegree::from_powers(XY, {{"x", 1}, {"y", 2}, {"x", 1}});
        CHECK(m == Multidegree(XY, {2, 2}));
        CHECK_THROWS_AS(Multidegree::from_powers(XY, {{"q", 1}}), UsageError);
    }

    TEST_CASE("lcm is the componentwise maximum") {
        const Multidegree a(XY, {2, 0}), b(XY, {1, 1});
        CHECK(lcm(a, b) == Multidegree(XY, {2, 1}));
        CHECK(lcm(a, a) == a);
        CHECK(lcm(Multidegree(XY), b) == b);
        CHECK(gcd(a, b) == Multidegree(XY, {1, 0}));
    }

    TEST_CASE("divides is the componentwise order") {
        CHECK(divides(Multidegree(XY, {1, 0}), Multidegree(XY, {1, 1})));
        CHECK_FALSE(divides(Multidegree(XY, {2, 0}), Multidegree(XY, {1, 1})));
        const Multidegree a(XY, {3, 4});
        CHECK(divides(a, a));
    }

    TEST_CASE("mixed variable sets are a usage error") {
        const Multidegree a(XY, {1, 0}), b(XYZ, {1, 0, 0});
        CHECK_THROWS_AS(lcm(a, b), UsageError);
        CHECK_THROWS_AS(gcd(a, b), UsageError);
        CHECK_THROWS_AS(divides(a, b), UsageError);
        CHECK_THROWS_AS(multiply(a, b), UsageError);
    }

    TEST_CASE("quotient needs divisibility") {
        CHECK(quotient(Multidegree(XY, {3, 1}), Multidegree(XY, {1, 1})) == Multidegree(XY, {2, 0}));
        CHECK_THROWS_AS(quotient(Multidegree(XY, {1, 0}), Multidegree(XY, {0, 1})), UsageError);
    }

    TEST_CASE("support lists the variables with positive exponent") {
        const auto vars = crown_variables(2);
        CHECK(support(mono(vars, "x1^2*y2")) == std::set<std::string>{"x1", "y2"});
        CHECK(support(Multidegree(vars)).empty());
        const Exponent w1 = 3, w2 = 2;
        const Multidegree m(vars, {1, 1, w1, w2});
        CHECK(support(m) == std::set<std::string>{"x1", "x2", "y1", "y2"});
        CHECK(support_indices(mono(vars, "x2*y1")) == std::vector<std::size_t>{1, 2});
    }

    TEST_CASE("rendering") {
        const auto vars = crown_variables(2);
        CHECK(to_string(mono(vars, "x1*y2^3")) == "x1*y2^3");
        CHECK(to_string(Multidegree(vars)) == "1");
        CHECK(to_string(mono(vars, "y1^2*x2")) == "x2*y1^2");
    }

    TEST_CASE("relabeling moves exponents by label") {
        const VariableSet target{"z", "y", "x"};
        CHECK(Multidegree(XY, {2, 5}).relabeled(target) == Multidegree(target, {0, 5, 2}));
        CHECK(Multidegree(XYZ, {1, 0, 0}).relabeled(XY) == Multidegree(XY, {1, 0}));
        CHECK_THROWS_AS(Multidegree(XYZ, {0, 0, 1}).relabeled(XY), UsageError);
    }

    TEST_CASE("lcm laws on random multidegrees") {
        std::mt19937_64 rng(20240611);
        for (int trial = 0; trial < 500; ++trial) {
            const auto a = random_multidegree(rng, XYZ, 4);
            const auto b = random_multidegree(rng, XYZ, 4);
            const auto c = random_multidegree(rng, XYZ, 4);
            CHECK(lcm(a, b) == lcm(b, a));
            CHECK(lcm(lcm(a, b), c) == lcm(a, lcm(b, c)));
            CHECK(lcm(a, a) == a);
            CHECK(divides(a, lcm(a, b)));
            CHECK(divides(gcd(a, b), a));
            CHECK(multiply(lcm(a, b), gcd(a, b)) == multiply(a, b));
            auto sa = support(a), sb = support(b), sl = support(lcm(a, b));
            sa.insert(sb.begin(), sb.end());
            CHECK(sl == sa);
            if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
            if (divides(a, b) && divides(b, a)) CHECK(a == b);
        }
    }
}

TEST_SUITE("binomial") {
    TEST_CASE("values and the zero extension") {
        CHECK(binomial(3, 2) == 3);
        CHECK(binomial(1, -1) == 0);
        CHECK(binomial(2, 3) == 0);
        CHECK(binomial(0, 0) == 1);
        CHECK(binomial(-1, 0) == 0);
        CHECK(binomial(60, 30) == 118264581564861424ULL);
    }

    TEST_CASE("pow2") {
        CHECK(pow2(0) == 1);
        CHECK(pow2(10) == 1024);
        CHECK_THROWS(pow2(-1));
    }

    TEST_CASE("pair decomposition at n=4, m=2") {
        CHECK(binomial(4, 2) == 6);
        CHECK(binomial_pair_decomposition(4, 2) == 6);
    }

    TEST_CASE("pair decomposition matches C(2n-4, m) exhaustively") {
        for (std::int64_t n = 2; n <= 12; ++n)
            for (std::int64_t m = 0; m <= 2 * n - 4; ++m)
                CHECK(binomial_pair_decomposition(n, m) == binomial(2 * n - 4, m));
    }
}

TEST_SUITE("monomial ideal") {
    TEST_CASE("minimalize drops multiples and duplicates") {
        CHECK(ideal(XY, {"x^2", "x^2*y", "x*y"}).generators() ==
              std::vector<Multidegree>{mono(XY, "x*y"), mono(XY, "x^2")});
        CHECK(ideal(XY, {"x", "x"}).size() == 1);
        CHECK(minimalize(XY, {}).is_zero());
        const auto i = ideal(XYZ, {"x*y", "y^3", "x^2*z", "x*y*z"});
        CHECK(minimalize(XYZ, i.generators()) == i);
    }

    TEST_CASE("generators are an antichain in sorted order") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Multidegree> ms;
            for (int k = 0; k < 6; ++k) ms.push_back(random_multidegree(rng, XYZ, 3));
            const MonomialIdeal i(XYZ, ms);
            const auto& g = i.generators();
            CHECK(std::is_sorted(g.begin(), g.end()));
            for (std::size_t a = 0; a < g.size(); ++a) {
                CHECK(i.contains(g[a]));
                for (std::size_t b = 0; b < g.size(); ++b)
                    if (a != b) CHECK_FALSE(divides(g[a], g[b]));
            }
            for (const auto& m : ms) CHECK(i.contains(m));
        }
    }

    TEST_CASE("membership") {
        const auto i = ideal(XY, {"x^2", "x*y"});
        CHECK(i.contains(mono(XY, "x^2*y")));
        CHECK_FALSE(i.contains(mono(XY, "y^3")));
        CHECK_FALSE(MonomialIdeal(XY).contains(mono(XY, "x*y")));
        CHECK_THROWS_AS(i.contains(Multidegree(XYZ)), UsageError);
        CHECK(ideal(XY, {"1"}).is_unit());
    }

    TEST_CASE("colon by a monomial") {
        const auto i = ideal(XY, {"x^2", "x*y"});
        CHECK(colon(i, Multidegree(XY)) == i);
        CHECK(colon(i, mono(XY, "x")) == ideal(XY, {"x", "y"}));
        CHECK_THROWS_AS(colon(i, Multidegree(XYZ)), UsageError);

        const auto vars = crown_variables(3);
        const std::vector<Exponent> w{2, 3, 4};
        const auto i2 = edge_ideal(crown(2, {2, 3})).relabeled(vars);
        CHECK(colon(i2, mono(vars, "x3*x1*y1^2")) == ideal(vars, {"x2", "y2^3"}));
    }

    TEST_CASE("colon contains the ideal") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Multidegree> ms;
            for (int k = 0; k < 4; ++k) ms.push_back(random_multidegree(rng, XYZ, 3));
            const MonomialIdeal i(XYZ, ms);
            const auto c = colon(i, random_multidegree(rng, XYZ, 3));
            for (const auto& g : i.generators()) CHECK(c.contains(g));
        }
    }

    TEST_CASE("sum, product and intersection") {
        const auto x = ideal(XY, {"x"}), y = ideal(XY, {"y"});
        CHECK(intersect(x, y) == ideal(XY, {"x*y"}));
        CHECK(product(x, y) == ideal(XY, {"x*y"}));
        CHECK(sum(x, MonomialIdeal(XY)) == x);
        CHECK(sum(x, y) == ideal(XY, {"x", "y"}));
        CHECK(product(x, MonomialIdeal(XY)).is_zero());
        CHECK(intersect(ideal(XY, {"x^2", "y"}), ideal(XY, {"x*y", "x^3"})) == ideal(XY, {"x*y", "x^3"}));
        CHECK_THROWS_AS(sum(x, ideal(XYZ, {"z"})), UsageError);
    }

    TEST_CASE("disjoint supports: intersection equals product") {
        const VariableSet v{"a", "b", "c", "d"};
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<Exponent> e(0, 3);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Multidegree> left, right;
            for (int k = 0; k < 3; ++k) {
                left.push_back(Multidegree(v, {e(rng) + 1, e(rng), 0, 0}));
                right.push_back(Multidegree(v, {0, 0, e(rng) + 1, e(rng)}));
            }
            const MonomialIdeal i(v, left), j(v, right);
            CHECK(intersect(i, j) == product(i, j));
        }
    }

    TEST_CASE("crown decomposition intersection is y_3 C") {
        const auto vars = crown_variables(3);
        const auto i2 = edge_ideal(crown(2)).relabeled(vars);
        const auto a = ideal(vars, {"y1", "y2"});
        const auto b = ideal(vars, {"x1", "x2"});
        const auto left = sum(i2, scale(mono(vars, "x3"), a));
        const auto right = scale(mono(vars, "y3"), b);
        const auto c = sum(i2, ideal(vars, {"x3*x1*y1", "x3*x2*y2"}));
        CHECK(intersect(left, right) == scale(mono(vars, "y3"), c));
    }

    TEST_CASE("scaling") {
        const VariableSet v{"x1", "x2", "y"};
        const auto i = ideal(v, {"x1", "x2"});
        CHECK(scale(Multidegree(v), i) == i);
        CHECK(scale(mono(v, "y^3"), i) == ideal(v, {"x1*y^3", "x2*y^3"}));
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Multidegree> ms;
            for (int k = 0; k < 5; ++k) ms.push_back(random_multidegree(rng, XYZ, 3));
            const MonomialIdeal j(XYZ, ms);
            const auto s = scale(random_multidegree(rng, XYZ, 2), j);
            CHECK(s.size() == j.size());
        }
    }

    TEST_CASE("dominance") {
        const VariableSet v{"x1", "x2", "x3"};
        CHECK(is_dominant(ideal(v, {"x1", "x2", "x3"})));
        CHECK_FALSE(is_dominant(ideal(XYZ, {"x*y", "y*z", "z*x"})));
        CHECK(is_dominant(ideal(XY, {"x^2*y", "x*y^2"})));

        // A for s = 3 with weights (2, 1, 3).
        const auto vars = crown_variables(3);
        CHECK(is_dominant(ideal(vars, {"y1^2", "y2", "x1*y3^3", "x2*y3^3"})));
    }

    TEST_CASE("complete intersections are dominant") {
        const VariableSet v{"a", "b", "c", "d", "e", "f"};
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<Exponent> e(1, 4);
        for (int trial = 0; trial < 30; ++trial) {
            // Three generators on the disjoint blocks {a,b}, {c,d}, {e,f}.
            std::vector<Multidegree> gens;
            for (std::size_t blk = 0; blk < 3; ++blk) {
                std::vector<Exponent> x(6, 0);
                x[2 * blk] = e(rng);
                x[2 * blk + 1] = e(rng) - 1;
                gens.emplace_back(v, x);
            }
            CHECK(is_dominant(MonomialIdeal(v, gens)));
        }
    }

    TEST_CASE("lcm lattice") {
        CHECK(lcm_lattice(ideal(XY, {"x^2", "x*y"})) ==
              std::vector<Multidegree>{mono(XY, "x*y"), mono(XY, "x^2"), mono(XY, "x^2*y")});
        CHECK(lcm_lattice(ideal(XY, {"x*y^4"})) == std::vector<Multidegree>{mono(XY, "x*y^4")});
        CHECK(lcm_lattice(edge_ideal(crown(2, {4, 7}))).size() == 3);
        CHECK(lcm_lattice(MonomialIdeal(XY)).empty());
    }

    TEST_CASE("lcm lattice is closed and contains every generator") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Multidegree> ms;
            for (int k = 0; k < 5; ++k) ms.push_back(random_multidegree(rng, XYZ, 3));
            const MonomialIdeal i(XYZ, ms);
            const auto lattice = lcm_lattice(i);
            const std::set<Multidegree> members(lattice.begin(), lattice.end());
            for (const auto& g : i.generators()) CHECK(members.count(g));
            for (const auto& a : lattice)
                for (const auto& b : lattice) CHECK(members.count(lcm(a, b)));
            CHECK(lattice.back() == lcm_of_generators(i));
        }
    }

    TEST_CASE("support of an ideal") {
        CHECK(support(MonomialIdeal(XYZ)).empty());
        CHECK(support(ideal(XYZ, {"x^2*z"})) == std::set<std::string>{"x", "z"});
        CHECK(support(ideal(XYZ, {"x^2", "y*z"})) == std::set<std::string>{"x", "y", "z"});
        CHECK_THROWS_AS(lcm_of_generators(MonomialIdeal(XYZ)), UsageError);
    }

    TEST_CASE("rendering") {
        CHECK(to_string(ideal(XY, {"x^2", "x*y"})) == "(x*y, x^2)");
        CHECK(to_string(MonomialIdeal(XY)) == "(0)");
    }
}
