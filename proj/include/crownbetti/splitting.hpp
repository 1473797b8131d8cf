#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "crownbetti/betti_table.hpp"
#include "crownbetti/homology.hpp"
#include "crownbetti/monomial_ideal.hpp"

namespace crownbetti {

/// Betti table of a dominant ideal read off its Taylor complex:
/// beta_{i,a} = #{S subset G(I) : |S| = i + 1, lcm(S) = a}.
/// Throws UsageError for non-dominant input. Limited to 24 generators.
BettiTable taylor_betti_dominant(const MonomialIdeal& ideal);

struct SplittingWitness {
    int i;
    Multidegree a;
    Count whole;  // beta_{i,a}(I)
    Count parts;  // beta_{i,a}(J) + beta_{i,a}(K) + beta_{i-1,a}(J cap K)
};

struct SplittingReport {
    bool is_splitting;
    std::optional<SplittingWitness> witness;
    BettiTable whole;
    BettiTable left;
    BettiTable right;
    BettiTable intersection;
};

/// Checks beta_{i,a}(I) = beta_{i,a}(J) + beta_{i,a}(K) + beta_{i-1,a}(J cap K)
/// for all (i, a) with the homology oracle. Throws UsageError unless G(I) is
/// the disjoint union of G(J) and G(K).
SplittingReport verify_betti_splitting(const MonomialIdeal& whole, const MonomialIdeal& left,
                                       const MonomialIdeal& right, FieldSpec field = FieldSpec());

/// The hypotheses under which I + JK splits as I versus JK:
/// supp J is disjoint from supp I and supp K, G(I) and G(JK) are disjoint,
/// and each u in G(I) is u1 * u2 with u1 in G(K), deg u2 > 0 and
/// supp u2 disjoint from supp K.
bool check_splitting_lemma_hypotheses(const MonomialIdeal& i_part, const MonomialIdeal& j_part,
                                      const MonomialIdeal& k_part);

/// Betti table of I*J from those of I and J when supp I and supp J are disjoint.
BettiTable betti_product_disjoint(const BettiTable& left, const BettiTable& right);

/// Betti table of I + J from those of I and J when supp I and supp J are
/// disjoint. Each input is extended by a formal beta_{-1,0} = 1 so that the
/// convolution over j + k = i - 1 with j, k >= -1 runs without special cases.
BettiTable betti_sum_disjoint(const BettiTable& left, const BettiTable& right);

using BoundMemo = std::map<std::pair<std::int64_t, std::int64_t>, Count>;

/// Upper bound for beta_i(I_n) obtained by unwinding the mapping-cone
/// inequalities of the colon decomposition I_n = (I_{n-1} + x_n A) + y_n^{w_n} B:
///   b(n, i) = b(n-1, i) + 2 C(n-1, i+1) + 2 b(n-1, i-1) + (n-1) C(2n-4, i-1),
/// with b(2, 0) = 2, b(2, 1) = 1 and zero elsewhere.
Count mapping_cone_upper_bound(std::int64_t n, std::int64_t i, BoundMemo& memo);
Count mapping_cone_upper_bound(std::int64_t n, std::int64_t i);

/// The ideals of the colon decomposition of I_n.
struct CrownColonComponents {
    MonomialIdeal q_s;       // (I_{n-1}, x_n x_1 y_1^{w_1}, ..., x_n x_s y_s^{w_s})
    MonomialIdeal p_s;       // Q_{s-1} : x_n x_s y_s^{w_s}
    MonomialIdeal c;         // Q_{n-1}
    MonomialIdeal expected_p_s;  // (x_j, y_j^{w_j} : j <= n-1, j != s)
};

/// Builds Q_s, P_s and C over crown_variables(n). Throws std::logic_error if
/// P_s differs from the expected complete intersection, UsageError if s is
/// outside 1..n-1.
CrownColonComponents crowncolon_components(std::size_t n, const std::vector<Exponent>& weights,
                                           std::size_t s);

/// Pieces of I_n used by the colon decomposition, over crown_variables(n).
struct CrownDecomposition {
    MonomialIdeal previous;   // I_{n-1}
    MonomialIdeal a;          // (y_1^{w_1}, ..., y_{n-1}^{w_{n-1}})
    MonomialIdeal b;          // (x_1, ..., x_{n-1})
    MonomialIdeal left;       // I_{n-1} + x_n A
    MonomialIdeal right;      // y_n^{w_n} B
};
CrownDecomposition crown_decomposition(std::size_t n, const std::vector<Exponent>& weights);

/// A random monomial ideal with at most `max_generators` generators over
/// `vars`, exponents in [0, max_exponent]. Never the zero or unit ideal.
MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const VariableSet& vars,
                                    std::size_t max_generators, Exponent max_exponent);

/// A random dominant ideal: each generator gets a private variable with an
/// exponent above every other generator's.
MonomialIdeal random_dominant_ideal(std::mt19937_64& rng, const VariableSet& vars,
                                    std::size_t max_generators, Exponent max_exponent);

struct SplittingCounterexample {
    MonomialIdeal whole;
    MonomialIdeal left;
    MonomialIdeal right;
    SplittingWitness witness;
};

/// Draws random ideals and generator partitions until one fails to be a Betti
/// splitting or `attempts` runs out.
std::optional<SplittingCounterexample> find_non_splitting(std::uint64_t seed, std::size_t attempts,
                                                          FieldSpec field = FieldSpec());

}  // namespace crownbetti
