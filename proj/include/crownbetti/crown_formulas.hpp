#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "crownbetti/betti_table.hpp"
#include "crownbetti/graph.hpp"

namespace crownbetti {

/// beta_i(I_n) = sum_{k=2}^{n} (k-1) 2^{i+3-2k} C(n,k) C(n-k, i+3-2k)
///             + (2^{i+2} - 2) C(n, i+2).
/// Independent of the weights; zero outside 0 <= i <= 2n-3.
Count total_betti_closed_form(std::int64_t n, std::int64_t i);

/// Theta of every induced subgraph of G_n on i+3 vertices with exactly k
/// complete pairs {x_j, y_j}; sorted.
std::vector<Multidegree> enumerate_N(std::size_t n, const std::vector<Exponent>& weights,
                                     std::int64_t i, std::size_t k);

/// Theta of every induced complete bipartite subgraph of G_n on i+2 vertices
/// (no complete pair, both sides nonempty); sorted.
std::vector<Multidegree> enumerate_M(std::size_t n, const std::vector<Exponent>& weights,
                                     std::int64_t i);

/// The full predicted table: k-1 on N_i^k, 1 on M_i, for 0 <= i <= 2n-3.
BettiTable multigraded_betti_formula(std::size_t n, const std::vector<Exponent>& weights = {});

/// beta_{i,j}(I_n) from the multigraded prediction.
Count graded_betti_formula(std::size_t n, const std::vector<Exponent>& weights, std::int64_t i,
                           std::int64_t j);

/// sum(w) - n + 3.
std::int64_t regularity_formula(std::size_t n, const std::vector<Exponent>& weights = {});

struct CrownFamily {
    std::size_t s;
};
struct UnbalancedFamily {
    std::size_t s, t;
};
struct GeneralizedFamily {
    std::size_t m, s, t;
};
struct BipartiteFamily {
    std::size_t s, t;
};
using FamilySpec = std::variant<CrownFamily, UnbalancedFamily, GeneralizedFamily, BipartiteFamily>;

struct FamilyTopBetti {
    int pdim;
    Multidegree top_multidegree;
    Count top_value;
};

/// The graph of a family member. Weights are for the y-vertices.
WeightedOrientedGraph family_graph(const FamilySpec& family, const std::vector<Exponent>& weights = {});

/// Projective dimension and the single nonzero top Betti number:
///   crown G_s:          (2s-3,  Theta, s-1)
///   unbalanced G_{s,t}: (s+t-3, Theta, t-1)
///   generalized G_{m,s,t}: (s+t-3, Theta, m-1)
///   complete bipartite K_{s,t}: (s+t-2, Theta, 1)
FamilyTopBetti family_top_betti(const FamilySpec& family, const std::vector<Exponent>& weights = {});

std::string to_string(const FamilySpec& family);

/// The (I, J, K) to which the splitting criterion is applied when inducting on
/// the family. I + JK is the whole edge ideal except for G_s, where it is
/// I_{s-1} + y_s^{w_s}(x_1, ..., x_{s-1}), i.e. (I_s, x_s) without x_s.
///   crown G_s:             (I_{s-1}, (y_s^{w_s}), (x_1, ..., x_{s-1})), s >= 3
///   unbalanced G_{s,t}:    (I_t, (x_{t+1}, ..., x_s), (y_1^{w_1}, ..., y_t^{w_t}))
///   generalized G_{m,s,t}: (I_{s,m}, (y_{m+1}^{w_{m+1}}, ..., y_t^{w_t}), (x_1, ..., x_s))
/// all over the family's variables. Throws UsageError for complete bipartite
/// graphs and for G_2.
struct SplittingTriple {
    MonomialIdeal i;
    MonomialIdeal j;
    MonomialIdeal k;
};
SplittingTriple family_splitting_triple(const FamilySpec& family, const std::vector<Exponent>& weights = {});

struct Contribution {
    int i;
    Multidegree theta;
    Count value;
    friend bool operator==(const Contribution&, const Contribution&) = default;
};

/// The top Betti number that G_n[W] contributes to I_n at Theta_{G_n[W]}, or
/// nullopt when the class contributes nothing (one complete pair, or a
/// one-sided or empty W).
std::optional<Contribution> predicted_contribution(std::size_t n, const std::vector<Exponent>& weights,
                                                   const CrownSubset& subset);

/// Theta_{G_n[W]} built straight from the vertex selection:
/// prod_{x_i in W} x_i * prod_{y_j in W} y_j^{w_j}. Only valid when every
/// vertex of W is non-isolated.
Multidegree theta_of_selection(std::size_t n, const std::vector<Exponent>& weights,
                               const CrownSubset& subset);

}  // namespace crownbetti
