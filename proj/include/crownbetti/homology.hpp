#pragma once

#include <cstdint>
#include <vector>

#include "crownbetti/betti_table.hpp"
#include "crownbetti/monomial_ideal.hpp"
#include "crownbetti/sparse_rank.hpp"

namespace crownbetti {

using FaceMask = std::uint64_t;

/// A simplicial complex on a ground set of variable indices. Faces are
/// bitmasks over positions in `ground()`. A complex with no faces is void;
/// the complex whose only face is the empty set is {emptyset}.
class SimplicialComplex {
public:
    /// Throws UsageError unless `faces` is closed under taking subsets.
    SimplicialComplex(std::vector<std::size_t> ground, std::vector<FaceMask> faces);

    /// The downward closure of `facets`.
    static SimplicialComplex generated_by(std::vector<std::size_t> ground,
                                          const std::vector<FaceMask>& facets);

    const std::vector<std::size_t>& ground() const { return ground_; }
    /// Sorted by (dimension, mask).
    const std::vector<FaceMask>& faces() const { return faces_; }
    bool is_void() const { return faces_.empty(); }
    /// -1 for {emptyset}, -2 for the void complex.
    int dimension() const;
    /// f_d for d = -1..dimension(), stored at index d + 1.
    std::vector<std::size_t> face_counts() const;

private:
    std::vector<std::size_t> ground_;
    std::vector<FaceMask> faces_;
};

/// The largest support the oracle will enumerate (2^24 candidate faces).
inline constexpr std::size_t kMaxComplexGround = 24;

/// Faces are the squarefree b on supp(a) with x^{a-b} in I.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Multidegree& a);

/// Ranks of reduced homology over `field`, indexed by dimension + 1
/// (index 0 is dimension -1). Empty for the void complex.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field);

struct OracleOptions {
    /// Evaluate every a <= lcm(G(I)) instead of only the lcm lattice.
    bool audit_full_lattice = false;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// All multigraded Betti numbers of I via beta_{i,a}(I) = dim H~_{i-1}(K^a(I)).
/// The zero ideal yields an empty table; the unit ideal is rejected.
BettiTable multigraded_betti(const MonomialIdeal& ideal, FieldSpec field = FieldSpec(),
                             const OracleOptions& options = {});

}  // namespace crownbetti
