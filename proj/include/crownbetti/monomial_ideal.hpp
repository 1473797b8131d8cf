#pragma once

#include <set>
#include <string>
#include <vector>

#include "crownbetti/multidegree.hpp"

namespace crownbetti {

/// A monomial ideal held as its minimal generating set G(I), sorted
/// lexicographically by exponent vector. The zero ideal has no generators;
/// the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    explicit MonomialIdeal(VariableSet vars);

    /// Minimalizes `monomials` (drops duplicates and strict multiples).
    MonomialIdeal(VariableSet vars, std::vector<Multidegree> monomials);

    const VariableSet& vars() const { return vars_; }
    const std::vector<Multidegree>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    bool contains(const Multidegree& m) const;

    /// The same ideal over a different variable set, matched by label.
    MonomialIdeal relabeled(const VariableSet& target) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.vars_ == b.vars_ && a.gens_ == b.gens_;
    }

private:
    VariableSet vars_;
    std::vector<Multidegree> gens_;
};

MonomialIdeal minimalize(const VariableSet& vars, std::vector<Multidegree> monomials);

/// (I : m), generated by u / gcd(u, m) over u in G(I).
MonomialIdeal colon(const MonomialIdeal& ideal, const Multidegree& m);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// Generated by the pairwise lcms of the generators.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// m * I; the generator count is preserved.
MonomialIdeal scale(const Multidegree& m, const MonomialIdeal& ideal);

/// Every generator owns a variable in which its exponent strictly exceeds
/// that of every other generator.
bool is_dominant(const MonomialIdeal& ideal);

/// All distinct lcms of nonempty subsets of G(I), sorted.
std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal);

/// lcm of every minimal generator; throws UsageError on the zero ideal.
Multidegree lcm_of_generators(const MonomialIdeal& ideal);

std::set<std::string> support(const MonomialIdeal& ideal);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace crownbetti
