#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace crownbetti {

using Exponent = std::uint32_t;
using Count = std::uint64_t;

/// An ordered list of distinct variable labels. The order fixes exponent
/// vector indexing. Copies share the underlying storage.
class VariableSet {
public:
    VariableSet();
    explicit VariableSet(std::vector<std::string> names);
    VariableSet(std::initializer_list<std::string> names);

    std::size_t size() const { return data_->names.size(); }
    const std::string& name(std::size_t index) const { return data_->names[index]; }
    const std::vector<std::string>& names() const { return data_->names; }

    bool contains(const std::string& label) const;
    /// Throws UsageError for unknown labels.
    std::size_t index_of(const std::string& label) const;

    friend bool operator==(const VariableSet& a, const VariableSet& b);

private:
    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, std::size_t> index;
    };
    static std::shared_ptr<const Data> empty_data();
    std::shared_ptr<const Data> data_;
};

/// Exponent vector over a VariableSet; doubles as the monomial x^a.
class Multidegree {
public:
    Multidegree() = default;
    /// The zero vector (the monomial 1).
    explicit Multidegree(VariableSet vars);
    Multidegree(VariableSet vars, std::vector<Exponent> exponents);

    /// Builds a monomial from (label, exponent) pairs; repeated labels add up.
    static Multidegree from_powers(const VariableSet& vars,
                                   const std::vector<std::pair<std::string, Exponent>>& powers);

    const VariableSet& vars() const { return vars_; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    std::size_t size() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }

    Count degree() const;
    bool is_one() const;

    /// Maps this multidegree into another variable set by label. Labels with
    /// positive exponent must exist in `target`.
    Multidegree relabeled(const VariableSet& target) const;

    friend bool operator==(const Multidegree& a, const Multidegree& b);
    /// Lexicographic on exponent vectors; only meaningful on a shared variable set.
    friend std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b);

private:
    VariableSet vars_;
    std::vector<Exponent> exps_;
};

/// Throws UsageError if `a` and `b` live over different variable sets.
void require_same_vars(const Multidegree& a, const Multidegree& b);

Multidegree lcm(const Multidegree& a, const Multidegree& b);
Multidegree gcd(const Multidegree& a, const Multidegree& b);
/// a + b, i.e. the product of monomials.
Multidegree multiply(const Multidegree& a, const Multidegree& b);
/// a - b; requires divides(b, a).
Multidegree quotient(const Multidegree& a, const Multidegree& b);
bool divides(const Multidegree& a, const Multidegree& b);

std::set<std::string> support(const Multidegree& a);
/// Indices of the variables with positive exponent, ascending.
std::vector<std::size_t> support_indices(const Multidegree& a);

/// Binomial coefficient, zero when p < 0 or p > q. Throws std::overflow_error
/// if the value does not fit in 64 bits.
Count binomial(std::int64_t q, std::int64_t p);
Count pow2(int e);

/// Sum over k = 2..n of 2^{m+4-2k} C(n-k, m+4-2k) C(n-2, k-2): the number of
/// m-subsets of n-2 disjoint pairs, counted by how many complete pairs they
/// contain. Equals C(2n-4, m).
Count binomial_pair_decomposition(std::int64_t n, std::int64_t m);

/// Human-readable monomial, e.g. "x1*y2^3"; the zero vector renders as "1".
std::string to_string(const Multidegree& a);

}  // namespace crownbetti
