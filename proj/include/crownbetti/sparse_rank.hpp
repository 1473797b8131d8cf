#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace crownbetti {

/// Coefficient field: characteristic 0 (the rationals) or a prime p < 2^31.
class FieldSpec {
public:
    /// Throws UsageError if `characteristic` is neither 0 nor a prime below 2^31.
    explicit FieldSpec(std::uint64_t characteristic = 32003);

    static FieldSpec rationals() { return FieldSpec(0); }

    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// One row of an integer matrix: (column, value) with distinct columns.
using IntegerRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Rank over `field` of the integer matrix with the given rows, by sparse
/// Gaussian elimination with Markowitz-style pivot choice.
std::size_t sparse_rank(const std::vector<IntegerRow>& rows, std::size_t columns, FieldSpec field);

}  // namespace crownbetti
