#include "crownbetti/sparse_rank.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>

#include "crownbetti/error.hpp"

namespace crownbetti {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : p_(characteristic) {
    if (p_ != 0 && (p_ >= (std::uint64_t{1} << 31) || !is_prime(p_)))
        throw UsageError("field characteristic must be 0 or a prime below 2^31, got " +
                         std::to_string(p_));
}

std::string FieldSpec::name() const {
    return p_ == 0 ? std::string("QQ") : "ZZ/" + std::to_string(p_);
}

namespace {

struct PrimeField {
    using Element = std::uint64_t;
    std::uint64_t p;

    Element from_int(std::int64_t v) const {
        const auto m = static_cast<std::int64_t>(p);
        return static_cast<Element>(((v % m) + m) % m);
    }
    bool is_zero(Element a) const { return a == 0; }
    Element sub(Element a, Element b) const { return (a + p - b) % p; }
    Element mul(Element a, Element b) const { return (a * b) % p; }
    Element neg(Element a) const { return a == 0 ? 0 : p - a; }
    Element inv(Element a) const {
        Element result = 1, base = a;
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }
};

struct RationalField {
    using Element = boost::multiprecision::cpp_rational;

    Element from_int(std::int64_t v) const { return Element(v); }
    bool is_zero(const Element& a) const { return a == 0; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const { return 1 / a; }
};

template <class Field>
std::size_t eliminate(const std::vector<IntegerRow>& input, std::size_t columns, const Field& f) {
    using Element = typename Field::Element;
    using Row = std::vector<std::pair<std::uint32_t, Element>>;

    std::vector<Row> rows;
    rows.reserve(input.size());
    std::vector<std::set<std::size_t>> col_rows(columns);
    std::set<std::pair<std::size_t, std::size_t>> by_size;  // (nnz, row)
    for (const auto& in : input) {
        Row row;
        for (const auto& [c, v] : in) {
            if (c >= columns) throw UsageError("matrix column index out of range");
            auto e = f.from_int(v);
            if (!f.is_zero(e)) row.emplace_back(c, std::move(e));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        const auto r = rows.size();
        for (const auto& entry : row) col_rows[entry.first].insert(r);
        if (!row.empty()) by_size.emplace(row.size(), r);
        rows.push_back(std::move(row));
    }

    std::size_t rank = 0;
    while (!by_size.empty()) {
        const auto r = by_size.begin()->second;
        by_size.erase(by_size.begin());
        Row pivot_row = std::move(rows[r]);
        rows[r].clear();
        if (pivot_row.empty()) continue;

        // Markowitz: the shortest row, then its sparsest column.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pivot_row.size(); ++k)
            if (col_rows[pivot_row[k].first].size() < col_rows[pivot_row[best].first].size())
                best = k;
        const auto pivot_col = pivot_row[best].first;
        const Element pivot_inv = f.inv(pivot_row[best].second);
        for (const auto& entry : pivot_row) col_rows[entry.first].erase(r);

        const std::vector<std::size_t> targets(col_rows[pivot_col].begin(),
                                               col_rows[pivot_col].end());
        for (const auto t : targets) {
            Row& row = rows[t];
            by_size.erase({row.size(), t});
            Element factor{};
            for (const auto& [c, v] : row)
                if (c == pivot_col) factor = f.mul(v, pivot_inv);

            Row merged;
            merged.reserve(row.size() + pivot_row.size());
            std::size_t a = 0, b = 0;
            while (a < row.size() || b < pivot_row.size()) {
                if (b == pivot_row.size() || (a < row.size() && row[a].first < pivot_row[b].first)) {
                    merged.push_back(std::move(row[a++]));
                } else if (a == row.size() || pivot_row[b].first < row[a].first) {
                    const auto c = pivot_row[b].first;
                    merged.emplace_back(c, f.neg(f.mul(factor, pivot_row[b].second)));
                    col_rows[c].insert(t);
                    ++b;
                } else {
                    const auto c = row[a].first;
                    auto v = f.sub(row[a].second, f.mul(factor, pivot_row[b].second));
                    if (f.is_zero(v))
                        col_rows[c].erase(t);
                    else
                        merged.emplace_back(c, std::move(v));
                    ++a;
                    ++b;
                }
            }
            row = std::move(merged);
            if (!row.empty()) by_size.emplace(row.size(), t);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t sparse_rank(const std::vector<IntegerRow>& rows, std::size_t columns, FieldSpec field) {
    if (field.is_rational()) return eliminate(rows, columns, RationalField{});
    return eliminate(rows, columns, PrimeField{field.characteristic()});
}

}  // namespace crownbetti
