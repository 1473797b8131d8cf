#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crownbetti/multidegree.hpp"

namespace crownbetti {

/// Multigraded Betti numbers beta_{i,a} of an ideal I (not of R/I). Zero
/// entries are never stored.
class BettiTable {
public:
    using Key = std::pair<int, Multidegree>;

    explicit BettiTable(VariableSet vars) : vars_(std::move(vars)) {}

    const VariableSet& vars() const { return vars_; }
    const std::map<Key, Count>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Adds `count` to beta_{i,a}; a zero count is a no-op.
    void add(int i, const Multidegree& a, Count count);
    Count at(int i, const Multidegree& a) const;

    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.vars_ == b.vars_ && a.entries_ == b.entries_;
    }

private:
    VariableSet vars_;
    std::map<Key, Count> entries_;
};

/// beta_{i,j}: entries summed over multidegrees of total degree j.
std::map<std::pair<int, Count>, Count> graded_betti(const BettiTable& table);
/// beta_i for i = 0..pdim.
std::vector<Count> total_betti(const BettiTable& table);
int pdim(const BettiTable& table);
/// max(j - i) over nonzero beta_{i,j}.
std::int64_t regularity(const BettiTable& table);

/// The same numbers indexed for R/I: beta_{i+1,a}(R/I) = beta_{i,a}(I), plus
/// beta_{0,0}(R/I) = 1.
BettiTable quotient_ring_shift(const BettiTable& table);

/// Entries whose multidegree is supported inside `labels`.
BettiTable restrict_to_support(const BettiTable& table, const std::set<std::string>& labels);

/// Translates every multidegree by m (tables of m*I versus I).
BettiTable translate(const BettiTable& table, const Multidegree& m);

/// Labels appearing in some entry's multidegree.
std::set<std::string> support(const BettiTable& table);

struct TableDifference {
    int i;
    Multidegree a;
    Count left;
    Count right;
};

/// The first (i, a) in key order where the tables disagree.
std::optional<TableDifference> first_difference(const BettiTable& left, const BettiTable& right);

}  // namespace crownbetti
