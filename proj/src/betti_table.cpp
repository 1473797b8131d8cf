#include "crownbetti/betti_table.hpp"

#include <algorithm>

#include "crownbetti/error.hpp"

namespace crownbetti {

void BettiTable::add(int i, const Multidegree& a, Count count) {
    if (count == 0) return;
    if (i < 0) throw UsageError("homological index must be nonnegative");
    if (!(a.vars() == vars_)) throw UsageError("multidegree over a different variable set");
    entries_[{i, a}] += count;
}

Count BettiTable::at(int i, const Multidegree& a) const {
    auto it = entries_.find({i, a});
    return it == entries_.end() ? 0 : it->second;
}

namespace {

void require_nonempty(const BettiTable& table) {
    if (table.empty()) throw UsageError("empty Betti table");
}

}  // namespace

std::map<std::pair<int, Count>, Count> graded_betti(const BettiTable& table) {
    require_nonempty(table);
    std::map<std::pair<int, Count>, Count> out;
    for (const auto& [key, count] : table.entries()) out[{key.first, key.second.degree()}] += count;
    return out;
}

std::vector<Count> total_betti(const BettiTable& table) {
    std::vector<Count> out(static_cast<std::size_t>(pdim(table)) + 1, 0);
    for (const auto& [key, count] : table.entries())
        out[static_cast<std::size_t>(key.first)] += count;
    return out;
}

int pdim(const BettiTable& table) {
    require_nonempty(table);
    int p = 0;
    for (const auto& entry : table.entries()) p = std::max(p, entry.first.first);
    return p;
}

std::int64_t regularity(const BettiTable& table) {
    require_nonempty(table);
    bool first = true;
    std::int64_t reg = 0;
    for (const auto& entry : table.entries()) {
        const auto r = static_cast<std::int64_t>(entry.first.second.degree()) - entry.first.first;
        if (first || r > reg) reg = r;
        first = false;
    }
    return reg;
}

BettiTable quotient_ring_shift(const BettiTable& table) {
    BettiTable out(table.vars());
    out.add(0, Multidegree(table.vars()), 1);
    for (const auto& [key, count] : table.entries()) out.add(key.first + 1, key.second, count);
    return out;
}

BettiTable restrict_to_support(const BettiTable& table, const std::set<std::string>& labels) {
    BettiTable out(table.vars());
    for (const auto& [key, count] : table.entries()) {
        const auto s = support(key.second);
        if (std::includes(labels.begin(), labels.end(), s.begin(), s.end()))
            out.add(key.first, key.second, count);
    }
    return out;
}

BettiTable translate(const BettiTable& table, const Multidegree& m) {
    BettiTable out(table.vars());
    for (const auto& [key, count] : table.entries()) out.add(key.first, multiply(key.second, m), count);
    return out;
}

std::set<std::string> support(const BettiTable& table) {
    std::set<std::string> out;
    for (const auto& entry : table.entries()) {
        auto s = support(entry.first.second);
        out.insert(s.begin(), s.end());
    }
    return out;
}

std::optional<TableDifference> first_difference(const BettiTable& left, const BettiTable& right) {
    auto a = left.entries().begin();
    auto b = right.entries().begin();
    while (a != left.entries().end() || b != right.entries().end()) {
        if (b == right.entries().end() || (a != left.entries().end() && a->first < b->first))
            return TableDifference{a->first.first, a->first.second, a->second, 0};
        if (a == left.entries().end() || b->first < a->first)
            return TableDifference{b->first.first, b->first.second, 0, b->second};
        if (a->second != b->second)
            return TableDifference{a->first.first, a->first.second, a->second, b->second};
        ++a;
        ++b;
    }
    return std::nullopt;
}

}  // namespace crownbetti
