#include "crownbetti/multidegree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "crownbetti/error.hpp"

namespace crownbetti {

std::shared_ptr<const VariableSet::Data> VariableSet::empty_data() {
    static const auto data = std::make_shared<const Data>();
    return data;
}

VariableSet::VariableSet() : data_(empty_data()) {}

VariableSet::VariableSet(std::vector<std::string> names) {
    auto data = std::make_shared<Data>();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw UsageError("variable labels must be nonempty");
        if (!data->index.emplace(names[i], i).second)
            throw UsageError("duplicate variable label '" + names[i] + "'");
    }
    data->names = std::move(names);
    data_ = std::move(data);
}

VariableSet::VariableSet(std::initializer_list<std::string> names)
    : VariableSet(std::vector<std::string>(names)) {}

bool VariableSet::contains(const std::string& label) const {
    return data_->index.count(label) != 0;
}

std::size_t VariableSet::index_of(const std::string& label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end()) throw UsageError("unknown variable '" + label + "'");
    return it->second;
}

bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
}

Multidegree::Multidegree(VariableSet vars) : vars_(std::move(vars)), exps_(vars_.size(), 0) {}

Multidegree::Multidegree(VariableSet vars, std::vector<Exponent> exponents)
    : vars_(std::move(vars)), exps_(std::move(exponents)) {
    if (exps_.size() != vars_.size())
        throw UsageError("exponent vector length " + std::to_string(exps_.size()) +
                         " does not match " + std::to_string(vars_.size()) + " variables");
}

Multidegree Multidegree::from_powers(const VariableSet& vars,
                                     const std::vector<std::pair<std::string, Exponent>>& powers) {
    std::vector<Exponent> e(vars.size(), 0);
    for (const auto& [label, power] : powers) e[vars.index_of(label)] += power;
    return Multidegree(vars, std::move(e));
}

Count Multidegree::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), Count{0});
}

bool Multidegree::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Multidegree Multidegree::relabeled(const VariableSet& target) const {
    std::vector<Exponent> e(target.size(), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        const auto& label = vars_.name(i);
        if (!target.contains(label))
            throw UsageError("variable '" + label + "' is not in the target variable set");
        e[target.index_of(label)] = exps_[i];
    }
    return Multidegree(target, std::move(e));
}

bool operator==(const Multidegree& a, const Multidegree& b) {
    return a.exps_ == b.exps_ && a.vars_ == b.vars_;
}

std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b) {
    return a.exps_ <=> b.exps_;
}

void require_same_vars(const Multidegree& a, const Multidegree& b) {
    if (!(a.vars() == b.vars())) throw UsageError("multidegrees over different variable sets");
}

namespace {

template <class Op>
Multidegree componentwise(const Multidegree& a, const Multidegree& b, Op op) {
    require_same_vars(a, b);
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = op(a[i], b[i]);
    return Multidegree(a.vars(), std::move(e));
}

}  // namespace

Multidegree lcm(const Multidegree& a, const Multidegree& b) {
    return componentwise(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

Multidegree gcd(const Multidegree& a, const Multidegree& b) {
    return componentwise(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

Multidegree multiply(const Multidegree& a, const Multidegree& b) {
    return componentwise(a, b, [](Exponent x, Exponent y) { return x + y; });
}

Multidegree quotient(const Multidegree& a, const Multidegree& b) {
    if (!divides(b, a)) throw UsageError(to_string(b) + " does not divide " + to_string(a));
    return componentwise(a, b, [](Exponent x, Exponent y) { return x - y; });
}

bool divides(const Multidegree& a, const Multidegree& b) {
    require_same_vars(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::set<std::string> support(const Multidegree& a) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) out.insert(a.vars().name(i));
    return out;
}

std::vector<std::size_t> support_indices(const Multidegree& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) out.push_back(i);
    return out;
}

Count binomial(std::int64_t q, std::int64_t p) {
    if (p < 0 || q < 0 || p > q) return 0;
    p = std::min(p, q - p);
    unsigned __int128 c = 1;
    for (std::int64_t i = 1; i <= p; ++i) {
        c = c * static_cast<unsigned __int128>(q - p + i) / static_cast<unsigned __int128>(i);
        if (c > std::numeric_limits<Count>::max()) throw std::overflow_error("binomial overflow");
    }
    return static_cast<Count>(c);
}

Count pow2(int e) {
    if (e < 0 || e >= 64) throw std::overflow_error("pow2 exponent out of range");
    return Count{1} << e;
}

Count binomial_pair_decomposition(std::int64_t n, std::int64_t m) {
    Count total = 0;
    for (std::int64_t k = 2; k <= n; ++k) {
        const std::int64_t singles = m + 4 - 2 * k;
        const Count ways = binomial(n - k, singles) * binomial(n - 2, k - 2);
        // A zero binomial means singles is out of range; skip before forming 2^singles.
        if (ways == 0) continue;
        total += pow2(static_cast<int>(singles)) * ways;
    }
    return total;
}

std::string to_string(const Multidegree& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += a.vars().name(i);
        if (a[i] > 1) out += '^' + std::to_string(a[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace crownbetti
