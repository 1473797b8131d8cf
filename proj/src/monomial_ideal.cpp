#include "crownbetti/monomial_ideal.hpp"

#include <algorithm>

#include "crownbetti/error.hpp"

namespace crownbetti {

namespace {

void require_same_vars(const VariableSet& a, const VariableSet& b) {
    if (!(a == b)) throw UsageError("ideals over different variable sets");
}

}  // namespace

MonomialIdeal::MonomialIdeal(VariableSet vars) : vars_(std::move(vars)) {}

MonomialIdeal::MonomialIdeal(VariableSet vars, std::vector<Multidegree> monomials)
    : vars_(std::move(vars)) {
    for (const auto& m : monomials)
        if (!(m.vars() == vars_)) throw UsageError("generator over a different variable set");
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());

    // After dedup, a monomial is redundant iff another one divides it.
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < monomials.size() && !redundant; ++j)
            redundant = j != i && divides(monomials[j], monomials[i]);
        if (!redundant) gens_.push_back(monomials[i]);
    }
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Multidegree& m) const {
    if (!(m.vars() == vars_)) throw UsageError("monomial over a different variable set");
    const auto& e = m.exponents();
    for (const auto& g : gens_) {
        const auto& ge = g.exponents();
        bool div = true;
        for (std::size_t i = 0; i < ge.size() && div; ++i) div = ge[i] <= e[i];
        if (div) return true;
    }
    return false;
}

MonomialIdeal MonomialIdeal::relabeled(const VariableSet& target) const {
    std::vector<Multidegree> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.relabeled(target));
    return MonomialIdeal(target, std::move(out));
}

MonomialIdeal minimalize(const VariableSet& vars, std::vector<Multidegree> monomials) {
    return MonomialIdeal(vars, std::move(monomials));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Multidegree& m) {
    if (!(m.vars() == ideal.vars())) throw UsageError("monomial over a different variable set");
    std::vector<Multidegree> out;
    for (const auto& u : ideal.generators()) out.push_back(quotient(u, gcd(u, m)));
    return MonomialIdeal(ideal.vars(), std::move(out));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_vars(a.vars(), b.vars());
    std::vector<Multidegree> out = a.generators();
    out.insert(out.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.vars(), std::move(out));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_vars(a.vars(), b.vars());
    std::vector<Multidegree> out;
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) out.push_back(multiply(u, v));
    return MonomialIdeal(a.vars(), std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_vars(a.vars(), b.vars());
    std::vector<Multidegree> out;
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) out.push_back(lcm(u, v));
    return MonomialIdeal(a.vars(), std::move(out));
}

MonomialIdeal scale(const Multidegree& m, const MonomialIdeal& ideal) {
    if (!(m.vars() == ideal.vars())) throw UsageError("monomial over a different variable set");
    std::vector<Multidegree> out;
    for (const auto& u : ideal.generators()) out.push_back(multiply(m, u));
    return MonomialIdeal(ideal.vars(), std::move(out));
}

bool is_dominant(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        bool owns_variable = false;
        for (std::size_t v = 0; v < ideal.vars().size() && !owns_variable; ++v) {
            if (gens[g][v] == 0) continue;
            owns_variable = true;
            for (std::size_t h = 0; h < gens.size() && owns_variable; ++h)
                owns_variable = h == g || gens[g][v] > gens[h][v];
        }
        if (!owns_variable) return false;
    }
    return true;
}

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal) {
    // Closure: after processing generators g_1..g_r, `points` holds the lcms
    // of all nonempty subsets of {g_1..g_r}.
    std::set<Multidegree> points;
    for (const auto& g : ideal.generators()) {
        std::vector<Multidegree> added{g};
        for (const auto& p : points) added.push_back(lcm(p, g));
        points.insert(added.begin(), added.end());
    }
    return {points.begin(), points.end()};
}

Multidegree lcm_of_generators(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw UsageError("the zero ideal has no generators");
    Multidegree out(ideal.vars());
    for (const auto& g : ideal.generators()) out = lcm(out, g);
    return out;
}

std::set<std::string> support(const MonomialIdeal& ideal) {
    std::set<std::string> out;
    for (const auto& g : ideal.generators()) {
        auto s = support(g);
        out.insert(s.begin(), s.end());
    }
    return out;
}

std::string to_string(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (i) out += ", ";
        out += to_string(ideal.generators()[i]);
    }
    return out + ")";
}

}  // namespace crownbetti
