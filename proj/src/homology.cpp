#include "crownbetti/homology.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

#include "crownbetti/error.hpp"

namespace crownbetti {

namespace {

bool face_order(FaceMask a, FaceMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::size_t> ground, std::vector<FaceMask> faces)
    : ground_(std::move(ground)), faces_(std::move(faces)) {
    if (ground_.size() > 63) throw UsageError("simplicial complex ground set too large");
    const FaceMask all = (FaceMask{1} << ground_.size()) - 1;
    std::sort(faces_.begin(), faces_.end(), face_order);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    for (auto f : faces_) {
        if (f & ~all) throw UsageError("face outside the ground set");
        for (FaceMask rest = f; rest; rest &= rest - 1) {
            const FaceMask facet = f & ~(rest & -rest);
            if (!std::binary_search(faces_.begin(), faces_.end(), facet, face_order))
                throw UsageError("face set is not closed under subsets");
        }
    }
}

SimplicialComplex SimplicialComplex::generated_by(std::vector<std::size_t> ground,
                                                  const std::vector<FaceMask>& facets) {
    std::vector<FaceMask> faces;
    for (auto facet : facets) {
        // Every submask of the facet, including the facet and 0.
        for (FaceMask sub = facet;; sub = (sub - 1) & facet) {
            faces.push_back(sub);
            if (sub == 0) break;
        }
    }
    return SimplicialComplex(std::move(ground), std::move(faces));
}

int SimplicialComplex::dimension() const {
    if (faces_.empty()) return -2;
    return std::popcount(faces_.back()) - 1;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 2), 0);
    for (auto f : faces_) ++counts[static_cast<std::size_t>(std::popcount(f))];
    return counts;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Multidegree& a) {
    if (ideal.is_unit()) throw UsageError("the unit ideal has no upper Koszul complexes");
    if (!(a.vars() == ideal.vars())) throw UsageError("multidegree over a different variable set");
    auto ground = support_indices(a);
    if (ground.size() > kMaxComplexGround)
        throw UsageError("support of size " + std::to_string(ground.size()) +
                         " exceeds the oracle limit of " + std::to_string(kMaxComplexGround));

    // For each generator g dividing x^a, `slack` marks the positions where
    // a_v > g_v. Then g divides x^{a-b} exactly when b lies inside slack.
    std::vector<FaceMask> slacks;
    for (const auto& g : ideal.generators()) {
        if (!divides(g, a)) continue;
        FaceMask slack = 0;
        for (std::size_t k = 0; k < ground.size(); ++k)
            if (a[ground[k]] > g[ground[k]]) slack |= FaceMask{1} << k;
        slacks.push_back(slack);
    }
    // Drop slacks contained in others; they add no faces.
    std::sort(slacks.begin(), slacks.end(),
              [](FaceMask x, FaceMask y) { return std::popcount(x) > std::popcount(y); });
    std::vector<FaceMask> maximal;
    for (auto s : slacks)
        if (std::none_of(maximal.begin(), maximal.end(), [s](FaceMask m) { return (s & ~m) == 0; }))
            maximal.push_back(s);
    return SimplicialComplex::generated_by(std::move(ground), maximal);
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field) {
    if (complex.is_void()) return {};
    const int top = complex.dimension();
    // by_dim[d + 1] lists the d-dimensional faces, sorted by mask.
    std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(top + 2));
    for (auto f : complex.faces()) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    // boundary_rank[d + 1] = rank of the boundary map out of dimension d;
    // the map out of dimension -1 is zero.
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 3), 0);
    for (int d = 0; d <= top; ++d) {
        const auto& faces = by_dim[static_cast<std::size_t>(d + 1)];
        const auto& facets = by_dim[static_cast<std::size_t>(d)];
        std::vector<IntegerRow> rows;
        rows.reserve(faces.size());
        for (auto f : faces) {
            IntegerRow row;
            std::int64_t sign = 1;
            for (FaceMask rest = f; rest; rest &= rest - 1) {
                const FaceMask facet = f & ~(rest & -rest);
                const auto col = std::lower_bound(facets.begin(), facets.end(), facet) - facets.begin();
                row.emplace_back(static_cast<std::uint32_t>(col), sign);
                sign = -sign;
            }
            rows.push_back(std::move(row));
        }
        boundary_rank[static_cast<std::size_t>(d + 1)] = sparse_rank(rows, facets.size(), field);
    }

    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int d = -1; d <= top; ++d) {
        const auto k = static_cast<std::size_t>(d + 1);
        ranks[k] = by_dim[k].size() - boundary_rank[k] - boundary_rank[k + 1];
    }
    return ranks;
}

namespace {

std::vector<Multidegree> full_box(const Multidegree& top) {
    constexpr std::size_t kMaxPoints = std::size_t{1} << 22;
    std::size_t total = 1;
    for (auto e : top.exponents()) {
        total *= e + 1;
        if (total > kMaxPoints) throw UsageError("full-lattice audit exceeds 2^22 multidegrees");
    }
    std::vector<Multidegree> out;
    out.reserve(total);
    std::vector<Exponent> cur(top.size(), 0);
    for (;;) {
        out.emplace_back(top.vars(), cur);
        std::size_t v = 0;
        while (v < cur.size() && cur[v] == top[v]) cur[v++] = 0;
        if (v == cur.size()) break;
        ++cur[v];
    }
    return out;
}

}  // namespace

BettiTable multigraded_betti(const MonomialIdeal& ideal, FieldSpec field, const OracleOptions& options) {
    if (ideal.is_unit()) throw UsageError("Betti numbers of the unit ideal are not supported");
    BettiTable table(ideal.vars());
    if (ideal.is_zero()) return table;

    const auto points = options.audit_full_lattice ? full_box(lcm_of_generators(ideal))
                                                   : lcm_lattice(ideal);
    std::vector<std::vector<std::size_t>> ranks(points.size());

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size() / 16 + 1)));
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&] {
        try {
            for (std::size_t k; (k = next.fetch_add(1)) < points.size();)
                ranks[k] = reduced_homology_ranks(upper_koszul_complex(ideal, points[k]), field);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = points.size();
        }
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);

    for (std::size_t k = 0; k < points.size(); ++k)
        for (std::size_t i = 0; i < ranks[k].size(); ++i)
            table.add(static_cast<int>(i), points[k], ranks[k][i]);
    return table;
}

}  // namespace crownbetti
