#include "latmon/certify.hpp"

#include <algorithm>
#include <cassert>

#include "latmon/errors.hpp"
#include "latmon/exactmat.hpp"

namespace latmon {

IntersectionDiagram::IntersectionDiagram(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
        if (e.i == e.j) throw Error("diagram edge endpoints must differ");
        if (e.i > e.j) std::swap(e.i, e.j);
        if (e.i < 0 || e.j >= vertex_count_) throw Error("diagram edge index out of range");
        if (e.multiplicity < 1) throw Error("diagram edge multiplicity must be >= 1");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (std::size_t k = 0; k + 1 < edges_.size(); ++k)
        if (edges_[k].i == edges_[k + 1].i && edges_[k].j == edges_[k + 1].j)
            throw Error("duplicate diagram edge");
}

Int IntersectionDiagram::multiplicity(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const Edge& e : edges_)
        if (e.i == i && e.j == j) return e.multiplicity;
    return 0;
}

Int IntersectionDiagram::degree(int i) const {
    Int d = 0;
    for (const Edge& e : edges_)
        if (e.i == i || e.j == i) ++d;
    return d;
}

IntersectionDiagram diagram_paper() {
    // 1-based in the reference figure; stored 0-based
    std::vector<IntersectionDiagram::Edge> edges = {
        {0, 1, 1}, {1, 2, 2}, {1, 3, 1}, {1, 4, 2}, {2, 3, 1}, {2, 4, 2}, {3, 4, 1}, {4, 5, 1},
    };
    return IntersectionDiagram(6, std::move(edges));
}

bool matches_diagram(const Lattice& l, const std::vector<Vec>& tuple,
                     const IntersectionDiagram& d) {
    if (static_cast<int>(tuple.size()) != d.vertex_count()) return false;
    for (const Vec& t : tuple)
        if (!is_root(l, t)) return false;
    for (int i = 0; i < d.vertex_count(); ++i)
        for (int j = i + 1; j < d.vertex_count(); ++j) {
            Int c = inner(l, tuple[i], tuple[j]);
            if (c < 0) c = -c;
            if (c != d.multiplicity(i, j)) return false;
        }
    return true;
}

namespace {

bool search(const Lattice& l, const std::vector<Vec>& reps, const IntersectionDiagram& d,
            std::vector<int>& chosen, std::vector<bool>& used, std::vector<Vec>& out) {
    const int pos = static_cast<int>(chosen.size());
    if (pos == d.vertex_count()) {
        out.clear();
        for (int idx : chosen) out.push_back(reps[idx]);
        return true;
    }
    for (int cand = 0; cand < static_cast<int>(reps.size()); ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int k = 0; k < pos && ok; ++k) {
            Int c = inner(l, reps[chosen[k]], reps[cand]);
            if (c < 0) c = -c;
            ok = c == d.multiplicity(k, pos);
        }
        if (!ok) continue;
        chosen.push_back(cand);
        used[cand] = true;
        if (search(l, reps, d, chosen, used, out)) return true;
        used[cand] = false;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vec>> find_witness(const Lattice& l, const std::vector<Vec>& delta_set,
                                             const IntersectionDiagram& d) {
    std::vector<Vec> reps;
    reps.reserve(delta_set.size());
    for (const Vec& v : delta_set) {
        if (!is_root(l, v)) throw NotARoot("delta_set must consist of roots");
        reps.push_back(canonical_sign(v));
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    if (static_cast<int>(reps.size()) < d.vertex_count()) return std::nullopt;

    std::vector<int> chosen;
    std::vector<bool> used(reps.size(), false);
    std::vector<Vec> out;
    if (!search(l, reps, d, chosen, used, out)) return std::nullopt;
    return out;
}

VanishingCertificate certify_cvl(const Lattice& l, const std::vector<Vec>& delta_seeds,
                                 const OrbitBudget& budget) {
    VanishingCertificate cert;
    OrbitResult orbit = orbit_closure(l, delta_seeds, delta_seeds, budget);
    cert.exhausted = orbit.exhausted;
    cert.budget = orbit.budget;

    // integral span of the closure, as columns
    const int n = l.rank();
    ZMat span(n, std::vector<mpz_class>(orbit.roots.size()));
    for (std::size_t j = 0; j < orbit.roots.size(); ++j)
        for (int i = 0; i < n; ++i) span[i][j] = static_cast<long>(orbit.roots[j][i]);
    std::vector<mpz_class> divisors = snf_divisors(std::move(span));
    cert.spanned_rank = static_cast<int>(divisors.size());
    cert.generates = cert.spanned_rank == n;
    for (const mpz_class& d : divisors) {
        if (!d.fits_slong_p()) throw IntOverflow("elementary divisor exceeds 64-bit range");
        cert.elementary_divisors.push_back(static_cast<Int>(d.get_si()));
        if (d != 1) cert.generates = false;
    }

    cert.single_orbit = chain_connectivity(l, orbit.roots);
    cert.witness = find_witness(l, orbit.roots, diagram_paper());
    assert(!cert.witness || matches_diagram(l, *cert.witness, diagram_paper()));
    return cert;
}

}  // namespace latmon
