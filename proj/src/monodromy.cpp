#include "latmon/monodromy.hpp"

#include <algorithm>
#include <exception>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "latmon/errors.hpp"

namespace latmon {

Vec reflect(const Lattice& l, const Vec& delta, const Vec& x) {
    if (!is_root(l, delta)) throw NotARoot("reflection axis must have square -2");
    const Int c = inner(l, x, delta);
    Vec y(x);
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = checked_add(y[i], checked_mul(c, delta[i]));
    return y;
}

IntMat reflection_matrix(const Lattice& l, const Vec& delta) {
    if (!is_root(l, delta)) throw NotARoot("reflection axis must have square -2");
    const int n = l.rank();
    // R = I + delta (G delta)^T
    Vec gd(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gd[i] = checked_add(gd[i], checked_mul(l.gram(i, j), delta[j]));
    IntMat r = identity_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = checked_add(r[i][j], checked_mul(delta[i], gd[j]));
    return r;
}

bool OrbitResult::contains(const Vec& v) const {
    const Vec c = canonical_sign(v);
    return std::binary_search(roots.begin(), roots.end(), c);
}

std::vector<Vec> OrbitResult::all_roots() const {
    std::vector<Vec> out;
    out.reserve(2 * roots.size());
    for (const Vec& v : roots) {
        out.push_back(v);
        out.push_back(negated(v));
    }
    return out;
}

namespace {

using VecSet = std::unordered_set<Vec, VecHash>;

Int height(const Vec& v) {
    Int h = 0;
    for (Int c : v) h = std::max<Int>(h, c < 0 ? -c : c);
    return h;
}

std::vector<Vec> validated_canonical(const Lattice& l, const std::vector<Vec>& vs,
                                     const char* what) {
    std::vector<Vec> out;
    out.reserve(vs.size());
    for (const Vec& v : vs) {
        if (!is_root(l, v)) throw NotARoot(std::string(what) + " must consist of roots");
        out.push_back(canonical_sign(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <bool Parallel>
OrbitResult orbit_closure_impl(const Lattice& l, const std::vector<Vec>& generators,
                               const std::vector<Vec>& seeds, const OrbitBudget& budget) {
    OrbitResult res;
    res.budget.height_bound = budget.height_bound;
    res.budget.max_size = budget.max_size;

    const std::vector<Vec> gens = validated_canonical(l, generators, "generators");
    std::vector<Vec> known = validated_canonical(l, seeds, "seeds");

    // reflectors = generators + everything discovered so far
    std::vector<Vec> reflectors = gens;
    for (const Vec& v : known)
        if (!std::binary_search(gens.begin(), gens.end(), v)) reflectors.push_back(v);

    VecSet known_set(known.begin(), known.end());
    std::vector<Vec> frontier = known;  // every seed is new in round one
    std::size_t discards = 0;

    while (!frontier.empty()) {
        ++res.budget.rounds;
        res.budget.peak_frontier = std::max(res.budget.peak_frontier, frontier.size());

        // new pairs: (x in frontier, d in reflectors) and (x in known, d in frontier)
        struct Task {
            const std::vector<Vec>* xs;
            const std::vector<Vec>* ds;
        };
        const Task tasks[2] = {{&frontier, &reflectors}, {&known, &frontier}};

        std::vector<Vec> candidates;
        std::size_t local_discards = 0;
#ifdef _OPENMP
        const int nthreads = Parallel ? omp_get_max_threads() : 1;
#else
        const int nthreads = 1;
#endif
        std::vector<std::vector<Vec>> buckets(nthreads);
        std::vector<std::size_t> bucket_discards(nthreads, 0);
        std::exception_ptr failure;

        for (const Task& task : tasks) {
            const auto& xs = *task.xs;
            const auto& ds = *task.ds;
            const std::ptrdiff_t total =
                static_cast<std::ptrdiff_t>(xs.size()) * static_cast<std::ptrdiff_t>(ds.size());
#pragma omp parallel for schedule(dynamic, 64) if (Parallel)
            for (std::ptrdiff_t t = 0; t < total; ++t) {
#ifdef _OPENMP
                const int tid = Parallel ? omp_get_thread_num() : 0;
#else
                const int tid = 0;
#endif
                try {
                    const Vec& x = xs[static_cast<std::size_t>(t) / ds.size()];
                    const Vec& d = ds[static_cast<std::size_t>(t) % ds.size()];
                    const Int c = inner(l, x, d);
                    if (c == 0) continue;
                    Vec y = x;
                    bool over = false;
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        y[i] = checked_add(y[i], checked_mul(c, d[i]));
                        if (y[i] > res.budget.height_bound || -y[i] > res.budget.height_bound)
                            over = true;
                    }
                    if (over) {
                        ++bucket_discards[tid];
                        continue;
                    }
                    y = canonical_sign(std::move(y));
                    if (known_set.count(y) == 0) buckets[tid].push_back(std::move(y));
                } catch (...) {
#pragma omp critical(latmon_orbit_failure)
                    if (!failure) failure = std::current_exception();
                }
            }
        }
        if (failure) std::rethrow_exception(failure);
        for (int t = 0; t < nthreads; ++t) {
            candidates.insert(candidates.end(), buckets[t].begin(), buckets[t].end());
            local_discards += bucket_discards[t];
        }
        discards += local_discards;

        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        frontier.clear();
        for (Vec& v : candidates) {
            if (known_set.count(v)) continue;
            known_set.insert(v);
            frontier.push_back(v);
        }
        for (const Vec& v : frontier) {
            known.push_back(v);
            reflectors.push_back(v);
        }

        if (frontier.empty()) break;
        if (2 * known.size() > budget.max_size) {
            res.budget.height_discards = discards;
            res.roots = std::move(known);
            std::sort(res.roots.begin(), res.roots.end());
            res.exhausted = false;
            return res;
        }
    }

    res.budget.height_discards = discards;
    res.roots = std::move(known);
    std::sort(res.roots.begin(), res.roots.end());
    res.exhausted = true;
    return res;
}

}  // namespace

OrbitResult orbit_closure(const Lattice& l, const std::vector<Vec>& generators,
                          const std::vector<Vec>& seeds, const OrbitBudget& budget) {
    return orbit_closure_impl<true>(l, generators, seeds, budget);
}

OrbitResult orbit_closure_serial(const Lattice& l, const std::vector<Vec>& generators,
                                 const std::vector<Vec>& seeds, const OrbitBudget& budget) {
    return orbit_closure_impl<false>(l, generators, seeds, budget);
}

Connectivity chain_connectivity(const Lattice& l, const std::vector<Vec>& delta_set) {
    std::vector<Vec> reps = validated_canonical(l, delta_set, "delta_set");
    const std::size_t n = reps.size();
    if (n <= 1) return Connectivity::Connected;

    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Int c = inner(l, reps[i], reps[j]);
            if (c == 1 || c == -1) parent[find(i)] = find(j);
        }

    const std::size_t root = find(0);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != root) return Connectivity::Inconclusive;
    return Connectivity::Connected;
}

}  // namespace latmon
