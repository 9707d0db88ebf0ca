#pragma once

#include <cstddef>
#include <vector>

#include "latmon/lattice.hpp"

namespace latmon {

/// Picard-Lefschetz reflection in a root delta: x -> x + inner(x, delta) delta.
/// An involution preserving the form.
Vec reflect(const Lattice& l, const Vec& delta, const Vec& x);  // throws NotARoot

/// Matrix of the reflection acting on column vectors.
IntMat reflection_matrix(const Lattice& l, const Vec& delta);

struct OrbitBudget {
    Int height_bound = 8;          // max-abs coordinate cap
    std::size_t max_size = 100000; // cap on the root count, negations included
};

struct OrbitStats {
    Int height_bound = 0;
    std::size_t max_size = 0;
    std::size_t rounds = 0;
    std::size_t peak_frontier = 0;
    std::size_t height_discards = 0;
};

/// Root set discovered by budgeted reflection closure.  Vectors are stored as
/// sign-canonical representatives; the set is understood closed under
/// negation, so size() counts both signs.
struct OrbitResult {
    std::vector<Vec> roots;  // canonical representatives, sorted
    bool exhausted = false;
    OrbitStats budget;

    std::size_t size() const { return 2 * roots.size(); }
    bool contains(const Vec& v) const;
    std::vector<Vec> all_roots() const;  // both signs
};

/// Breadth-first closure of `seeds` under reflections in `generators` and in
/// every previously discovered root.  Vectors whose max-abs coordinate
/// exceeds the height bound are discarded; exhausted is true iff the frontier
/// emptied within budget.  The result is independent of scheduling; the
/// parallel and serial variants agree exactly.
OrbitResult orbit_closure(const Lattice& l, const std::vector<Vec>& generators,
                          const std::vector<Vec>& seeds, const OrbitBudget& budget = {});
OrbitResult orbit_closure_serial(const Lattice& l, const std::vector<Vec>& generators,
                                 const std::vector<Vec>& seeds, const OrbitBudget& budget = {});

enum class Connectivity { Connected, Inconclusive };

/// Sufficient single-orbit certificate: the graph on delta_set mod negation
/// with edges where |inner| = 1 is connected.  Never certifies the negative.
Connectivity chain_connectivity(const Lattice& l, const std::vector<Vec>& delta_set);

}  // namespace latmon
