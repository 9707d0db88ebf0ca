#pragma once

#include <optional>
#include <vector>

#include "latmon/monodromy.hpp"

namespace latmon {

/// Undirected multigraph on labeled vertices; edge multiplicity records the
/// absolute intersection number of the endpoint classes.
class IntersectionDiagram {
public:
    struct Edge {
        int i, j;
        Int multiplicity;
    };

    IntersectionDiagram(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    Int multiplicity(int i, int j) const;  // 0 for non-edges
    Int degree(int i) const;               // number of incident edges (unweighted)

private:
    int vertex_count_;
    std::vector<Edge> edges_;
};

/// The six-vertex reference diagram: a chain 1-2, 5-6 of single bonds around
/// a double-bonded core, vertices 3 and 4 hanging off it.
IntersectionDiagram diagram_paper();

/// Ordered match: |inner(t_i, t_j)| equals the multiplicity of (i, j) for all
/// i < j and every t_i has square -2.
bool matches_diagram(const Lattice& l, const std::vector<Vec>& tuple,
                     const IntersectionDiagram& d);

/// First tuple (in the lexicographic order of sign-canonical representatives)
/// of pairwise distinct roots from delta_set matching the diagram, if any.
/// Deterministic and independent of the input ordering.
std::optional<std::vector<Vec>> find_witness(const Lattice& l, const std::vector<Vec>& delta_set,
                                             const IntersectionDiagram& d);

struct VanishingCertificate {
    bool generates = false;  // the closure spans the full ambient lattice over Z
    int spanned_rank = 0;
    std::vector<Int> elementary_divisors;
    Connectivity single_orbit = Connectivity::Inconclusive;
    std::optional<std::vector<Vec>> witness;
    bool exhausted = false;
    OrbitStats budget;
};

/// The three complete-vanishing-lattice checks on the reflection closure of
/// the seeds: integral generation, chain connectivity, and the six-element
/// diagram witness.  Budget exhaustion is reported in the certificate.
VanishingCertificate certify_cvl(const Lattice& l, const std::vector<Vec>& delta_seeds,
                                 const OrbitBudget& budget = {});

}  // namespace latmon
