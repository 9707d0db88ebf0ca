#pragma once

#include <vector>

#include "latmon/lattice.hpp"

namespace latmon {

Lattice diagonal_lattice(const std::vector<Int>& entries);  // throws EmptyInput

/// Negative definite even unimodular rank-8 lattice in the Dynkin-node basis:
/// nodes n1..n7 form a chain, n8 is attached to n5; diagonal -2, adjacent
/// pairs pair to +1.
Lattice e8();

/// Rank-2q even unimodular lattice with basis a_1..a_q, b_1..b_q and
/// inner(a_i, b_i) = 1, all other pairings 0.
Lattice torus_block(int q);  // throws NonPositiveQ

/// Diagonal lattice (-2) + (0)^(2g+1) with the distinguished sphere classes
/// s+ = e1 and s- = -e1 + e2; inner(s+, s-) = 2 and s+ + s- is isotropic.
struct AnnulusPair {
    Lattice lattice;
    Vec s_plus;
    Vec s_minus;
};
AnnulusPair annulus_pair(int g);

/// Milnor lattice of z^2 + y^3 + x^(6 chi), rank 12 chi - 2.  Built from the
/// one-variable Seifert matrices of t^2, t^3, t^(6 chi) by the tensor
/// construction, symmetrized and sign-normalized so basis vectors have
/// square -2.  Even, with signature equal to bp_signature(2, 3, 6 chi).
Lattice milnor_j(int chi);  // throws NonPositiveChi

/// Independent signature oracle for the x^a + y^b + z^c Milnor form: counts
/// s = i/a + j/b + k/c mod 2 over 1 <= i < a, 1 <= j < b, 1 <= k < c;
/// s in (0,1) positive, s in (1,2) negative, s integral zero.
Signature bp_signature(int a, int b, int c);  // throws BadExponent

/// Six roots in e8() + torus_block(2) realizing the reference intersection
/// diagram, in the fixed order (vectors are roots; see certify module for
/// the diagram itself).
struct WitnessTuple {
    Lattice ambient;
    std::vector<Vec> vectors;  // exactly 6
};
WitnessTuple witness_six();

}  // namespace latmon
