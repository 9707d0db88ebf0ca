#pragma once

#include <string>
#include <vector>

#include "latmon/ints.hpp"

namespace latmon {

/// Finite-rank free Z-module with an integer symmetric bilinear form, held as
/// a Gram matrix over a fixed basis.  Immutable after construction.
class Lattice {
public:
    explicit Lattice(IntMat gram, std::string label = "");  // throws NotSymmetric

    int rank() const { return rank_; }
    Int gram(int i, int j) const { return gram_[i][j]; }
    const IntMat& gram() const { return gram_; }
    bool even() const { return even_; }
    const std::string& label() const { return label_; }

private:
    int rank_;
    IntMat gram_;
    bool even_;
    std::string label_;
};

struct Signature {
    int positive = 0;
    int zero = 0;
    int negative = 0;
    bool operator==(const Signature&) const = default;
};

Lattice new_lattice(IntMat gram, std::string label = "");

/// x^T . gram . y, exact (overflow raises instead of wrapping).
Int inner(const Lattice& l, const Vec& x, const Vec& y);
Int square(const Lattice& l, const Vec& x);
bool is_root(const Lattice& l, const Vec& x);

/// Sign counts of the form over Q, by symmetric Gaussian elimination with
/// exact rational arithmetic.  Pivot choice: first nonzero diagonal entry,
/// else first nonzero off-diagonal pair.
Signature signature(const Lattice& l);

/// Integer basis of {x : inner(x, y) = 0 for all y}, in column Hermite form.
std::vector<Vec> radical(const Lattice& l);

/// Splits off the radical: a basis of a complement (mod radical), the radical
/// basis, and the induced nondegenerate form on the quotient.
struct RadicalSplit {
    std::vector<Vec> quotient_basis;  // images form a basis of L / radical
    std::vector<Vec> radical_basis;
    Lattice quotient;
};
RadicalSplit split_radical(const Lattice& l);
Lattice quotient_by_radical(const Lattice& l);

Lattice orthogonal_sum(const Lattice& a, const Lattice& b);

/// |det gram|, exact.
Int abs_det(const Lattice& l);

}  // namespace latmon
