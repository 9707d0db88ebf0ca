#pragma once

#include <gmpxx.h>

#include <vector>

#include "latmon/ints.hpp"

namespace latmon {

// Arbitrary-precision matrices for the elimination-heavy routines, where
// intermediate entries outgrow any fixed width.
using ZMat = std::vector<std::vector<mpz_class>>;

ZMat to_zmat(const IntMat& m);
IntMat to_intmat(const ZMat& m);  // throws IntOverflow if an entry does not fit

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
mpz_class det(const ZMat& m);

// Column Hermite reduction with transforms.  For an n x m input A returns
// unimodular W (m x m) with A * W = H, H = [B | 0] and B of full column rank,
// plus W^{-1}.  The last m-rank columns of W are a basis of the integer kernel
// of A.
struct HnfResult {
    ZMat h;
    ZMat w;
    ZMat winv;
    int rank = 0;
};
HnfResult column_hnf(const ZMat& a);

// Nonzero elementary divisors d1 | d2 | ... of an integer matrix.
std::vector<mpz_class> snf_divisors(ZMat a);

ZMat zmat_mul(const ZMat& a, const ZMat& b);

}  // namespace latmon
