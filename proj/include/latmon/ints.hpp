#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "latmon/errors.hpp"

namespace latmon {

using Int = std::int64_t;
using Vec = std::vector<Int>;

// Row-major square or rectangular integer matrix; m[i] is row i.
using IntMat = std::vector<Vec>;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw IntOverflow("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw IntOverflow("integer overflow in multiplication");
    return r;
}

// Sign-canonical representative of {v, -v}: first nonzero coordinate positive.
inline Vec canonical_sign(Vec v) {
    for (Int c : v) {
        if (c > 0) return v;
        if (c < 0) {
            for (Int& x : v) x = -x;
            return v;
        }
    }
    return v;
}

inline Vec negated(const Vec& v) {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    return w;
}

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Int c : v) {
            h ^= static_cast<std::size_t>(c);
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline IntMat identity_matrix(int n) {
    IntMat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Vec matvec(const IntMat& m, const Vec& x) {
    if (m.empty() || m[0].size() != x.size())
        throw DimensionMismatch("matrix/vector size mismatch");
    Vec y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            y[i] = checked_add(y[i], checked_mul(m[i][j], x[j]));
    return y;
}

inline IntMat matmul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw DimensionMismatch("matrix product size mismatch");
    IntMat c(a.size(), Vec(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            Int aik = a[i][k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] = checked_add(c[i][j], checked_mul(aik, b[k][j]));
        }
    return c;
}

}  // namespace latmon
