#include "latmon/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <utility>

#include "latmon/errors.hpp"
#include "latmon/exactmat.hpp"

namespace latmon {

Lattice::Lattice(IntMat gram, std::string label)
    : rank_(static_cast<int>(gram.size())), gram_(std::move(gram)), label_(std::move(label)) {
    for (const Vec& row : gram_)
        if (static_cast<int>(row.size()) != rank_)
            throw DimensionMismatch("gram matrix is not square");
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw NotSymmetric("gram[" + std::to_string(i) + "][" + std::to_string(j) +
                                   "] != gram[" + std::to_string(j) + "][" + std::to_string(i) + "]");
    even_ = true;
    for (int i = 0; i < rank_; ++i)
        if (gram_[i][i] % 2 != 0) even_ = false;
}

Lattice new_lattice(IntMat gram, std::string label) {
    return Lattice(std::move(gram), std::move(label));
}

Int inner(const Lattice& l, const Vec& x, const Vec& y) {
    const int n = l.rank();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw DimensionMismatch("vector length does not match lattice rank");
    Int acc = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < n; ++j)
            row = checked_add(row, checked_mul(l.gram(i, j), y[j]));
        acc = checked_add(acc, checked_mul(x[i], row));
    }
    return acc;
}

Int square(const Lattice& l, const Vec& x) { return inner(l, x, x); }

bool is_root(const Lattice& l, const Vec& x) { return square(l, x) == -2; }

Signature signature(const Lattice& l) {
    const int n = l.rank();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<long>(l.gram(i, j));

    Signature sig;
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    while (!active.empty()) {
        int piv = -1;
        for (int i : active)
            if (a[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // first nonzero off-diagonal pair, else the rest is the kernel
            int pi = -1, pj = -1;
            for (std::size_t s = 0; s < active.size() && pi < 0; ++s)
                for (std::size_t t = s + 1; t < active.size(); ++t)
                    if (a[active[s]][active[t]] != 0) {
                        pi = active[s];
                        pj = active[t];
                        break;
                    }
            if (pi < 0) {
                sig.zero += static_cast<int>(active.size());
                break;
            }
            for (int k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (int k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            piv = pi;
        }
        const mpq_class d = a[piv][piv];
        if (d > 0)
            ++sig.positive;
        else
            ++sig.negative;
        active.erase(std::find(active.begin(), active.end(), piv));
        for (int i : active) {
            if (a[i][piv] == 0) continue;
            const mpq_class c = a[i][piv] / d;
            for (int k = 0; k < n; ++k) a[i][k] -= c * a[piv][k];
            for (int k = 0; k < n; ++k) a[k][i] -= c * a[k][piv];
        }
    }
    return sig;
}

namespace {

// Column Hermite reduction of the Gram matrix; W's trailing columns span the
// radical, the leading ones descend to a basis of the quotient.
struct GramHnf {
    HnfResult hnf;
    int rank;
};

GramHnf gram_hnf(const Lattice& l) {
    HnfResult h = column_hnf(to_zmat(l.gram()));
    const int rank = h.rank;
    return {std::move(h), rank};
}

std::vector<Vec> columns_of(const ZMat& w, int from, int to) {
    std::vector<Vec> cols;
    const int n = static_cast<int>(w.size());
    for (int j = from; j < to; ++j) {
        Vec v(n);
        for (int i = 0; i < n; ++i) {
            if (!w[i][j].fits_slong_p()) throw IntOverflow("basis entry exceeds 64-bit range");
            v[i] = static_cast<Int>(w[i][j].get_si());
        }
        cols.push_back(std::move(v));
    }
    return cols;
}

}  // namespace

std::vector<Vec> radical(const Lattice& l) {
    const auto gh = gram_hnf(l);
    std::vector<Vec> ker = columns_of(gh.hnf.w, gh.rank, l.rank());
    if (ker.empty()) return ker;
    // canonicalize the kernel basis for deterministic output
    ZMat km(l.rank(), std::vector<mpz_class>(ker.size()));
    for (std::size_t j = 0; j < ker.size(); ++j)
        for (int i = 0; i < l.rank(); ++i) km[i][j] = static_cast<long>(ker[j][i]);
    HnfResult kh = column_hnf(km);
    return columns_of(kh.h, 0, static_cast<int>(ker.size()));
}

RadicalSplit split_radical(const Lattice& l) {
    const auto gh = gram_hnf(l);
    const int n = l.rank();
    const int r = gh.rank;
    std::vector<Vec> quot = columns_of(gh.hnf.w, 0, r);
    std::vector<Vec> rad = columns_of(gh.hnf.w, r, n);
    IntMat q(r, Vec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) q[i][j] = inner(l, quot[i], quot[j]);
    return {std::move(quot), std::move(rad), Lattice(std::move(q), l.label() + "/rad")};
}

Lattice quotient_by_radical(const Lattice& l) { return split_radical(l).quotient; }

Lattice orthogonal_sum(const Lattice& a, const Lattice& b) {
    const int n = a.rank(), m = b.rank();
    IntMat g(n + m, Vec(n + m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = a.gram(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g[n + i][n + j] = b.gram(i, j);
    std::string label;
    if (!a.label().empty() || !b.label().empty()) label = a.label() + "+" + b.label();
    return Lattice(std::move(g), std::move(label));
}

Int abs_det(const Lattice& l) {
    mpz_class d = det(to_zmat(l.gram()));
    d = abs(d);
    if (!d.fits_slong_p()) throw IntOverflow("determinant exceeds 64-bit range");
    return static_cast<Int>(d.get_si());
}

}  // namespace latmon
