#include "latmon/exactmat.hpp"

#include <cstdlib>
#include <utility>

namespace latmon {

ZMat to_zmat(const IntMat& m) {
    ZMat z(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        z[i].reserve(m[i].size());
        for (Int x : m[i]) z[i].emplace_back(static_cast<long>(x));
    }
    return z;
}

IntMat to_intmat(const ZMat& m) {
    IntMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const mpz_class& x : m[i]) {
            if (!x.fits_slong_p()) throw IntOverflow("matrix entry exceeds 64-bit range");
            r[i].push_back(static_cast<Int>(x.get_si()));
        }
    }
    return r;
}

mpz_class det(const ZMat& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    ZMat a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sw = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    sw = i;
                    break;
                }
            if (sw == k) return 0;
            std::swap(a[k], a[sw]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] /= prev;  // exact by Bareiss
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

struct ColOps {
    ZMat& a;
    ZMat& w;
    ZMat& winv;
    void swap(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (auto& row : a) std::swap(row[j], row[k]);
        for (auto& row : w) std::swap(row[j], row[k]);
        std::swap(winv[j], winv[k]);
    }
    void negate(std::size_t j) {
        for (auto& row : a) row[j] = -row[j];
        for (auto& row : w) row[j] = -row[j];
        for (auto& x : winv[j]) x = -x;
    }
    // col_j += t * col_k; inverse op acts on rows of winv
    void addmul(std::size_t j, std::size_t k, const mpz_class& t) {
        if (t == 0) return;
        for (auto& row : a) row[j] += t * row[k];
        for (auto& row : w) row[j] += t * row[k];
        for (std::size_t c = 0; c < winv[k].size(); ++c) winv[k][c] -= t * winv[j][c];
    }
};

}  // namespace

HnfResult column_hnf(const ZMat& input) {
    const std::size_t n = input.size();
    const std::size_t m = n == 0 ? 0 : input[0].size();
    HnfResult res;
    res.h = input;
    res.w.assign(m, std::vector<mpz_class>(m, 0));
    res.winv.assign(m, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < m; ++i) res.w[i][i] = res.winv[i][i] = 1;
    ColOps ops{res.h, res.w, res.winv};

    std::size_t piv = 0;
    for (std::size_t row = 0; row < n && piv < m; ++row) {
        std::size_t c = piv;
        while (c < m && res.h[row][c] == 0) ++c;
        if (c == m) continue;
        ops.swap(piv, c);
        for (std::size_t k = piv + 1; k < m; ++k) {
            while (res.h[row][k] != 0) {
                mpz_class q = res.h[row][piv] / res.h[row][k];  // truncated division
                ops.addmul(piv, k, -q);
                ops.swap(piv, k);
            }
        }
        if (res.h[row][piv] < 0) ops.negate(piv);
        for (std::size_t k = 0; k < piv; ++k) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), res.h[row][k].get_mpz_t(), res.h[row][piv].get_mpz_t());
            ops.addmul(k, piv, -q);
        }
        ++piv;
    }
    res.rank = static_cast<int>(piv);
    return res;
}

std::vector<mpz_class> snf_divisors(ZMat a) {
    const std::size_t n = a.size();
    const std::size_t m = n == 0 ? 0 : a[0].size();
    std::vector<mpz_class> divisors;
    std::size_t top = 0;
    while (top < n && top < m) {
        // find a nonzero pivot in the remaining block
        std::size_t pi = top, pj = top;
        bool found = false;
        for (std::size_t i = top; i < n && !found; ++i)
            for (std::size_t j = top; j < m && !found; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[top], a[pi]);
        for (auto& row : a) std::swap(row[top], row[pj]);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = top + 1; i < n; ++i)
                while (a[i][top] != 0) {
                    mpz_class q = a[i][top] / a[top][top];
                    for (std::size_t j = top; j < m; ++j) a[i][j] -= q * a[top][j];
                    if (a[i][top] != 0) {
                        std::swap(a[top], a[i]);
                        again = true;
                    }
                }
            for (std::size_t j = top + 1; j < m; ++j)
                while (a[top][j] != 0) {
                    mpz_class q = a[top][j] / a[top][top];
                    for (std::size_t i = top; i < n; ++i) a[i][j] -= q * a[i][top];
                    if (a[top][j] != 0) {
                        for (auto& row : a) std::swap(row[top], row[j]);
                        again = true;
                    }
                }
        }
        divisors.push_back(abs(a[top][top]));
        ++top;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), divisors[i].get_mpz_t(), divisors[j].get_mpz_t());
            l = divisors[i] / g * divisors[j];
            divisors[i] = g;
            divisors[j] = l;
        }
    return divisors;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    ZMat c(n, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

}  // namespace latmon
