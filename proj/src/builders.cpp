#include "latmon/builders.hpp"

#include <string>

#include "latmon/errors.hpp"

namespace latmon {

Lattice diagonal_lattice(const std::vector<Int>& entries) {
    if (entries.empty()) throw EmptyInput("diagonal lattice needs at least one entry");
    const int n = static_cast<int>(entries.size());
    IntMat g(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = entries[i];
    return Lattice(std::move(g), "diagonal");
}

Lattice e8() {
    IntMat g(8, Vec(8, 0));
    for (int i = 0; i < 8; ++i) g[i][i] = -2;
    for (int i = 0; i < 6; ++i) g[i][i + 1] = g[i + 1][i] = 1;  // chain n1..n7
    g[4][7] = g[7][4] = 1;                                      // n8 on n5
    return Lattice(std::move(g), "E8");
}

Lattice torus_block(int q) {
    if (q < 1) throw NonPositiveQ("torus block needs q >= 1");
    const int n = 2 * q;
    IntMat g(n, Vec(n, 0));
    for (int i = 0; i < q; ++i) g[i][q + i] = g[q + i][i] = 1;
    return Lattice(std::move(g), "U^" + std::to_string(q));
}

AnnulusPair annulus_pair(int g) {
    std::vector<Int> entries(2 * g + 2, 0);
    entries[0] = -2;
    Lattice l = diagonal_lattice(entries);
    Vec s_plus(2 * g + 2, 0), s_minus(2 * g + 2, 0);
    s_plus[0] = 1;
    s_minus[0] = -1;
    s_minus[1] = 1;
    return {std::move(l), std::move(s_plus), std::move(s_minus)};
}

namespace {

// (a-1) x (a-1) unit bidiagonal Seifert matrix of the one-variable t^a.
IntMat seifert_one_variable(int a) {
    const int n = a - 1;
    IntMat l(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) {
        l[i][i] = 1;
        if (i + 1 < n) l[i][i + 1] = -1;
    }
    return l;
}

IntMat kronecker(const IntMat& a, const IntMat& b) {
    const int n = static_cast<int>(a.size());
    const int p = static_cast<int>(b.size());
    IntMat c(n * p, Vec(n * p, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a[i][j] == 0) continue;
            for (int k = 0; k < p; ++k)
                for (int l = 0; l < p; ++l)
                    c[i * p + k][j * p + l] = checked_mul(a[i][j], b[k][l]);
        }
    return c;
}

}  // namespace

Lattice milnor_j(int chi) {
    if (chi < 1) throw NonPositiveChi("milnor_j needs chi >= 1");
    // t^2 contributes the 1x1 factor [1]; the tensor collapses to two factors.
    IntMat seifert = kronecker(seifert_one_variable(3), seifert_one_variable(6 * chi));
    const int n = static_cast<int>(seifert.size());
    IntMat g(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = -(seifert[i][j] + seifert[j][i]);
    return Lattice(std::move(g), "J" + std::to_string(2 * chi));
}

Signature bp_signature(int a, int b, int c) {
    if (a < 2 || b < 2 || c < 2) throw BadExponent("exponents must be >= 2");
    Signature sig;
    for (int i = 1; i < a; ++i)
        for (int j = 1; j < b; ++j)
            for (int k = 1; k < c; ++k) {
                // s = i/a + j/b + k/c over the common denominator, reduced mod 2
                const long num = static_cast<long>(i) * b * c + static_cast<long>(j) * a * c +
                                 static_cast<long>(k) * a * b;
                const long den = static_cast<long>(a) * b * c;
                const long rem = num % (2 * den);
                if (rem == 0 || rem == den)
                    ++sig.zero;
                else if (rem < den)
                    ++sig.positive;
                else
                    ++sig.negative;
            }
    return sig;
}

WitnessTuple witness_six() {
    Lattice ambient = orthogonal_sum(e8(), torus_block(2));
    const int n = ambient.rank();  // 12; torus basis a1,a2,b1,b2 at 8..11
    auto unit = [n](int i) {
        Vec v(n, 0);
        v[i] = 1;
        return v;
    };
    const Vec alpha1 = unit(0);  // n1
    const Vec beta = unit(1);    // n2
    const Vec alpha2 = unit(3);  // n4
    const Vec alpha3 = unit(5);  // n6
    // relabeled torus basis: t1+ = a1, t2- = b1, t1- = -a2, t2+ = b2
    const Vec t1p = unit(8);
    const Vec t2m = unit(10);
    Vec t1m = unit(9);
    t1m[9] = -1;
    const Vec t2p = unit(11);

    auto plus = [n](const Vec& x, const Vec& y) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = x[i] + y[i];
        return v;
    };
    auto minus = [n](const Vec& x, const Vec& y) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = x[i] - y[i];
        return v;
    };

    std::vector<Vec> tuple;
    tuple.push_back(plus(alpha2, t1p));
    tuple.push_back(plus(alpha1, t2m));
    tuple.push_back(alpha1);
    tuple.push_back(beta);
    tuple.push_back(plus(alpha1, t1m));
    tuple.push_back(minus(alpha3, t2p));
    return {std::move(ambient), std::move(tuple)};
}

}  // namespace latmon
