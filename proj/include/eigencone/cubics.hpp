#pragma once

#include "eigencone/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace eigencone {

/**
 * The isoparametric cubic on R^5, variables ordered (x1, x2, z1, z2, z3):
 *
 *   P5 = x1^3 + (3 x1 / 2)(z1^2 + z2^2 - 2 z3^2 - 2 x2^2)
 *            + (3 sqrt(3) / 2)(x2 z1^2 - x2 z2^2 + 2 z1 z2 z3)
 */
inline Polynomial cartan_p5() {
    Polynomial p(5);
    auto r = [](long n, long d) { return Scalar::rational(n, d); };
    auto s = [](long n, long d) { return Scalar::sqrt3(n, d); };
    p.add_term({3, 0, 0, 0, 0}, r(1, 1));
    p.add_term({1, 0, 2, 0, 0}, r(3, 2));
    p.add_term({1, 0, 0, 2, 0}, r(3, 2));
    p.add_term({1, 0, 0, 0, 2}, r(-3, 1));
    p.add_term({1, 2, 0, 0, 0}, r(-3, 1));
    p.add_term({0, 1, 2, 0, 0}, s(3, 2));
    p.add_term({0, 1, 0, 2, 0}, s(-3, 2));
    p.add_term({0, 0, 1, 1, 1}, s(3, 1));
    return p;
}

/// The minimal cubic on R^4: x3 (x1^2 - x2^2) + 2 x1 x2 x4.
inline Polynomial lawson_p4() {
    Polynomial p(4);
    p.add_term({2, 0, 1, 0}, Scalar::integer(1));
    p.add_term({0, 2, 1, 0}, Scalar::integer(-1));
    p.add_term({1, 1, 0, 1}, Scalar::integer(2));
    return p;
}

// ---------------------------------------------------------------------------
// Quaternion / octonion structure constants
// ---------------------------------------------------------------------------

/// Multiplication table of a real composition algebra: e_i e_j = sign * e_k.
struct AlgebraTable {
    int dim = 0;
    std::vector<int> index;  // dim*dim entries
    std::vector<int> sign;

    [[nodiscard]] int k(int i, int j) const { return index[static_cast<size_t>(i * dim + j)]; }
    [[nodiscard]] int s(int i, int j) const { return sign[static_cast<size_t>(i * dim + j)]; }
    void set(int i, int j, int kk, int ss) {
        index[static_cast<size_t>(i * dim + j)] = kk;
        sign[static_cast<size_t>(i * dim + j)] = ss;
    }
};

/// Hamilton quaternions: e0 = 1, e1 = i, e2 = j, e3 = k.
inline AlgebraTable quaternion_table() {
    AlgebraTable t;
    t.dim = 4;
    t.index.assign(16, 0);
    t.sign.assign(16, 0);
    for (int i = 0; i < 4; ++i) {
        t.set(0, i, i, 1);
        t.set(i, 0, i, 1);
    }
    for (int i = 1; i < 4; ++i) t.set(i, i, 0, -1);
    t.set(1, 2, 3, 1);
    t.set(2, 1, 3, -1);
    t.set(2, 3, 1, 1);
    t.set(3, 2, 1, -1);
    t.set(3, 1, 2, 1);
    t.set(1, 3, 2, -1);
    return t;
}

/**
 * Cayley-Dickson doubling: pairs (a, b) with
 *   (a, b)(c, d) = (ac - d* b,  d a + b c*),   (a, b)* = (a*, -b).
 * Doubling the quaternions yields the octonions.
 */
inline AlgebraTable cayley_dickson_double(const AlgebraTable& t) {
    const int n = t.dim;
    AlgebraTable o;
    o.dim = 2 * n;
    o.index.assign(static_cast<size_t>(4 * n * n), 0);
    o.sign.assign(static_cast<size_t>(4 * n * n), 0);
    auto conj_sign = [](int i) { return i == 0 ? 1 : -1; };
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = 0; j < 2 * n; ++j) {
            if (i < n && j < n) {
                o.set(i, j, t.k(i, j), t.s(i, j));
            } else if (i < n) {  // (a,0)(0,d) = (0, d a)
                o.set(i, j, n + t.k(j - n, i), t.s(j - n, i));
            } else if (j < n) {  // (0,b)(c,0) = (0, b c*)
                o.set(i, j, n + t.k(i - n, j), t.s(i - n, j) * conj_sign(j));
            } else {  // (0,b)(0,d) = (-d* b, 0)
                o.set(i, j, t.k(j - n, i - n), -t.s(j - n, i - n) * conj_sign(j - n));
            }
        }
    }
    return o;
}

inline const AlgebraTable& octonion_table() {
    static const AlgebraTable t = cayley_dickson_double(quaternion_table());
    return t;
}

enum class Assoc { left, right };

/**
 * Re((u1 * u2) * u3) (or the right association) as a polynomial in the
 * 3*dim coordinates of the three algebra elements. For quaternions and
 * octonions both associations produce the same cubic.
 */
inline Polynomial re_triple_product(const AlgebraTable& t, Assoc assoc = Assoc::left) {
    const int n = t.dim;
    const int nvars = 3 * n;
    // components of block b as linear polynomials
    auto block = [&](int b) {
        std::vector<Polynomial> comp;
        comp.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) comp.push_back(Polynomial::variable(nvars, b * n + i));
        return comp;
    };
    auto mul = [&](const std::vector<Polynomial>& u, const std::vector<Polynomial>& v) {
        std::vector<Polynomial> out(static_cast<size_t>(n), Polynomial::zero(nvars));
        for (int i = 0; i < n; ++i) {
            if (u[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (v[static_cast<size_t>(j)].is_zero()) continue;
                Polynomial prod = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
                if (t.s(i, j) < 0) prod = -prod;
                auto& slot = out[static_cast<size_t>(t.k(i, j))];
                slot = slot + prod;
            }
        }
        return out;
    };
    const auto u1 = block(0), u2 = block(1), u3 = block(2);
    const auto w = assoc == Assoc::left ? mul(mul(u1, u2), u3) : mul(u1, mul(u2, u3));
    return w[0];
}

/// Re(q1 q2 q3) on R^12, blocks of 4.
inline Polynomial quaternion_p12() { return re_triple_product(quaternion_table()); }

/// Re((o1 o2) o3) on R^24, blocks of 8.
inline Polynomial octonion_p24() { return re_triple_product(octonion_table()); }

}  // namespace eigencone
