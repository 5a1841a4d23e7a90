#pragma once

#include "eigencone/field.hpp"
#include "eigencone/matrix.hpp"
#include "eigencone/spectra.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace eigencone {

/**
 * The three one-parameter rotation families that leave the R^5
 * isoparametric cubic invariant. Each is orthogonal with determinant +1
 * and reduces to the identity at angle 0.
 *
 * A1 mixes (x1, x2, z1) and rotates (z2, z3). A2 fixes x1, rotating
 * (x2, z3) at double speed against (z1, z2). A3 is the image of A1 under
 * the substitution z1 <-> z2, x2 -> -x2, which also preserves the cubic,
 * so it mixes (x1, x2, z2) and rotates (z1, z3). The invariance property
 * tests validate every sign; the cubic admits no other one-parameter
 * rotations (its symmetry algebra is three-dimensional).
 */
inline Matrix generator(int kind, double t) {
    Matrix a(5, 5);
    const double c = std::cos(t), s = std::sin(t);
    const double c2 = std::cos(2.0 * t), s2 = std::sin(2.0 * t);
    const double r3 = std::sqrt(3.0);
    switch (kind) {
        case 1:
            a(0, 0) = (3.0 * c * c - 1.0) / 2.0;
            a(0, 1) = r3 * s * s / 2.0;
            a(0, 2) = r3 * s2 / 2.0;
            a(1, 0) = r3 * s * s / 2.0;
            a(1, 1) = (1.0 + c * c) / 2.0;
            a(1, 2) = -s2 / 2.0;
            a(2, 0) = -r3 * s2 / 2.0;
            a(2, 1) = s2 / 2.0;
            a(2, 2) = c2;
            a(3, 3) = c;
            a(3, 4) = s;
            a(4, 3) = -s;
            a(4, 4) = c;
            return a;
        case 2:
            a(0, 0) = 1.0;
            a(1, 1) = c2;
            a(1, 4) = -s2;
            a(4, 1) = s2;
            a(4, 4) = c2;
            a(2, 2) = c;
            a(2, 3) = -s;
            a(3, 2) = s;
            a(3, 3) = c;
            return a;
        case 3:
            a(0, 0) = (3.0 * c * c - 1.0) / 2.0;
            a(0, 1) = -r3 * s * s / 2.0;
            a(0, 3) = -r3 * s2 / 2.0;
            a(1, 0) = -r3 * s * s / 2.0;
            a(1, 1) = (1.0 + c * c) / 2.0;
            a(1, 3) = -s2 / 2.0;
            a(3, 0) = r3 * s2 / 2.0;
            a(3, 1) = s2 / 2.0;
            a(3, 3) = c2;
            a(2, 2) = c;
            a(2, 4) = -s;
            a(4, 2) = s;
            a(4, 4) = c;
            return a;
        default:
            throw std::invalid_argument("generator: kind must be 1, 2 or 3");
    }
}

/// Image of the circle point (cos chi, 0, sin chi, 0, 0) under the
/// composition A1(-phi) A2(-psi) A3(-theta), applied as a row vector.
inline std::vector<double> orbit_point(double phi, double psi, double theta, double chi) {
    const Matrix m = generator(1, -phi) * generator(2, -psi) * generator(3, -theta);
    const double v0 = std::cos(chi), v2 = std::sin(chi);
    std::vector<double> out(5, 0.0);
    for (int j = 0; j < 5; ++j) out[static_cast<size_t>(j)] = v0 * m(0, j) + v2 * m(2, j);
    return out;
}

/// Rank of the 5x4 Jacobian of the orbit map at the given parameters,
/// by central differences; singular values below rel_tol * max are noise.
inline int orbit_map_rank(double phi = 0.0, double psi = 0.0, double theta = 0.0, double chi = 0.0,
                          double h = 1e-5, double rel_tol = 1e-6) {
    Matrix jac(5, 4);
    for (int c = 0; c < 4; ++c) {
        double args_p[4] = {phi, psi, theta, chi};
        double args_m[4] = {phi, psi, theta, chi};
        args_p[c] += h;
        args_m[c] -= h;
        const auto up = orbit_point(args_p[0], args_p[1], args_p[2], args_p[3]);
        const auto um = orbit_point(args_m[0], args_m[1], args_m[2], args_m[3]);
        for (int r = 0; r < 5; ++r) jac(r, c) = (up[static_cast<size_t>(r)] - um[static_cast<size_t>(r)]) / (2.0 * h);
    }
    const Matrix gram = transpose(jac) * jac;
    const auto ev = jacobi_eigenvalues_desc(gram, 1e-9);
    const double smax = std::sqrt(std::max(ev[0], 0.0));
    int rank = 0;
    for (double e : ev)
        if (std::sqrt(std::max(e, 0.0)) > rel_tol * smax) ++rank;
    return rank;
}

/**
 * Normal-form parameters of a unit vector: the unique p in [-1, 1] with
 * p(3 - p^2)/2 equal to the field value at x, and q = +sqrt(1 - p^2).
 * The cubic is strictly increasing on [-1, 1], so the root is found by
 * safeguarded Newton iteration with a bisection fallback.
 */
struct NormalForm {
    double p = 0.0;
    double q = 0.0;
};

namespace detail {

/// Root of p(3 - p^2)/2 = v in [-1, 1], to absolute residual ~1e-15.
inline double invert_level(double v) {
    if (!(std::fabs(v) <= 1.0 + 1e-9))
        throw std::domain_error("invert_level: level value outside [-1, 1]");
    v = std::clamp(v, -1.0, 1.0);
    double lo = -1.0, hi = 1.0;
    double p = std::clamp(v, -1.0, 1.0);
    for (int it = 0; it < 200; ++it) {
        const double f = 0.5 * p * (3.0 - p * p) - v;
        if (f > 0.0) hi = p; else lo = p;
        const double d = 1.5 * (1.0 - p * p);
        double next = d > 1e-18 ? p - f / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - p) < 1e-16) { p = next; break; }
        p = next;
    }
    return std::clamp(p, -1.0, 1.0);
}

}  // namespace detail

inline NormalForm normal_form_of(std::span<const double> x) {
    if (x.size() != 5) throw std::invalid_argument("normal_form_of: need a 5-vector");
    if (std::fabs(norm(x) - 1.0) > 1e-10)
        throw std::invalid_argument("normal_form_of: point must be on the unit sphere");
    const double v = cartan_field().eval(x);
    NormalForm nf;
    nf.p = detail::invert_level(v);
    nf.q = std::sqrt(std::max(0.0, 1.0 - nf.p * nf.p));
    return nf;
}

}  // namespace eigencone
