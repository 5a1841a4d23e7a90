#pragma once

#include "eigencone/matrix.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eigencone {

/// Eigenvalues of a symmetric matrix, sorted descending.
struct Spectrum {
    std::vector<double> values;

    [[nodiscard]] double top() const { return values.front(); }
    [[nodiscard]] double bottom() const { return values.back(); }
    [[nodiscard]] double sum() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
};

inline Spectrum eigenvalues(const Matrix& a) { return Spectrum{jacobi_eigenvalues_desc(a)}; }

/**
 * Closed forms for the five eigenvalues of the unit-sphere Hessian of the
 * degree-2 homogeneous field built on the R^5 isoparametric cubic, at the
 * normal-form point (p, 0, sqrt(1-p^2), 0, 0):
 *
 *   l1 = (p^3 - 6p + 3 sqrt(3(4-p^2))) / 2
 *   l2 = (5p^3 - 15p + 3r) / 4,   r = sqrt(5p^6 - 30p^4 + 45p^2 + 16)
 *   l3 = (p^3 + 3p) / 2
 *   l4 = (5p^3 - 15p - 3r) / 4
 *   l5 = (p^3 - 6p - 3 sqrt(3(4-p^2))) / 2
 */
struct ClosedFormSpectrum {
    double p = 0.0;
    std::array<double, 5> lambda{};
    double r = 0.0;
};

inline ClosedFormSpectrum closed_form_spectrum(double p) {
    if (!(p >= -1.0 - 1e-12 && p <= 1.0 + 1e-12))
        throw std::domain_error("closed_form_spectrum: p outside [-1, 1]");
    ClosedFormSpectrum out;
    out.p = p;
    const double p2 = p * p, p3 = p2 * p;
    const double s = std::sqrt(3.0 * (4.0 - p2));
    out.r = std::sqrt(5.0 * p3 * p3 - 30.0 * p2 * p2 + 45.0 * p2 + 16.0);
    out.lambda[0] = (p3 - 6.0 * p + 3.0 * s) / 2.0;
    out.lambda[1] = (5.0 * p3 - 15.0 * p + 3.0 * out.r) / 4.0;
    out.lambda[2] = (p3 + 3.0 * p) / 2.0;
    out.lambda[3] = (5.0 * p3 - 15.0 * p - 3.0 * out.r) / 4.0;
    out.lambda[4] = (p3 - 6.0 * p - 3.0 * s) / 2.0;
    return out;
}

/**
 * The two factors of the characteristic polynomial of that Hessian:
 *   F1(S) = (S - 3p/2 - p^3/2)(S^2 + 6pS - p^3 S + 63p^2/4 - 3p^4 + p^6/4 - 27)
 *   F2(S) = S^2 + 15pS/2 - 5p^3 S/2 - 45p^2/4 + 15p^4/2 - 5p^6/4 - 9
 * F1 vanishes at l1, l3, l5 and F2 at l2, l4.
 */
inline std::pair<double, double> char_factors(double p, double s) {
    const double p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p6 = p3 * p3;
    const double f1 = (s - 1.5 * p - 0.5 * p3) *
                      (s * s + 6.0 * p * s - p3 * s + 63.0 * p2 / 4.0 - 3.0 * p4 + p6 / 4.0 - 27.0);
    const double f2 = s * s + 7.5 * p * s - 2.5 * p3 * s - 11.25 * p2 + 7.5 * p4 - 1.25 * p6 - 9.0;
    return {f1, f2};
}

/**
 * Weyl bounds for the spectrum of A - B: with both spectra sorted
 * descending, returns (max_i(l_i(A) - l_i(B)), min_i(l_i(A) - l_i(B))).
 * The top eigenvalue of A - B is >= the first value and the bottom one
 * is <= the second.
 */
inline std::pair<double, double> weyl_bounds(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("weyl_bounds: dimension mismatch");
    const Spectrum sa = eigenvalues(a);
    const Spectrum sb = eigenvalues(b);
    double hi = sa.values[0] - sb.values[0];
    double lo = hi;
    for (size_t i = 1; i < sa.values.size(); ++i) {
        const double gap = sa.values[i] - sb.values[i];
        hi = std::max(hi, gap);
        lo = std::min(lo, gap);
    }
    return {hi, lo};
}

}  // namespace eigencone
