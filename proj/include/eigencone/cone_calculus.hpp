#pragma once

#include "eigencone/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace eigencone {

/// L(f) = |grad f|^2 Lap f - sum_{ij} f_ij f_i f_j, exactly.
inline Polynomial mean_curvature_op(const Polynomial& f) {
    const int n = f.nvars();
    const auto grad = gradient(f);
    Polynomial grad_sq(n);
    for (const auto& g : grad) grad_sq = grad_sq + g * g;
    Polynomial second(n);
    for (int i = 0; i < n; ++i) {
        Polynomial inner(n);
        for (int j = 0; j < n; ++j) inner = inner + grad[static_cast<size_t>(i)].partial(j) * grad[static_cast<size_t>(j)];
        second = second + grad[static_cast<size_t>(i)] * inner;
    }
    return grad_sq * laplacian(f) - second;
}

/**
 * Verdict record for a homogeneous cubic f:
 *  - is_harmonic: Lap f == 0 exactly
 *  - munzner_gradient_constant: c with |grad f|^2 == c |x|^4, if one exists
 *  - weight: lambda with L(f) == lambda |x|^2 f, if one exists
 *  - residual_zero: the identity checked by the producing call held exactly
 *  - residual_lead: first term of the nonzero residual, for diagnostics
 */
struct EigencubicReport {
    bool is_harmonic = false;
    std::optional<Scalar> munzner_gradient_constant;
    std::optional<Scalar> weight;
    bool residual_zero = false;
    std::string residual_lead;
};

namespace detail {

inline std::string lead_term_str(const Polynomial& p) {
    if (p.is_zero()) return {};
    const auto& [m, c] = *p.terms().begin();
    std::string s = c.str() + " :";
    for (unsigned char e : m) s += " " + std::to_string(static_cast<int>(e));
    return s;
}

/// Candidate q with num == q * den, matched on den's graded-lex-least
/// monomial and then verified globally. Returns the verified quotient.
inline std::optional<Scalar> match_constant(const Polynomial& num, const Polynomial& den,
                                            Polynomial* residual = nullptr) {
    if (den.is_zero()) throw std::invalid_argument("match_constant: zero denominator");
    Scalar cand;  // zero
    if (!num.is_zero()) {
        const auto& lead = *den.terms().begin();
        auto it = num.terms().find(lead.first);
        if (it != num.terms().end()) cand = it->second / lead.second;
    }
    Polynomial res = num - cand * den;
    if (residual) *residual = res;
    if (res.is_zero()) return cand;
    return std::nullopt;
}

}  // namespace detail

/// Checks Lap f == 0 and |grad f|^2 == c |x|^4 for some constant c.
inline EigencubicReport check_munzner(const Polynomial& f) {
    EigencubicReport rep;
    rep.is_harmonic = laplacian(f).is_zero();
    Polynomial grad_sq(f.nvars());
    for (const auto& g : gradient(f)) grad_sq = grad_sq + g * g;
    const Polynomial nsq = norm_sq(f.nvars());
    Polynomial residual(f.nvars());
    rep.munzner_gradient_constant = detail::match_constant(grad_sq, nsq * nsq, &residual);
    rep.residual_zero = rep.munzner_gradient_constant.has_value();
    if (!rep.residual_zero) rep.residual_lead = detail::lead_term_str(residual);
    return rep;
}

/// Checks L(f) == lambda |x|^2 f for some constant lambda (the weight).
inline EigencubicReport check_radial_eigencubic(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("check_radial_eigencubic: zero polynomial");
    EigencubicReport rep;
    rep.is_harmonic = laplacian(f).is_zero();
    const Polynomial lf = mean_curvature_op(f);
    Polynomial residual(f.nvars());
    rep.weight = detail::match_constant(lf, norm_sq(f.nvars()) * f, &residual);
    rep.residual_zero = rep.weight.has_value();
    if (!rep.residual_zero) rep.residual_lead = detail::lead_term_str(residual);
    return rep;
}

/// Full verdict (harmonicity, Munzner constant, weight) in one record.
/// residual_zero reflects the weight identity, the decisive one.
inline EigencubicReport analyze_cubic(const Polynomial& f) {
    EigencubicReport rep = check_munzner(f);
    EigencubicReport rad = check_radial_eigencubic(f);
    rep.weight = rad.weight;
    rep.residual_zero = rad.residual_zero;
    rep.residual_lead = rad.residual_lead;
    return rep;
}

}  // namespace eigencone
