#pragma once

#include "eigencone/cubics.hpp"
#include "eigencone/matrix.hpp"
#include "eigencone/polynomial.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace eigencone {

/// Polynomial flattened to doubles for fast repeated evaluation.
struct CompiledPoly {
    int nvars = 0;
    std::vector<double> coeff;
    std::vector<unsigned char> exps;  // nvars entries per term

    static CompiledPoly compile(const Polynomial& p) {
        CompiledPoly c;
        c.nvars = p.nvars();
        c.coeff.reserve(p.term_count());
        c.exps.reserve(p.term_count() * static_cast<size_t>(p.nvars()));
        for (const auto& [m, s] : p.terms()) {
            c.coeff.push_back(s.to_double());
            c.exps.insert(c.exps.end(), m.begin(), m.end());
        }
        return c;
    }

    [[nodiscard]] double eval(const double* x) const {
        double acc = 0.0;
        const unsigned char* e = exps.data();
        for (size_t t = 0; t < coeff.size(); ++t, e += nvars) {
            double v = coeff[t];
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) v *= x[i];
            acc += v;
        }
        return acc;
    }
};

/**
 * Homogeneous field w = P / |x|^delta for a homogeneous cubic P. The
 * symbolic gradient and Hessian of P are differentiated once at
 * construction and compiled to doubles, so evaluation is pure numerics.
 * w(tx) = t^(3-delta) w(x); for delta = 1 the Hessian has order 0.
 */
class FieldSpec {
public:
    FieldSpec(Polynomial p, double delta) : poly_(std::move(p)), delta_(delta), n_(poly_.nvars()) {
        if (!poly_.is_homogeneous(3) || poly_.is_zero())
            throw std::invalid_argument("FieldSpec: P must be a nonzero homogeneous cubic");
        if (delta < 0.0) throw std::invalid_argument("FieldSpec: delta must be >= 0");
        cp_ = CompiledPoly::compile(poly_);
        grad_.reserve(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) grad_.push_back(CompiledPoly::compile(poly_.partial(i)));
        hess_.reserve(static_cast<size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                hess_.push_back(CompiledPoly::compile(poly_.partial(i).partial(j)));
    }

    [[nodiscard]] int dim() const { return n_; }
    [[nodiscard]] double delta() const { return delta_; }
    [[nodiscard]] double homogeneity() const { return 3.0 - delta_; }
    [[nodiscard]] const Polynomial& numerator() const { return poly_; }

    [[nodiscard]] double eval(std::span<const double> x) const {
        check_point(x);
        return cp_.eval(x.data()) * std::pow(dot(x, x), -0.5 * delta_);
    }

    [[nodiscard]] std::vector<double> gradient(std::span<const double> x) const {
        check_point(x);
        const double r2 = dot(x, x);
        const double rd = std::pow(r2, -0.5 * delta_);
        const double rd2 = rd / r2;
        const double pv = cp_.eval(x.data());
        std::vector<double> g(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i)
            g[static_cast<size_t>(i)] =
                grad_[static_cast<size_t>(i)].eval(x.data()) * rd - delta_ * pv * x[static_cast<size_t>(i)] * rd2;
        return g;
    }

    /// H_ij = P_ij r^-d - d r^(-d-2) (P_i x_j + P_j x_i) - d P r^(-d-2) I_ij
    ///        + d(d+2) P x_i x_j r^(-d-4); symmetric by construction.
    void hessian(std::span<const double> x, Matrix& h) const {
        check_point(x);
        const double r2 = dot(x, x);
        const double rd = std::pow(r2, -0.5 * delta_);
        const double rd2 = rd / r2;
        const double rd4 = rd2 / r2;
        const double pv = cp_.eval(x.data());
        double gv[32];
        for (int i = 0; i < n_; ++i) gv[i] = grad_[static_cast<size_t>(i)].eval(x.data());
        if (h.rows() != n_ || h.cols() != n_) h = Matrix(n_, n_);
        for (int i = 0; i < n_; ++i) {
            for (int j = i; j < n_; ++j) {
                double v = hess_[static_cast<size_t>(i) * n_ + j].eval(x.data()) * rd;
                v -= delta_ * rd2 * (gv[i] * x[static_cast<size_t>(j)] + gv[j] * x[static_cast<size_t>(i)]);
                if (i == j) v -= delta_ * pv * rd2;
                v += delta_ * (delta_ + 2.0) * pv * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)] * rd4;
                h(i, j) = v;
                h(j, i) = v;
            }
        }
    }

    [[nodiscard]] Matrix hessian(std::span<const double> x) const {
        Matrix h(n_, n_);
        hessian(x, h);
        return h;
    }

private:
    void check_point(std::span<const double> x) const {
        if (static_cast<int>(x.size()) != n_)
            throw std::invalid_argument("FieldSpec: point dimension mismatch");
        if (norm(x) < 1e-8)
            throw std::domain_error("FieldSpec: point too close to the singular origin");
    }

    Polynomial poly_;
    double delta_;
    int n_;
    CompiledPoly cp_;
    std::vector<CompiledPoly> grad_;
    std::vector<CompiledPoly> hess_;  // n*n, row-major
};

inline FieldSpec make_w5() { return FieldSpec(cartan_p5(), 1.0); }
inline FieldSpec make_w4() { return FieldSpec(lawson_p4(), 1.0); }
inline FieldSpec make_w5_delta(double delta) { return FieldSpec(cartan_p5(), delta); }

/// Shared immutable instance of the R^5 field with delta = 1.
inline const FieldSpec& cartan_field() {
    static const FieldSpec f = make_w5();
    return f;
}

/**
 * The 10-dimensional augmented field
 *   u(x, y) = (w5(x) + w5(y) + M (|x|^2 - |y|^2)) / (|x|^2 + |y|^2)^delta,
 * homogeneous of order 2 - 2*delta. Both 5-blocks use the same base field.
 */
class AugmentedField {
public:
    AugmentedField(double delta, double big_m)
        : delta_(delta), big_m_(big_m), base_(make_w5()) {}

    [[nodiscard]] double delta() const { return delta_; }
    [[nodiscard]] double big_m() const { return big_m_; }
    [[nodiscard]] int dim() const { return 10; }
    [[nodiscard]] const FieldSpec& base() const { return base_; }

    [[nodiscard]] double eval(std::span<const double> xy) const {
        check_point(xy);
        const auto x = xy.first(5), y = xy.subspan(5);
        const double rho = dot(xy, xy);
        const double num = base_.eval(x) + base_.eval(y) + big_m_ * (dot(x, x) - dot(y, y));
        return num * std::pow(rho, -delta_);
    }

    void hessian(std::span<const double> xy, Matrix& h) const {
        check_point(xy);
        const auto x = xy.first(5), y = xy.subspan(5);
        const double rho = dot(xy, xy);
        const double rd = std::pow(rho, -delta_);
        const double rd1 = rd / rho;
        const double rd2 = rd1 / rho;
        const double num = base_.eval(x) + base_.eval(y) + big_m_ * (dot(x, x) - dot(y, y));

        const auto gx = base_.gradient(x);
        const auto gy = base_.gradient(y);
        double gn[10];
        for (int i = 0; i < 5; ++i) {
            gn[i] = gx[static_cast<size_t>(i)] + 2.0 * big_m_ * x[static_cast<size_t>(i)];
            gn[5 + i] = gy[static_cast<size_t>(i)] - 2.0 * big_m_ * y[static_cast<size_t>(i)];
        }

        if (h.rows() != 10 || h.cols() != 10) h = Matrix(10, 10);
        Matrix hx(5, 5), hy(5, 5);
        base_.hessian(x, hx);
        base_.hessian(y, hy);
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) h(i, j) = 0.0;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                h(i, j) = hx(i, j);
                h(5 + i, 5 + j) = hy(i, j);
            }
        for (int i = 0; i < 5; ++i) {
            h(i, i) += 2.0 * big_m_;
            h(5 + i, 5 + i) -= 2.0 * big_m_;
        }
        // chain rule for the (|x|^2 + |y|^2)^-delta factor
        for (int i = 0; i < 10; ++i) {
            for (int j = i; j < 10; ++j) {
                double v = h(i, j) * rd;
                v -= 2.0 * delta_ * rd1 * (gn[i] * xy[static_cast<size_t>(j)] + gn[j] * xy[static_cast<size_t>(i)]);
                v += 4.0 * delta_ * (delta_ + 1.0) * num * rd2 * xy[static_cast<size_t>(i)] * xy[static_cast<size_t>(j)];
                if (i == j) v -= 2.0 * delta_ * num * rd1;
                h(i, j) = v;
                h(j, i) = v;
            }
        }
    }

    [[nodiscard]] Matrix hessian(std::span<const double> xy) const {
        Matrix h(10, 10);
        hessian(xy, h);
        return h;
    }

    /// Points whose 5-blocks are both safely away from the base singularity.
    [[nodiscard]] bool admissible(std::span<const double> xy) const {
        return norm(xy.first(5)) >= 1e-4 && norm(xy.subspan(5)) >= 1e-4;
    }

private:
    void check_point(std::span<const double> xy) const {
        if (xy.size() != 10) throw std::invalid_argument("AugmentedField: need a 10-vector");
        if (norm(xy.first(5)) < 1e-8 || norm(xy.subspan(5)) < 1e-8)
            throw std::domain_error("AugmentedField: a 5-block is too close to the singular set");
    }

    double delta_;
    double big_m_;
    FieldSpec base_;
};

}  // namespace eigencone
