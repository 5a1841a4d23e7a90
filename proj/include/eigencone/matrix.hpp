#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace eigencone {

/// Small dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, 0.0) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: bad shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    double& operator()(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

    [[nodiscard]] const std::vector<double>& data() const { return d_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> d_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix subtract: shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// O^T H O.
inline Matrix conjugate_t(const Matrix& o, const Matrix& h) { return transpose(o) * h * o; }

inline double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

inline double max_abs(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s = std::max(s, std::fabs(v));
    return s;
}

inline double symmetry_defect(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) s = std::max(s, std::fabs(a(i, j) - a(j, i)));
    return s;
}

inline double orthogonality_defect(const Matrix& o) {
    Matrix g = transpose(o) * o;
    for (int i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    return max_abs(g);
}

inline double determinant(Matrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    const int n = a.rows();
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::fabs(a(r, c)) > std::fabs(a(piv, c))) piv = r;
        if (a(piv, c) == 0.0) return 0.0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (int r = c + 1; r < n; ++r) {
            const double f = a(r, c) / a(c, c);
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

/// exp(S) for skew-symmetric S via scaling-and-squaring with a Taylor core;
/// the result is orthogonal to roundoff.
inline Matrix expm_skew(const Matrix& s) {
    if (s.rows() != s.cols()) throw std::invalid_argument("expm_skew: not square");
    const int n = s.rows();
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::fabs(s(i, j));
        nrm = std::max(nrm, row);
    }
    int k = 0;
    double scale = 1.0;
    while (nrm * scale > 0.25) {
        scale *= 0.5;
        ++k;
    }
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = s(i, j) * scale;
    Matrix x = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (int it = 1; it <= 20; ++it) {
        term = term * a;
        const double inv = 1.0 / it;
        bool nonzero = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                term(i, j) *= inv;
                x(i, j) += term(i, j);
                nonzero |= term(i, j) != 0.0;
            }
        if (!nonzero) break;
    }
    for (int i = 0; i < k; ++i) x = x * x;
    return x;
}

/**
 * Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, returned in
 * descending order. Dimensions here never exceed a dozen, so robustness is
 * the only concern. Stops when the off-diagonal Frobenius norm falls below
 * 1e-14 * ||A||_F.
 */
inline std::vector<double> jacobi_eigenvalues_desc(Matrix a, double sym_tol = 1e-12) {
    if (a.rows() != a.cols()) throw std::invalid_argument("jacobi: not square");
    if (symmetry_defect(a) > sym_tol)
        throw std::invalid_argument("jacobi: matrix not symmetric within tolerance");
    const int n = a.rows();
    // work on the symmetrized copy
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = a(j, i) = v;
        }
    const double total = frobenius_norm(a);
    const double stop = 1e-14 * (total > 0 ? total : 1.0);
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
        if (std::sqrt(off) <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = a(p, r) = c * arp - s * arq;
                    a(r, q) = a(q, r) = s * arp + c * arq;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = a(i, i);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

// ---- small vector helpers ----

inline double dot(std::span<const double> u, std::span<const double> v) {
    double s = 0.0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline double norm(std::span<const double> u) { return std::sqrt(dot(u, u)); }

inline void normalize(std::span<double> u) {
    const double n = norm(u);
    for (double& v : u) v /= n;
}

}  // namespace eigencone
