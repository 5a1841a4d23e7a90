#pragma once

#include "eigencone/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigencone {

/// Exponent vector of a monomial; entry i is the power of variable i.
using Monomial = std::vector<unsigned char>;

inline int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Monomial& u, const Monomial& v) const {
        const int du = total_degree(u), dv = total_degree(v);
        if (du != dv) return du < dv;
        return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
    }
};

/**
 * Sparse multivariate polynomial over Q[sqrt(3)].
 *
 * Terms are kept in graded-lex order with no zero coefficients stored, so
 * two polynomials are equal iff their term maps are structurally equal.
 * All operations are pure; instances are safe to share across threads.
 */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, GradedLex>;

    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("Polynomial: nvars must be >= 1");
    }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial constant(int nvars, Scalar c) {
        Polynomial p(nvars);
        p.add_term(Monomial(static_cast<size_t>(nvars), 0), std::move(c));
        return p;
    }

    /// Single monomial c * x^exps.
    static Polynomial monomial(int nvars, const std::vector<int>& exps, Scalar c) {
        if (static_cast<int>(exps.size()) != nvars)
            throw std::invalid_argument("Polynomial::monomial: exponent count != nvars");
        Monomial m(exps.size());
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > 255)
                throw std::invalid_argument("Polynomial::monomial: exponent out of range");
            m[i] = static_cast<unsigned char>(exps[i]);
        }
        Polynomial p(nvars);
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    /// The variable x_i as a degree-1 polynomial.
    static Polynomial variable(int nvars, int i, Scalar c = Scalar::integer(1)) {
        if (i < 0 || i >= nvars)
            throw std::out_of_range("Polynomial::variable: index out of range");
        Monomial m(static_cast<size_t>(nvars), 0);
        m[static_cast<size_t>(i)] = 1;
        Polynomial p(nvars);
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] size_t term_count() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }

    [[nodiscard]] bool is_homogeneous(int d) const {
        for (const auto& [m, c] : terms_)
            if (total_degree(m) != d) return false;
        return true;
    }

    [[nodiscard]] Scalar coeff(const std::vector<int>& exps) const {
        Monomial m(exps.size());
        for (size_t i = 0; i < exps.size(); ++i) m[i] = static_cast<unsigned char>(exps[i]);
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (static_cast<int>(m.size()) != nvars_)
            throw std::invalid_argument("Polynomial: monomial length != nvars");
        accumulate(m, c);
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        require_same_vars(p, q);
        Polynomial r = p;
        for (const auto& [m, c] : q.terms_) r.accumulate(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        require_same_vars(p, q);
        Polynomial r = p;
        for (const auto& [m, c] : q.terms_) r.accumulate(m, -c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& p) {
        Polynomial r(p.nvars_);
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        require_same_vars(p, q);
        Polynomial r(p.nvars_);
        Monomial m(static_cast<size_t>(p.nvars_));
        for (const auto& [mp, cp] : p.terms_) {
            for (const auto& [mq, cq] : q.terms_) {
                for (size_t i = 0; i < m.size(); ++i)
                    m[i] = static_cast<unsigned char>(mp[i] + mq[i]);
                r.accumulate(m, cp * cq);
            }
        }
        return r;
    }

    friend Polynomial operator*(const Scalar& c, const Polynomial& p) {
        Polynomial r(p.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    /// Exact partial derivative with respect to variable i.
    [[nodiscard]] Polynomial partial(int i) const {
        if (i < 0 || i >= nvars_)
            throw std::out_of_range("Polynomial::partial: index out of range");
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            const int e = m[static_cast<size_t>(i)];
            if (e == 0) continue;
            Monomial dm = m;
            dm[static_cast<size_t>(i)] = static_cast<unsigned char>(e - 1);
            r.accumulate(dm, Scalar::integer(e) * c);
        }
        return r;
    }

    /// Numeric value by direct monomial summation of the double images.
    [[nodiscard]] double eval(std::span<const double> x) const {
        if (static_cast<int>(x.size()) != nvars_)
            throw std::invalid_argument("Polynomial::eval: point dimension != nvars");
        double acc = 0.0;
        for (const auto& [m, c] : terms_) {
            double t = c.to_double();
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    /// Relabel variables: variable i of the input becomes perm[i] of the output.
    [[nodiscard]] Polynomial permute_variables(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != nvars_)
            throw std::invalid_argument("permute_variables: bad permutation size");
        Polynomial r(nvars_);
        Monomial pm(static_cast<size_t>(nvars_));
        for (const auto& [m, c] : terms_) {
            std::fill(pm.begin(), pm.end(), 0);
            for (size_t i = 0; i < m.size(); ++i) pm[static_cast<size_t>(perm[i])] = m[i];
            r.accumulate(pm, c);
        }
        return r;
    }

    /**
     * Text form: one header line "nvars N", then one line per term in
     * graded-lex order, "coeff_a coeff_b : e1 e2 ... eN" with exact
     * rationals printed as num or num/den. Round-trips losslessly.
     */
    [[nodiscard]] std::string to_text() const {
        std::ostringstream os;
        os << "nvars " << nvars_ << "\n";
        for (const auto& [m, c] : terms_) {
            os << c.a << " " << c.b << " :";
            for (unsigned char e : m) os << " " << static_cast<int>(e);
            os << "\n";
        }
        return os.str();
    }

    static Polynomial from_text(const std::string& text) {
        std::istringstream is(text);
        std::string tag;
        int nvars = 0;
        if (!(is >> tag >> nvars) || tag != "nvars" || nvars < 1)
            throw std::invalid_argument("Polynomial::from_text: bad header");
        Polynomial p(nvars);
        std::string line;
        std::getline(is, line);  // rest of header line
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::string sa, sb, colon;
            if (!(ls >> sa >> sb >> colon) || colon != ":")
                throw std::invalid_argument("Polynomial::from_text: bad term line");
            Monomial m(static_cast<size_t>(nvars));
            for (int i = 0; i < nvars; ++i) {
                int e = -1;
                if (!(ls >> e) || e < 0 || e > 255)
                    throw std::invalid_argument("Polynomial::from_text: bad exponent");
                m[static_cast<size_t>(i)] = static_cast<unsigned char>(e);
            }
            p.accumulate(m, Scalar(Rational(sa), Rational(sb)));
        }
        return p;
    }

private:
    static void require_same_vars(const Polynomial& p, const Polynomial& q) {
        if (p.nvars_ != q.nvars_)
            throw std::invalid_argument("Polynomial: variable count mismatch");
    }

    void accumulate(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int nvars_;
    TermMap terms_;
};

inline Polynomial laplacian(const Polynomial& f) {
    Polynomial r(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) r = r + f.partial(i).partial(i);
    return r;
}

inline std::vector<Polynomial> gradient(const Polynomial& f) {
    std::vector<Polynomial> g;
    g.reserve(static_cast<size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i) g.push_back(f.partial(i));
    return g;
}

/// sum_i x_i^2 in n variables.
inline Polynomial norm_sq(int n) {
    if (n < 1) throw std::invalid_argument("norm_sq: n must be >= 1");
    Polynomial p(n);
    for (int i = 0; i < n; ++i) {
        Monomial m(static_cast<size_t>(n), 0);
        m[static_cast<size_t>(i)] = 2;
        p.add_term(std::move(m), Scalar::integer(1));
    }
    return p;
}

}  // namespace eigencone
