#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace eigencone {

using Rational = boost::multiprecision::cpp_rational;

/**
 * Exact element of the ring Q[sqrt(3)]: value = a + b*sqrt(3) with a, b
 * arbitrary-precision rationals. All arithmetic is exact; sqrt(3) only
 * enters numerically in to_double().
 */
struct Scalar {
    Rational a;
    Rational b;

    Scalar() : a(0), b(0) {}
    explicit Scalar(long v) : a(v), b(0) {}
    Scalar(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

    static Scalar integer(long v) { return Scalar(Rational(v), Rational(0)); }
    static Scalar rational(long num, long den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        return Scalar(Rational(num, den), Rational(0));
    }
    /// coef * sqrt(3)
    static Scalar sqrt3(long num, long den = 1) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        return Scalar(Rational(0), Rational(num, den));
    }

    [[nodiscard]] bool is_zero() const { return a == 0 && b == 0; }

    friend Scalar operator+(const Scalar& u, const Scalar& v) {
        return {u.a + v.a, u.b + v.b};
    }
    friend Scalar operator-(const Scalar& u, const Scalar& v) {
        return {u.a - v.a, u.b - v.b};
    }
    friend Scalar operator-(const Scalar& u) { return {-u.a, -u.b}; }
    // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 3 b1 b2) + (a1 b2 + a2 b1) s,  s^2 = 3
    friend Scalar operator*(const Scalar& u, const Scalar& v) {
        return {u.a * v.a + 3 * (u.b * v.b), u.a * v.b + v.a * u.b};
    }
    Scalar& operator+=(const Scalar& v) { a += v.a; b += v.b; return *this; }
    Scalar& operator-=(const Scalar& v) { a -= v.a; b -= v.b; return *this; }
    Scalar& operator*=(const Scalar& v) { *this = *this * v; return *this; }

    friend bool operator==(const Scalar& u, const Scalar& v) {
        return u.a == v.a && u.b == v.b;
    }
    friend bool operator!=(const Scalar& u, const Scalar& v) { return !(u == v); }

    /// Exact division; the conjugate trick keeps the result in Q[sqrt(3)].
    friend Scalar operator/(const Scalar& u, const Scalar& v) {
        if (v.is_zero()) throw std::domain_error("Scalar: division by zero");
        // 1/(c + d s) = (c - d s)/(c^2 - 3 d^2); the norm c^2 - 3 d^2 never
        // vanishes for nonzero (c, d) because sqrt(3) is irrational.
        Rational nrm = v.a * v.a - 3 * (v.b * v.b);
        Scalar num = u * Scalar(v.a, -v.b);
        return {num.a / nrm, num.b / nrm};
    }

    [[nodiscard]] double to_double() const {
        static const double s3 = std::sqrt(3.0);
        return rational_to_double(a) + rational_to_double(b) * s3;
    }

    /// True when the value is a plain rational (no sqrt(3) part).
    [[nodiscard]] bool is_rational() const { return b == 0; }

    [[nodiscard]] std::string str() const {
        std::ostringstream os;
        if (b == 0) {
            os << a;
        } else if (a == 0) {
            os << b << "*sqrt3";
        } else {
            os << a << (b > 0 ? "+" : "-");
            Rational ab = b > 0 ? b : Rational(-b);
            os << ab << "*sqrt3";
        }
        return os.str();
    }

    static double rational_to_double(const Rational& r) {
        const auto& num = boost::multiprecision::numerator(r);
        const auto& den = boost::multiprecision::denominator(r);
        // below 2^53 both conversions are exact, so the division is
        // correctly rounded
        if (num >= -(1LL << 53) && num <= (1LL << 53) && den <= (1LL << 53)) {
            return static_cast<double>(num.convert_to<int64_t>()) /
                   static_cast<double>(den.convert_to<int64_t>());
        }
        return r.convert_to<double>();
    }
};

}  // namespace eigencone
