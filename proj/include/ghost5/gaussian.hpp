#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ghost5 {

using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonical rational (lowest terms, positive denominator).
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Element of Q(i), kept componentwise in lowest terms by mpq_class.
/// Realizes the field the Hecke matrix entries live in; the 5-adic side
/// is reached through i |-> nu_5 (see valuation.hpp).
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// re^2 + im^2, the norm down to Q.
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational operator+(const GaussianRational& w) const {
        return {re + w.re, im + w.im};
    }
    GaussianRational operator-(const GaussianRational& w) const {
        return {re - w.re, im - w.im};
    }
    GaussianRational operator*(const GaussianRational& w) const {
        return {re * w.re - im * w.im, re * w.im + im * w.re};
    }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rational n = norm();
        return {re / n, -im / n};
    }

    GaussianRational operator/(const GaussianRational& w) const {
        return *this * w.inverse();
    }

    GaussianRational& operator+=(const GaussianRational& w) {
        re += w.re;
        im += w.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& w) {
        re -= w.re;
        im -= w.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& w) {
        *this = *this * w;
        return *this;
    }

    bool operator==(const GaussianRational& w) const { return re == w.re && im == w.im; }
    bool operator!=(const GaussianRational& w) const { return !(*this == w); }
};

/// x^e for any integer e (negative exponents via the field inverse).
inline GaussianRational pow(const GaussianRational& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    GaussianRational acc(1), base = x;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

/// Canonical "num/den" form, denominator always shown.
inline std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Canonical text form "a/b + c/d*i"; signs live in the numerators.
inline std::string to_string(const GaussianRational& z) {
    return rational_str(z.re) + " + " + rational_str(z.im) + "*i";
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z);
}

}  // namespace ghost5
