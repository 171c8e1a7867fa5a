#pragma once

// Independent reference computations used only by the tests: everything
// here recomputes a library quantity by a different route.

#include <random>
#include <utility>
#include <vector>

#include "ghost5/dimensions.hpp"
#include "ghost5/gaussian.hpp"
#include "ghost5/ghost.hpp"
#include "ghost5/valuation.hpp"

namespace oracles {

using ghost5::GaussianRational;
using ghost5::Integer;
using ghost5::Rational;
using ghost5::Valuation;

/// Valuation by literal repeated division by 2-i in Z[i]: the quotient
/// (a+ci)/(2-i) = ((2a-c) + (a+2c)i)/5 is kept only while both components
/// divide exactly.
inline Valuation valuation_by_division(const GaussianRational& x) {
    if (x.is_zero()) return Valuation::infinity();

    Integer b = x.re.get_den(), d = x.im.get_den();
    Integer den;
    mpz_lcm(den.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    Integer a = x.re.get_num() * (den / b);
    Integer c = x.im.get_num() * (den / d);

    long v = -ghost5::ord5(den);
    while (true) {
        Integer qa = 2 * a - c;
        Integer qc = a + 2 * c;
        if (qa % 5 != 0 || qc % 5 != 0) break;
        a = qa / 5;
        c = qc / 5;
        ++v;
    }
    return Valuation(v);
}

/// Brute-force square root of -1 mod 5^N in the residue class of 2.
inline Integer hensel_brute_force(int precision) {
    Integer mod = ghost5::pow5(precision);
    for (Integer x = 2; x < mod; x += 5)
        if ((x * x + 1) % mod == 0) return x;
    throw std::logic_error("no square root found");
}

/// exp(5m) as an exact rational, truncated deep enough that the tail has
/// 5-adic valuation >= 8.
inline Rational exp5_truncated(long m) {
    Rational sum(0);
    Rational term(1);
    for (long t = 1; t <= 12; ++t) {
        sum += term;
        term *= ghost5::make_rational(5 * m, t);
    }
    sum += term;
    return sum;
}

/// v_5(w_k - w_l) straight from the weight coordinates w = exp(5(k-2))-1.
inline Valuation wk_val_diff_exp(long k, long l) {
    Rational diff = exp5_truncated(k - 2) - exp5_truncated(l - 2);
    return ghost5::val5(GaussianRational(diff));
}

/// Ghost support by plain enumeration up to a fixed bound, without the
/// saturation stopping rule.
inline std::vector<std::pair<long, long>> ghost_support_enumerated(long n, int a, long l_max) {
    std::vector<std::pair<long, long>> out;
    for (long l = (a % 2 == 0) ? 6 : 4; l <= l_max; l += 4) {
        long m = ghost5::ghost_exponent(n, l, a);
        if (m > 0) out.emplace_back(l, m);
    }
    return out;
}

struct Rng {
    std::mt19937 gen;

    explicit Rng(unsigned seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    Rational rational(long max_abs = 40, long max_den = 24) {
        return ghost5::make_rational(integer(-max_abs, max_abs), integer(1, max_den));
    }

    GaussianRational gaussian() { return {rational(), rational()}; }

    /// Denominator prime to 5, so the value is 5-integral.
    GaussianRational gaussian_5integral() {
        long den = integer(1, 24);
        while (den % 5 == 0) den = integer(1, 24);
        return {ghost5::make_rational(integer(-60, 60), den),
                ghost5::make_rational(integer(-60, 60), den)};
    }

    ghost5::Matrix matrix(std::size_t rows, std::size_t cols, long max_abs = 9) {
        ghost5::Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = GaussianRational(ghost5::make_rational(integer(-max_abs, max_abs)),
                                           ghost5::make_rational(integer(-max_abs, max_abs)));
        return m;
    }
};

}  // namespace oracles
