#pragma once

#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ghost5/gaussian.hpp"

namespace ghost5 {

/// Value of the 5-adic valuation: an integer, or +infinity for zero.
struct Valuation {
    bool inf = false;
    long val = 0;

    Valuation() = default;
    Valuation(long v) : inf(false), val(v) {}

    static Valuation infinity() {
        Valuation v;
        v.inf = true;
        return v;
    }

    bool is_infinite() const { return inf; }

    long finite() const {
        if (inf) throw std::domain_error("valuation is infinite");
        return val;
    }

    Valuation operator+(const Valuation& o) const {
        if (inf || o.inf) return infinity();
        return Valuation(val + o.val);
    }

    bool operator==(const Valuation& o) const {
        return inf == o.inf && (inf || val == o.val);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }

    // infinity compares greater than every finite value
    bool operator<(const Valuation& o) const {
        if (inf) return false;
        if (o.inf) return true;
        return val < o.val;
    }
    bool operator>=(const Valuation& o) const { return !(*this < o); }
    bool operator<=(const Valuation& o) const { return *this == o || *this < o; }
    bool operator>(const Valuation& o) const { return o < *this; }

    std::string str() const { return inf ? "inf" : std::to_string(val); }
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

inline std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

/// Exponent of 5 in a nonzero integer.
inline long ord5(Integer n) {
    if (n == 0) throw std::domain_error("ord5 of zero");
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), 5)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), 5);
        ++v;
    }
    return v;
}

/// Valuation of x in Q(i) at the prime over 5 picked out by i = 2 mod 5
/// (the associate class of 2-i).  On Q it restricts to the ordinary
/// 5-adic valuation; v(0) = +infinity.
///
/// Denominators are cleared first (only their 5-part matters), then the
/// Gaussian-integer part is stripped: while the residue at i = 2 vanishes
/// mod 5, multiply by 2+i and divide by 5.
inline Valuation val5(const GaussianRational& x) {
    if (x.is_zero()) return Valuation::infinity();

    Integer b = x.re.get_den(), d = x.im.get_den();
    Integer den;
    mpz_lcm(den.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    Integer a = x.re.get_num() * (den / b);
    Integer c = x.im.get_num() * (den / d);

    long v = -ord5(den);
    while (true) {
        Integer res = (a + 2 * c) % 5;
        if (res != 0) break;
        Integer a2 = 2 * a - c;  // (a + c i)(2 + i) = (2a - c) + (a + 2c) i
        Integer c2 = a + 2 * c;
        mpz_divexact_ui(a.get_mpz_t(), a2.get_mpz_t(), 5);
        mpz_divexact_ui(c.get_mpz_t(), c2.get_mpz_t(), 5);
        ++v;
    }
    return Valuation(v);
}

inline Valuation val5(const Rational& q) { return val5(GaussianRational(q)); }

/// Truncated 5-adic expansion: a residue mod 5^precision.
struct PadicApprox {
    Integer residue;
    int precision = 1;

    std::string str() const { return residue.get_str(); }

    bool operator==(const PadicApprox& o) const {
        return residue == o.residue && precision == o.precision;
    }
};

inline Integer pow5(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 5, static_cast<unsigned long>(e));
    return p;
}

/// The square root of -1 in Z_5 congruent to 2 mod 5, to N digits.
/// Lifted one digit at a time: x -> x + t*5^j with t killing the next
/// digit of x^2 + 1.
inline PadicApprox hensel_sqrt_minus_one(int precision) {
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    Integer x = 2;
    Integer mod = 5;
    for (int j = 1; j < precision; ++j) {
        Integer next_mod = mod * 5;
        Integer err = (x * x + 1) % next_mod;  // divisible by 5^j
        Integer carry = (err / mod) % 5;
        // t = -carry / (2x) mod 5; 2x = 4 mod 5, and 4^{-1} = 4
        Integer t = ((5 - carry) * 4) % 5;
        x += t * mod;
        mod = next_mod;
    }
    return PadicApprox{x % mod, precision};
}

/// Ring map Q(i) -> Z/5^N through i |-> nu_5, defined on 5-integral
/// arguments.  Rejects inputs of negative valuation.
inline PadicApprox embed_mod(const GaussianRational& x, int precision) {
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");

    Integer b = x.re.get_den(), d = x.im.get_den();
    Integer den;
    mpz_lcm(den.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    Integer a = x.re.get_num() * (den / b);
    Integer c = x.im.get_num() * (den / d);

    long e = ord5(den);
    Integer den_unit = den / pow5(e);

    Integer big_mod = pow5(precision + e);
    Integer nu = hensel_sqrt_minus_one(precision + static_cast<int>(e)).residue;
    Integer img = (a + c * nu) % big_mod;
    if (img < 0) img += big_mod;

    Integer shift = pow5(e);
    if (img % shift != 0) throw std::invalid_argument("not 5-integral");
    img /= shift;

    Integer mod = pow5(precision);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den_unit.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::invalid_argument("not 5-integral");
    Integer r = (img * inv) % mod;
    if (r < 0) r += mod;
    return PadicApprox{r, precision};
}

}  // namespace ghost5
