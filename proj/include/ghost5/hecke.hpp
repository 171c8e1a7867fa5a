#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ghost5/dimensions.hpp"
#include "ghost5/matrix.hpp"
#include "ghost5/quaternion.hpp"
#include "ghost5/weight.hpp"

namespace ghost5 {

namespace detail {

/// Binomial coefficient extended to negative upper index:
/// C(m, r) = m (m-1) ... (m-r+1) / r!, zero for r < 0.
inline Integer gen_binomial(long m, long r) {
    if (r < 0) return Integer(0);
    Integer out;
    if (m >= 0) {
        if (r > m) return Integer(0);
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m),
                     static_cast<unsigned long>(r));
        return out;
    }
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r - m - 1),
                 static_cast<unsigned long>(r));
    return (r % 2 == 0) ? out : Integer(-out);
}

inline void require_weight(long k) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("weight out of modeled range: k=" + std::to_string(k));
}

}  // namespace detail

/// Entry P_{i,j} of the U_5 matrix on the power basis of Q_5<z>, weight k.
/// Zero unless i = j mod 4; otherwise
///   alpha^{k-i-2} alphabar^i (4 S + [i=j] (nu-1)^{k-2} nu^i),
/// with S the alternating binomial sum.  Row indices beyond k-2 fall into
/// negative binomial upper indices, which the extended binomial handles.
inline GaussianRational entry_closed_form(long k, long i, long j) {
    detail::require_weight(k);
    if (i < 0 || j < 0) throw std::invalid_argument("negative matrix index");
    if (((i - j) % 4 + 4) % 4 != 0) return GaussianRational();

    Integer sum(0);
    long top = i < j ? i : j;
    for (long n = 0; n <= top; ++n) {
        Integer term;
        mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(j),
                     static_cast<unsigned long>(n));
        term *= detail::gen_binomial(k - j - 2, i - n);
        sum += ((i - n) % 2 == 0) ? term : -term;
    }

    GaussianRational inner(Rational(4 * sum));
    if (i == j) {
        const GaussianRational nu = GaussianRational::i();
        inner += pow(nu - GaussianRational(1), k - 2) * pow(nu, i);
    }
    if (inner.is_zero()) return inner;
    return pow(alpha(), k - i - 2) * pow(alpha_bar(), i) * inner;
}

namespace detail {

/// Bivariate polynomial truncated at x-degree <= max_x, y-degree <= max_y.
class TruncatedBivariate {
public:
    TruncatedBivariate(long max_x, long max_y)
        : nx_(static_cast<std::size_t>(max_x) + 1),
          ny_(static_cast<std::size_t>(max_y) + 1),
          coeff_(nx_ * ny_) {}

    GaussianRational& at(std::size_t i, std::size_t j) { return coeff_[i * ny_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const {
        return coeff_[i * ny_ + j];
    }
    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }

    TruncatedBivariate operator*(const TruncatedBivariate& o) const {
        TruncatedBivariate out(static_cast<long>(nx_) - 1, static_cast<long>(ny_) - 1);
        for (std::size_t i = 0; i < nx_; ++i)
            for (std::size_t j = 0; j < ny_; ++j) {
                const GaussianRational& c = at(i, j);
                if (c.is_zero()) continue;
                for (std::size_t s = 0; i + s < nx_; ++s)
                    for (std::size_t t = 0; j + t < ny_; ++t) {
                        const GaussianRational& d = o.at(s, t);
                        if (!d.is_zero()) out.at(i + s, j + t) += c * d;
                    }
            }
        return out;
    }

    TruncatedBivariate& operator+=(const TruncatedBivariate& o) {
        for (std::size_t t = 0; t < coeff_.size(); ++t) coeff_[t] += o.coeff_[t];
        return *this;
    }

private:
    std::size_t nx_, ny_;
    std::vector<GaussianRational> coeff_;
};

}  // namespace detail

/// Independent route to the U_5 entries: expands the generating series
///   sum_delta (c x + d)^{k-1} / (c x + d - a x y - b y)
/// of the five weight-k actions as an exact power series, via the
/// geometric series of the denominator.  The coefficient of x^i y^j is
/// P_{i,j} (x carries the output index, y the input index).
inline Matrix entry_series_oracle(long k, long max_i, long max_j) {
    detail::require_weight(k);
    if (max_i < 0 || max_j < 0) throw std::invalid_argument("negative series bound");

    using detail::TruncatedBivariate;
    TruncatedBivariate total(max_i, max_j);
    for (const Mat2& delta : delta_matrices()) {
        const GaussianRational inv_d = delta.d.inverse();

        // u with denominator = d (1 - u); u has no constant term
        TruncatedBivariate u(max_i, max_j);
        if (max_i >= 1) u.at(1, 0) = -delta.c * inv_d;
        if (max_j >= 1) u.at(0, 1) = delta.b * inv_d;
        if (max_i >= 1 && max_j >= 1) u.at(1, 1) = delta.a * inv_d;

        TruncatedBivariate geom(max_i, max_j);
        geom.at(0, 0) = GaussianRational(1);
        TruncatedBivariate u_power = u;
        for (long m = 1; m <= max_i + max_j; ++m) {
            geom += u_power;
            if (m < max_i + max_j) u_power = u_power * u;
        }

        // numerator (c x + d)^{k-1}, truncated in x
        TruncatedBivariate numer(max_i, max_j);
        numer.at(0, 0) = GaussianRational(1);
        for (long t = 0; t < k - 1; ++t) {
            TruncatedBivariate next(max_i, max_j);
            for (std::size_t i = 0; i < numer.nx(); ++i) {
                if (numer.at(i, 0).is_zero()) continue;
                next.at(i, 0) += numer.at(i, 0) * delta.d;
                if (i + 1 < numer.nx()) next.at(i + 1, 0) += numer.at(i, 0) * delta.c;
            }
            numer = next;
        }

        TruncatedBivariate h = numer * geom;
        for (std::size_t i = 0; i < h.nx(); ++i)
            for (std::size_t j = 0; j < h.ny(); ++j) h.at(i, j) *= inv_d;
        total += h;
    }

    Matrix out(static_cast<std::size_t>(max_i) + 1, static_cast<std::size_t>(max_j) + 1);
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = total.at(i, j);
    return out;
}

/// Upper-left n x n principal minor of the component-a block:
/// entries P_{4r+a, 4c+a}, 0 <= r, c < n.
inline Matrix block_minor(const WeightComponent& wc, long n) {
    require_admissible(wc);
    if (n < 1) throw std::invalid_argument("minor size must be >= 1");
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c)
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                entry_closed_form(wc.k, 4 * r + wc.a, 4 * c + wc.a);
    return m;
}

/// U_2 eigenvalue on component a: ((1+i)/2)^{k-2} (-i)^a.
inline GaussianRational u2_eigenvalue(const WeightComponent& wc) {
    if (!parity_matches(wc.k, wc.a))
        throw std::invalid_argument("weight parity: (k=" + std::to_string(wc.k) +
                                    ", a=" + std::to_string(wc.a) + ") is not admissible");
    const GaussianRational half_one_plus_i(make_rational(1, 2), make_rational(1, 2));
    return pow(half_one_plus_i, wc.k - 2) * pow(-GaussianRational::i(), wc.a);
}

/// Matrix of U_2 on z^0..z^{k-2}: diagonal with (d,d) entry
/// ((-1-i)/2)^{k-2} (-i)^d.
inline Matrix u2_matrix(long k) {
    detail::require_weight(k);
    const std::size_t dim = static_cast<std::size_t>(k - 1);
    const GaussianRational scale =
        pow(GaussianRational(make_rational(-1, 2), make_rational(-1, 2)), k - 2);
    Matrix m(dim, dim);
    GaussianRational factor(1);
    const GaussianRational minus_nu = -GaussianRational::i();
    for (std::size_t d = 0; d < dim; ++d) {
        m(d, d) = scale * factor;
        factor *= minus_nu;
    }
    return m;
}

/// The Atkin-Lehner-style operator on the classical component-a block:
/// the weight-k action of [[0, 2+i], [-2+i, 0]], the image of the norm-5
/// quaternion 2i - k singled out by the level structure.  Zero except on
/// the anti-diagonal; the entry taking input degree 4c+a to output degree
/// 4r+a (with (4r+a) + (4c+a) = k-2) is (-2+i)^{4r+a} (2+i)^{4c+a}.
/// On the even components this agrees with the (-2-i)^{4c+a} form; on the
/// odd components the two differ by a global sign, and only this one
/// satisfies the rank bound of the proof identity.
inline Matrix antidiagonal_operator(const WeightComponent& wc) {
    const long d = d_iw(wc);  // checks admissibility
    Matrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    const GaussianRational lo(make_rational(-2), make_rational(1));  // -2+i
    const GaussianRational hi(make_rational(2), make_rational(1));   // 2+i
    for (long r = 0; r < d; ++r) {
        long c = d - 1 - r;
        m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            pow(lo, 4 * r + wc.a) * pow(hi, 4 * c + wc.a);
    }
    return m;
}

/// The classical block of U_5: the minor covering all monomial degrees
/// 4r+a <= k-2, i.e. block_minor at n = d_iw.
inline Matrix classical_block(const WeightComponent& wc) {
    const long d = d_iw(wc);
    return d == 0 ? Matrix(0, 0) : block_minor(wc, d);
}

}  // namespace ghost5
