#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ghost5/gaussian.hpp"
#include "ghost5/matrix.hpp"

namespace ghost5 {

namespace detail {

/// Scales each row to Gaussian-integer entries.  Returns the product of
/// the scale factors (needed to undo the scaling in determinants).
inline Rational clear_rows(Matrix& m) {
    Rational scale(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l(1);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re.get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im.get_den().get_mpz_t());
        }
        if (l != 1) {
            GaussianRational f((Rational(l)));
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= f;
            scale *= l;
        }
    }
    return scale;
}

struct Elimination {
    std::size_t rank = 0;
    GaussianRational last_pivot;  // valid when rank > 0
    int sign = 1;
    Rational row_scale = Rational(1);
};

/// Fraction-free (Bareiss) elimination on a working copy.  Pivots are the
/// first nonzero entry of the current column, in row order.
inline Elimination bareiss(Matrix m) {
    Elimination out;
    out.row_scale = clear_rows(m);

    GaussianRational prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t p = r;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(r, c));
            out.sign = -out.sign;
        }
        const GaussianRational pivot = m(r, col);
        for (std::size_t rr = r + 1; rr < m.rows(); ++rr) {
            for (std::size_t cc = col + 1; cc < m.cols(); ++cc)
                m(rr, cc) = (pivot * m(rr, cc) - m(rr, col) * m(r, cc)) / prev;
            m(rr, col) = GaussianRational();
        }
        prev = pivot;
        ++r;
    }
    out.rank = r;
    out.last_pivot = prev;
    return out;
}

}  // namespace detail

inline long rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<long>(detail::bareiss(m).rank);
}

inline long corank(const Matrix& m) {
    long n = static_cast<long>(m.rows() < m.cols() ? m.rows() : m.cols());
    return n - rank(m);
}

inline GaussianRational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
    if (m.rows() == 0) return GaussianRational(1);
    auto e = detail::bareiss(m);
    if (e.rank < m.rows()) return GaussianRational();
    GaussianRational det = e.last_pivot / GaussianRational(e.row_scale);
    return e.sign > 0 ? det : -det;
}

/// Coefficients c_0..c_n of det(I - X*M), ascending in X; c_0 = 1.
struct CharPoly {
    std::vector<GaussianRational> coeffs;

    std::size_t degree_bound() const { return coeffs.size() - 1; }
};

/// Faddeev-LeVerrier iteration; all divisions exact over Q(i).
inline CharPoly char_poly(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
    const std::size_t n = m.rows();
    CharPoly cp;
    cp.coeffs.assign(n + 1, GaussianRational());
    cp.coeffs[0] = GaussianRational(1);
    if (n == 0) return cp;

    Matrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        GaussianRational ck = -(mk.trace() / GaussianRational(make_rational(static_cast<long>(k))));
        cp.coeffs[k] = ck;
        if (k < n) {
            Matrix shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += ck;
            mk = m * shifted;
        }
    }
    return cp;
}

/// First m+1 coefficients of det(I - X*M) from power traces and the
/// Newton identities; agrees with char_poly but needs only m products.
inline std::vector<GaussianRational> char_poly_prefix(const Matrix& m, long terms) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
    if (terms < 0) throw std::invalid_argument("terms must be >= 0");

    std::vector<GaussianRational> power_traces;  // tr(M^t), t = 1..terms
    Matrix b = m;
    for (long t = 1; t <= terms; ++t) {
        power_traces.push_back(b.trace());
        if (t < terms) b = b * m;
    }

    std::vector<GaussianRational> elem(terms + 1);
    elem[0] = GaussianRational(1);
    for (long t = 1; t <= terms; ++t) {
        GaussianRational s;
        for (long j = 1; j <= t; ++j) {
            GaussianRational term = elem[t - j] * power_traces[j - 1];
            s += (j % 2 == 1) ? term : -term;
        }
        elem[t] = s / GaussianRational(make_rational(t));
    }

    std::vector<GaussianRational> coeffs(terms + 1);
    for (long t = 0; t <= terms; ++t) coeffs[t] = (t % 2 == 0) ? elem[t] : -elem[t];
    return coeffs;
}

/// Basis of the right kernel {v : M v = 0}, returned as columns.
inline Matrix nullspace(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix w = m;

    std::vector<long> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && w(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t c = 0; c < cols; ++c) std::swap(w(p, c), w(r, c));
        GaussianRational inv = w(r, col).inverse();
        for (std::size_t c = col; c < cols; ++c) w(r, c) *= inv;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || w(rr, col).is_zero()) continue;
            GaussianRational f = w(rr, col);
            for (std::size_t c = col; c < cols; ++c) w(rr, c) -= f * w(r, c);
        }
        pivot_of_col[col] = static_cast<long>(r);
        ++r;
    }

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);

    Matrix basis(cols, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        basis(fc, j) = GaussianRational(1);
        for (std::size_t c = 0; c < cols; ++c) {
            long pr = pivot_of_col[c];
            if (pr >= 0) basis(c, j) = -w(static_cast<std::size_t>(pr), fc);
        }
    }
    return basis;
}

}  // namespace ghost5
