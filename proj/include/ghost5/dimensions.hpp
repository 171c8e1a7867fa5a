#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "ghost5/linalg.hpp"
#include "ghost5/matrix.hpp"
#include "ghost5/quaternion.hpp"
#include "ghost5/weight.hpp"

namespace ghost5 {

inline constexpr long kDefaultWeightCap = 120;

/// Number of monomials z^d, 0 <= d <= k-2, with d = a mod 4.  Defined for
/// every component; equals the Iwahori-level dimension on admissible pairs.
inline long monomial_count(long k, int a) {
    if (a > k - 2) return 0;
    return (k - 2 - a) / 4 + 1;
}

/// Dimension of the weight-k Iwahori-level space on component a.
inline long d_iw(const WeightComponent& wc) {
    require_admissible(wc);
    return monomial_count(wc.k, wc.a);
}

/// Dimension of the weight-k unramified-level space on component a:
/// base values for the six smallest admissible weights, plus one for
/// every 24 added to the weight.
inline long d_unr(const WeightComponent& wc) {
    require_admissible(wc);
    // rows k0 = 1..6; columns a = 0..3 with k = 4*k0 + 2 for even a
    // and k = 4*k0 for odd a
    static constexpr int base[6][4] = {
        {0, 0, 0, 0},  // k0 = 1
        {1, 1, 0, 0},  // k0 = 2
        {1, 0, 1, 0},  // k0 = 3
        {1, 1, 0, 0},  // k0 = 4
        {1, 1, 1, 1},  // k0 = 5
        {2, 1, 1, 0},  // k0 = 6
    };
    long base_weight = weight_of(1, wc.a);
    long steps = 0, k = wc.k;
    long max_base = weight_of(6, wc.a);
    if (k > max_base) {
        steps = (k - max_base + 23) / 24;  // smallest shift landing in the table
        k -= 24 * steps;
    }
    long k0 = (k - base_weight) / 4 + 1;
    return base[k0 - 1][wc.a] + steps;
}

/// Matrix of the weight-(k-2) right action of u on z^0..z^{k-2}:
/// column d holds the coefficients of (p z + q)^d (r z + s)^{k-2-d}.
inline Matrix unit_representation(const Mat2& u, long k) {
    const std::size_t dim = static_cast<std::size_t>(k - 1);
    Matrix rep(dim, dim);
    // (p z + q)^d, extended one factor at a time; tail powers of (r z + s)
    // likewise, taken from the top
    std::vector<std::vector<GaussianRational>> top(dim), bottom(dim);
    std::vector<GaussianRational> poly{GaussianRational(1)};
    auto mul_linear = [](const std::vector<GaussianRational>& f, const GaussianRational& z1,
                         const GaussianRational& z0) {
        std::vector<GaussianRational> out(f.size() + 1);
        for (std::size_t t = 0; t < f.size(); ++t) {
            out[t] += f[t] * z0;
            out[t + 1] += f[t] * z1;
        }
        return out;
    };
    for (std::size_t d = 0; d < dim; ++d) {
        top[d] = poly;
        poly = mul_linear(poly, u.a, u.b);
    }
    poly = {GaussianRational(1)};
    for (std::size_t d = 0; d < dim; ++d) {
        bottom[dim - 1 - d] = poly;
        poly = mul_linear(poly, u.c, u.d);
    }
    for (std::size_t d = 0; d < dim; ++d) {
        std::vector<GaussianRational> col(dim);
        for (std::size_t s = 0; s < top[d].size(); ++s)
            for (std::size_t t = 0; t < bottom[d].size(); ++t)
                if (!top[d][s].is_zero() && !bottom[d][t].is_zero())
                    col[s + t] += top[d][s] * bottom[d][t];
        for (std::size_t r = 0; r < dim; ++r) rep(r, d) = col[r];
    }
    return rep;
}

/// Basis (as columns) of the joint fixed subspace of all 24 unit actions
/// on polynomials of degree <= k-2, i.e. the common kernel of rho(u) - I.
/// The kernel is intersected one unit at a time.
inline Matrix unit_invariant_basis(long k) {
    const std::size_t dim = static_cast<std::size_t>(k - 1);
    Matrix basis = Matrix::identity(dim);
    for (const UnitImage& u : unit_images()) {
        if (basis.cols() == 0) break;
        Matrix rep = unit_representation(u.mat, k);
        Matrix constraint = rep * basis - basis;
        if (constraint.is_zero()) continue;
        basis = basis * nullspace(constraint);
    }
    return basis;
}

/// Independent route to d_unr: dimension of the intersection of the unit
/// fixed subspace with the span of monomials z^d, d = a mod 4.
inline long d_unr_oracle(const WeightComponent& wc, const Matrix& invariant_basis) {
    require_admissible(wc);
    const std::size_t dim = static_cast<std::size_t>(wc.k - 1);
    std::vector<std::size_t> off_rows;
    for (std::size_t d = 0; d < dim; ++d)
        if (d % 4 != static_cast<std::size_t>(wc.a)) off_rows.push_back(d);
    Matrix restricted(off_rows.size(), invariant_basis.cols());
    for (std::size_t r = 0; r < off_rows.size(); ++r)
        for (std::size_t c = 0; c < invariant_basis.cols(); ++c)
            restricted(r, c) = invariant_basis(off_rows[r], c);
    return static_cast<long>(invariant_basis.cols()) - rank(restricted);
}

inline long d_unr_oracle(const WeightComponent& wc, long weight_cap = kDefaultWeightCap) {
    require_admissible(wc);
    if (wc.k > weight_cap)
        throw std::invalid_argument("weight cap exceeded: k=" + std::to_string(wc.k));
    return d_unr_oracle(wc, unit_invariant_basis(wc.k));
}

/// Classical dimensions of one component, with both routes to d_unr.
struct DimensionProfile {
    long k = 0;
    int a = 0;
    long iwahori = 0;
    long unramified = 0;
    long unramified_oracle = 0;

    bool agree() const { return unramified == unramified_oracle; }
};

inline DimensionProfile dimension_profile(const WeightComponent& wc,
                                          const Matrix& invariant_basis) {
    return DimensionProfile{wc.k, wc.a, d_iw(wc), d_unr(wc),
                            d_unr_oracle(wc, invariant_basis)};
}

}  // namespace ghost5
