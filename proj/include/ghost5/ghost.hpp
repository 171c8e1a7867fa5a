#pragma once

#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "ghost5/charseries.hpp"
#include "ghost5/dimensions.hpp"
#include "ghost5/hecke.hpp"
#include "ghost5/linalg.hpp"
#include "ghost5/newton.hpp"
#include "ghost5/valuation.hpp"
#include "ghost5/weight.hpp"

namespace ghost5 {

/// Multiplicity of the zero w_l in the n-th ghost coefficient on
/// component a: min{n - d_unr, d_iw - d_unr - n} inside the open interval
/// (d_unr, d_iw - d_unr), zero outside.
inline long ghost_exponent(long n, long l, int a) {
    WeightComponent wl{l, a};
    long du = d_unr(wl);
    long di = d_iw(wl);
    if (n <= du || n >= di - du) return 0;
    long left = n - du, right = di - du - n;
    return left < right ? left : right;
}

/// The n-th ghost coefficient g_n^{(a)} as its finite zero multiset
/// {(l, m_n(l))}.
struct GhostCoefficient {
    long n = 0;
    int a = 0;
    std::vector<std::pair<long, long>> support;  // (weight l, multiplicity)
};

/// Enumerates the support of g_n^{(a)}.  Weights run over the admissible
/// class of a; the scan stops once six consecutive weights (one full
/// period of the +24 recursion) all have d_unr >= n, after which every
/// larger weight does too.
inline GhostCoefficient ghost_coefficient(long n, int a) {
    GhostCoefficient g;
    g.n = n;
    g.a = a;
    if (n < 1) return g;
    long l = (a % 2 == 0) ? 6 : 4;
    int saturated = 0;
    while (saturated < 6) {
        WeightComponent wl{l, a};
        if (d_unr(wl) >= n)
            ++saturated;
        else
            saturated = 0;
        long m = ghost_exponent(n, l, a);
        if (m > 0) g.support.emplace_back(l, m);
        l += 4;
    }
    return g;
}

/// Ghost series on one component; coefficients are produced on demand.
class GhostSeries {
public:
    explicit GhostSeries(int a) : a_(a) {}

    int component() const { return a_; }

    const GhostCoefficient& coefficient(long n) {
        auto it = coeffs_.find(n);
        if (it == coeffs_.end()) it = coeffs_.emplace(n, ghost_coefficient(n, a_)).first;
        return it->second;
    }

private:
    int a_;
    std::map<long, GhostCoefficient> coeffs_;
};

/// v_5(w_k - w_l) for the weight coordinate w_k = exp(5(k-2)) - 1:
/// equals 1 + v_5(k - l), infinite on the diagonal.
inline Valuation wk_val_diff(long k, long l) {
    if (k == l) return Valuation::infinity();
    return Valuation(1 + ord5(Integer(std::abs(k - l))));
}

/// Valuation of g_n^{(a)}(w_k): the support sum of m * v_5(w_k - w_l).
/// Infinite exactly when k itself carries a ghost zero at level n.
inline Valuation ghost_coeff_valuation(long n, const WeightComponent& wc) {
    require_admissible(wc);
    if (n < 1) return Valuation(0);
    GhostCoefficient g = ghost_coefficient(n, wc.a);
    Valuation total(0);
    for (const auto& [l, m] : g.support) {
        Valuation diff = wk_val_diff(wc.k, l);
        for (long t = 0; t < m && !total.is_infinite(); ++t) total = total + diff;
        if (total.is_infinite()) break;
    }
    return total;
}

/// Newton polygon of the ghost coefficients evaluated at w_k, indices
/// 0..terms (index 0 pinned at valuation 0).
inline NewtonPolygon ghost_newton_polygon(const WeightComponent& wc, long terms) {
    require_admissible(wc);
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    std::vector<std::pair<long, Valuation>> pts;
    pts.emplace_back(0, Valuation(0));
    for (long n = 1; n <= terms; ++n) pts.emplace_back(n, ghost_coeff_valuation(n, wc));
    return newton_polygon(pts);
}

struct TheoremReport {
    long k = 0;
    int a = 0;
    long n = 0;
    long corank = 0;
    long bound = 0;
    bool holds = false;

    bool exact() const { return corank == bound; }
};

/// Corank lower bound of the main theorem on the n x n minor.
inline TheoremReport check_theorem(const WeightComponent& wc, long n) {
    require_admissible(wc);
    TheoremReport r;
    r.k = wc.k;
    r.a = wc.a;
    r.n = n;
    r.corank = corank(block_minor(wc, n));
    r.bound = ghost_exponent(n, wc.k, wc.a);
    r.holds = r.corank >= r.bound;
    return r;
}

struct CorollaryReport {
    long k = 0;
    int a = 0;
    long n = 0;
    Valuation det_val;
    Valuation ghost_val;
    bool holds = false;
};

/// Divisibility of det P_n(k,a) by the ghost coefficient at w_k, read as
/// a valuation inequality; a vanishing determinant counts as divisible.
inline CorollaryReport check_corollary(const WeightComponent& wc, long n) {
    require_admissible(wc);
    CorollaryReport r;
    r.k = wc.k;
    r.a = wc.a;
    r.n = n;
    r.det_val = val5(determinant(block_minor(wc, n)));
    r.ghost_val = ghost_coeff_valuation(n, wc);
    r.holds = r.det_val >= r.ghost_val;
    return r;
}

struct ProofIdentityReport {
    long k = 0;
    int a = 0;
    long rank = 0;
    long bound = 0;
    bool sum_is_zero = false;
    bool holds = false;
};

/// The classical U_5 block plus the anti-diagonal operator represents a
/// map through the unramified space, so its rank is capped by d_unr.
inline ProofIdentityReport check_proof_identity(const WeightComponent& wc,
                                                long weight_cap = kDefaultWeightCap) {
    require_admissible(wc);
    if (wc.k > weight_cap)
        throw std::invalid_argument("weight cap exceeded: k=" + std::to_string(wc.k));
    ProofIdentityReport r;
    r.k = wc.k;
    r.a = wc.a;
    Matrix m = classical_block(wc) + antidiagonal_operator(wc);
    r.rank = rank(m);
    r.bound = d_unr(wc);
    r.sum_is_zero = m.is_zero();
    r.holds = r.rank <= r.bound;
    return r;
}

struct ConjectureReport {
    long k = 0;
    int a = 0;
    long terms = 0;
    std::vector<Valuation> char_valuations;
    std::vector<Valuation> ghost_valuations;
    NewtonPolygon char_polygon;
    NewtonPolygon ghost_polygon;
    long agree_up_to = 0;
    bool polygons_equal = false;
};

/// Side-by-side Newton polygons of the stabilized characteristic series
/// and the ghost series; agree_up_to is the largest index through which
/// the two hulls coincide.  Purely a comparison, nothing is asserted.
inline ConjectureReport compare_conjecture(const WeightComponent& wc, long terms,
                                           long cap = -1) {
    require_admissible(wc);
    ConjectureReport r;
    r.k = wc.k;
    r.a = wc.a;
    r.terms = terms;
    r.char_valuations = stabilized_char_valuations(wc, terms, cap);
    r.ghost_valuations.reserve(terms + 1);
    r.ghost_valuations.emplace_back(0);
    for (long n = 1; n <= terms; ++n)
        r.ghost_valuations.push_back(ghost_coeff_valuation(n, wc));

    std::vector<std::pair<long, Valuation>> char_pts, ghost_pts;
    for (long n = 0; n <= terms; ++n) {
        char_pts.emplace_back(n, r.char_valuations[n]);
        ghost_pts.emplace_back(n, r.ghost_valuations[n]);
    }
    r.char_polygon = newton_polygon(char_pts);
    r.ghost_polygon = newton_polygon(ghost_pts);

    long limit = std::min(r.char_polygon.last_index(), r.ghost_polygon.last_index());
    long agree = 0;
    for (long x = 1; x <= limit; ++x) {
        if (r.char_polygon.value_at(x) != r.ghost_polygon.value_at(x)) break;
        agree = x;
    }
    r.agree_up_to = agree;
    r.polygons_equal = r.char_polygon == r.ghost_polygon;
    return r;
}

}  // namespace ghost5
