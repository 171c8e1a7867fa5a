#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ghost5/hecke.hpp"
#include "ghost5/linalg.hpp"
#include "ghost5/valuation.hpp"

namespace ghost5 {

inline long default_stabilization_cap(long terms) { return 4 * terms + 16; }

/// Valuations of the coefficients c_0..c_terms of det(I - X P_n(k,a)),
/// grown in n until two consecutive minors agree on all of them.  The
/// entry valuations of P grow linearly in the row index, so the low
/// coefficients settle once n is modestly past terms.
inline std::vector<Valuation> stabilized_char_valuations(const WeightComponent& wc, long terms,
                                                         long cap = -1) {
    require_admissible(wc);
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    if (cap < 0) cap = default_stabilization_cap(terms);

    auto valuations_at = [&](long n) {
        std::vector<GaussianRational> coeffs = char_poly_prefix(block_minor(wc, n), terms);
        std::vector<Valuation> vals;
        vals.reserve(coeffs.size());
        for (const auto& c : coeffs) vals.push_back(val5(c));
        return vals;
    };

    std::vector<Valuation> prev = valuations_at(terms);
    for (long n = terms + 1; n <= cap; ++n) {
        std::vector<Valuation> cur = valuations_at(n);
        if (cur == prev) return cur;
        prev = std::move(cur);
    }
    throw std::runtime_error("stabilization cap exceeded at (k=" + std::to_string(wc.k) +
                             ", a=" + std::to_string(wc.a) + ", terms=" + std::to_string(terms) +
                             ", cap=" + std::to_string(cap) + ")");
}

}  // namespace ghost5
