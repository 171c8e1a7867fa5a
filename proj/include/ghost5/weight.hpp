#pragma once

#include <stdexcept>
#include <string>

namespace ghost5 {

/// A weight k together with its U_2-eigencomponent a in {0,1,2,3}.
/// Admissible pairs follow the parity convention k = 2 mod 4 for a in
/// {0,2} and k = 0 mod 4 for a in {1,3}.
struct WeightComponent {
    long k = 0;
    int a = 0;

    WeightComponent() = default;
    WeightComponent(long k_, int a_) : k(k_), a(a_) {}

    bool operator==(const WeightComponent& o) const { return k == o.k && a == o.a; }
};

inline bool parity_matches(long k, int a) {
    if (k < 2 || k % 2 != 0 || a < 0 || a > 3) return false;
    return (a % 2 == 0) ? (k % 4 == 2) : (k % 4 == 0);
}

inline bool admissible(const WeightComponent& wc) {
    return wc.k >= 4 && parity_matches(wc.k, wc.a);
}

inline void require_admissible(const WeightComponent& wc) {
    if (!admissible(wc))
        throw std::invalid_argument("weight parity: (k=" + std::to_string(wc.k) +
                                    ", a=" + std::to_string(wc.a) + ") is not admissible");
}

/// Weight attached to a column index k0 of the corank tables.
inline long weight_of(long k0, int a) { return (a % 2 == 0) ? 4 * k0 + 2 : 4 * k0; }

}  // namespace ghost5
