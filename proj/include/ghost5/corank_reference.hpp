#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace ghost5 {

inline constexpr long kTableK0Min = 3;
inline constexpr long kTableK0Max = 20;
inline constexpr long kTableNMin = 2;
inline constexpr long kTableNMax = 10;

/// Reference coranks of the minors P_n(k, a) over the published grid:
/// one table per component a, rows n = 2..10, columns k0 = 3..20, with
/// k = 4*k0+2 for a in {0,2} and k = 4*k0 for a in {1,3}.  Zero means a
/// full-rank minor (left blank in the table layout).
///
/// One cell is recorded with a corrected value (see corank_errata): the
/// published grid prints 1 at (a=1, k0=20, n=4), but exact arithmetic
/// gives corank 0 there by independent routes (Bareiss determinant,
/// Faddeev-LeVerrier characteristic coefficient, entries checked against
/// the generating-series expansion), consistent with d_unr(80,1) = 4 and
/// the bound-equality pattern holding on every other cell.
inline const std::array<std::array<std::array<int, 18>, 9>, 4>& corank_reference_tables() {
    static const std::array<std::array<std::array<int, 18>, 9>, 4> tables = {{
        // a = 0
        {{
            {{1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
            {{0, 1, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
            {{0, 0, 1, 1, 3, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0}},
            {{0, 0, 0, 0, 2, 2, 3, 3, 3, 2, 3, 2, 2, 2, 2, 1, 2, 1}},
            {{0, 0, 0, 0, 1, 1, 2, 3, 4, 3, 4, 3, 3, 3, 3, 2, 3, 2}},
            {{0, 0, 0, 0, 0, 0, 1, 2, 3, 3, 5, 4, 4, 4, 4, 3, 4, 3}},
            {{0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 4, 5, 5, 5, 4, 5, 4}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 3, 4, 5, 6, 5, 6, 5}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 3, 4, 5, 5, 7, 6}},
        }},
        // a = 1
        {{
            {{1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
            {{0, 0, 1, 2, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0}},
            {{0, 0, 0, 1, 2, 2, 3, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 0}},  // last cell: erratum
            {{0, 0, 0, 0, 1, 1, 3, 3, 3, 3, 3, 2, 3, 2, 2, 2, 2, 1}},
            {{0, 0, 0, 0, 0, 0, 2, 2, 3, 4, 4, 3, 4, 3, 3, 3, 3, 2}},
            {{0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 4, 5, 4, 4, 4, 4, 3}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 3, 5, 5, 5, 5, 5, 4}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 4, 5, 6, 6, 5}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 3, 4, 5, 6, 6}},
        }},
        // a = 2
        {{
            {{0, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
            {{0, 1, 1, 2, 2, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0}},
            {{0, 0, 0, 1, 2, 3, 2, 3, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1}},
            {{0, 0, 0, 0, 1, 2, 2, 4, 3, 3, 3, 3, 2, 3, 2, 2, 2, 2}},
            {{0, 0, 0, 0, 0, 1, 1, 3, 3, 4, 4, 4, 3, 4, 3, 3, 3, 3}},
            {{0, 0, 0, 0, 0, 0, 0, 2, 2, 3, 4, 5, 4, 5, 4, 4, 4, 4}},
            {{0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 4, 6, 5, 5, 5, 5}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 3, 5, 5, 6, 6, 6}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 4, 5, 6, 7}},
        }},
        // a = 3
        {{
            {{0, 1, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
            {{0, 0, 0, 2, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0}},
            {{0, 0, 0, 1, 1, 2, 3, 3, 2, 3, 2, 2, 2, 2, 1, 2, 1, 1}},
            {{0, 0, 0, 0, 0, 1, 2, 3, 3, 4, 3, 3, 3, 3, 2, 3, 2, 2}},
            {{0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 4, 4, 4, 4, 3, 4, 3, 3}},
            {{0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 3, 4, 5, 5, 4, 5, 4, 4}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 3, 4, 5, 5, 6, 5, 5}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 4, 6, 6, 6}},
            {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 3, 5, 5, 6}},
        }},
    }};
    return tables;
}

inline int corank_reference(int a, long k0, long n) {
    if (a < 0 || a > 3 || k0 < kTableK0Min || k0 > kTableK0Max || n < kTableNMin ||
        n > kTableNMax)
        throw std::out_of_range("cell outside reference grid");
    return corank_reference_tables()[a][n - kTableNMin][k0 - kTableK0Min];
}

struct CorankErratum {
    int a;
    long k0, n;
    int published;
    int computed;
};

/// Cells where the published grid disagrees with exact computation.
inline const std::vector<CorankErratum>& corank_errata() {
    static const std::vector<CorankErratum> errata = {{1, 20, 4, 1, 0}};
    return errata;
}

}  // namespace ghost5
