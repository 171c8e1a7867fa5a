#pragma once

#include <array>
#include <vector>

#include "ghost5/matrix.hpp"

namespace ghost5 {

/// Quaternion w + x*i + y*j + z*k of the algebra ramified at 2 and
/// infinity, with half-integer coordinates stored exactly.
struct Quaternion {
    Rational w, x, y, z;

    Quaternion conj() const { return {w, -x, -y, -z}; }
};

/// Image in M_2(Q(i)) under 1 -> I, i -> [[0,1],[-1,0]],
/// j -> [[nu,0],[0,-nu]], k -> [[0,-nu],[-nu,0]], with nu realized as i.
inline Mat2 quaternion_image(const Quaternion& q) {
    GaussianRational nu = GaussianRational::i();
    return Mat2{
        GaussianRational(q.w) + GaussianRational(q.y) * nu,
        GaussianRational(q.x) - GaussianRational(q.z) * nu,
        GaussianRational(-q.x) - GaussianRational(q.z) * nu,
        GaussianRational(q.w) - GaussianRational(q.y) * nu,
    };
}

/// alpha = (1 + 3i)/2, the recurring constant of the U_5 entries.
inline const GaussianRational& alpha() {
    static const GaussianRational a(make_rational(1, 2), make_rational(3, 2));
    return a;
}

/// alpha's conjugate (1 - 3i)/2; carries the valuation growth of the
/// matrix rows (val5 = 1).
inline const GaussianRational& alpha_bar() {
    static const GaussianRational a(make_rational(1, 2), make_rational(-3, 2));
    return a;
}

/// The five determinant-5 matrices whose weight-k actions sum to U_5,
/// listed in the order delta_1 .. delta_5.
inline const std::array<Mat2, 5>& delta_matrices() {
    static const std::array<Mat2, 5> deltas = [] {
        const GaussianRational one(1), nu = GaussianRational::i();
        const GaussianRational a = alpha();
        std::array<Mat2, 5> d{};
        d[0] = quaternion_image(Quaternion{-2, 0, 1, 0});  // j - 2
        d[1] = Mat2{one - a, a, a - one, a};
        d[2] = Mat2{one - a, -a * nu, (a - one) * nu, a};
        d[3] = Mat2{one - a, a * nu, (one - a) * nu, a};
        d[4] = Mat2{one - a, -a, one - a, a};
        return d;
    }();
    return deltas;
}

struct UnitImage {
    Quaternion q;
    Mat2 mat;
    std::array<int, 4> mod5;  // residues of a, b, c, d at i = 2 mod 5
};

/// The 24 units of the maximal order: +-1, +-i, +-j, +-k and the sixteen
/// (+-1 +- i +- j +- k)/2, each with its image in M_2(Q(i)) and the
/// reference residues of that image mod 5.
inline const std::vector<UnitImage>& unit_images() {
    static const std::vector<UnitImage> units = [] {
        std::vector<UnitImage> out;
        auto add = [&out](Rational w, Rational x, Rational y, Rational z,
                          std::array<int, 4> mod5) {
            Quaternion q{w, x, y, z};
            out.push_back(UnitImage{q, quaternion_image(q), mod5});
            Quaternion n{-w, -x, -y, -z};
            std::array<int, 4> neg{};
            for (int t = 0; t < 4; ++t) neg[t] = (5 - mod5[t]) % 5;
            out.push_back(UnitImage{n, quaternion_image(n), neg});
        };
        const Rational h = make_rational(1, 2);
        // diagonal and anti-diagonal units first; their representations
        // are sparse, which lets the invariant-subspace sweep shrink early
        add(0, 0, 1, 0, {2, 0, 0, 3});   // j
        add(0, 0, 0, 1, {0, 3, 3, 0});   // k
        add(1, 0, 0, 0, {1, 0, 0, 1});   // 1
        add(0, 1, 0, 0, {0, 1, 4, 0});   // i
        add(h, h, h, h, {4, 2, 1, 2});
        add(-h, h, h, h, {3, 2, 1, 1});
        add(h, -h, h, h, {4, 1, 2, 2});
        add(h, h, -h, h, {2, 2, 1, 4});
        add(h, h, h, -h, {4, 4, 3, 2});
        add(-h, -h, h, h, {3, 1, 2, 1});
        add(-h, h, -h, h, {1, 2, 1, 3});
        add(-h, h, h, -h, {3, 4, 3, 1});
        return out;
    }();
    return units;
}

}  // namespace ghost5
