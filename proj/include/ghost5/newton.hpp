#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ghost5/valuation.hpp"

namespace ghost5 {

/// One segment of a Newton polygon: reduced slope num/den repeated over
/// an integer horizontal length.
struct PolygonSlope {
    long num = 0;
    long den = 1;
    long length = 0;

    bool operator==(const PolygonSlope& o) const {
        return num == o.num && den == o.den && length == o.length;
    }
};

/// Lower convex hull of (index, valuation) points.  Vertices carry the
/// hull corners only; slopes are strictly increasing across segments.
struct NewtonPolygon {
    std::vector<std::pair<long, long>> vertices;
    std::vector<PolygonSlope> slopes;

    bool operator==(const NewtonPolygon& o) const {
        return vertices == o.vertices && slopes == o.slopes;
    }

    long last_index() const { return vertices.empty() ? 0 : vertices.back().first; }

    /// Hull value at integer x as an exact fraction (num, den); x must lie
    /// within [first vertex, last vertex].
    std::pair<long, long> value_at(long x) const {
        for (std::size_t s = 0; s + 1 < vertices.size(); ++s) {
            auto [x0, y0] = vertices[s];
            auto [x1, y1] = vertices[s + 1];
            if (x < x0 || x > x1) continue;
            long num = y0 * (x1 - x0) + (y1 - y0) * (x - x0);
            long den = x1 - x0;
            long g = std::gcd(num, den);
            if (g != 0) {
                num /= g;
                den /= g;
            }
            if (den < 0) {
                num = -num;
                den = -den;
            }
            return {num, den};
        }
        if (vertices.size() == 1 && x == vertices[0].first) return {vertices[0].second, 1};
        throw std::out_of_range("index outside polygon");
    }
};

/// Lower convex hull of the finite points, by monotone chain; points with
/// infinite valuation do not contribute.
inline NewtonPolygon newton_polygon(const std::vector<std::pair<long, Valuation>>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");

    std::vector<std::pair<long, long>> finite;
    bool has_zero = false;
    for (const auto& [idx, v] : points) {
        if (v.is_infinite()) continue;
        if (idx == 0) has_zero = true;
        finite.emplace_back(idx, v.finite());
    }
    if (!has_zero)
        throw std::invalid_argument("point at index 0 must have finite valuation");
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end(),
                             [](const auto& a, const auto& b) { return a.first == b.first; }),
                 finite.end());

    NewtonPolygon p;
    auto& hull = p.vertices;
    for (const auto& pt : finite) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull.back();
            // keep b only on a strict left turn (strictly increasing slopes)
            long cross = (b.first - a.first) * (pt.second - a.second) -
                         (b.second - a.second) * (pt.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        long dx = hull[s + 1].first - hull[s].first;
        long dy = hull[s + 1].second - hull[s].second;
        long g = std::gcd(dy, dx);
        PolygonSlope seg;
        seg.num = g == 0 ? 0 : dy / g;
        seg.den = g == 0 ? 1 : dx / g;
        if (seg.den < 0) {
            seg.num = -seg.num;
            seg.den = -seg.den;
        }
        seg.length = dx;
        p.slopes.push_back(seg);
    }
    return p;
}

}  // namespace ghost5
