#pragma once

#include <json.hpp>

#include "ghost5/dimensions.hpp"
#include "ghost5/ghost.hpp"
#include "ghost5/matrix.hpp"
#include "ghost5/newton.hpp"
#include "ghost5/valuation.hpp"

// JSON views of the public types.  Exact values always travel as strings
// or integers, never as floats; infinite valuations as "inf".

namespace ghost5 {

using json = nlohmann::ordered_json;

inline json to_json(const Valuation& v) {
    if (v.is_infinite()) return json("inf");
    return json(v.finite());
}

inline json to_json(const PadicApprox& p) { return json(p.str()); }

inline json to_json(const std::vector<Valuation>& vals) {
    json arr = json::array();
    for (const auto& v : vals) arr.push_back(to_json(v));
    return arr;
}

/// Row-major entries in canonical "a/b + c/d*i" form with the block
/// header {k, a, n}.
inline json matrix_to_json(const Matrix& m, long k, int a, long n) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        entries.push_back(std::move(row));
    }
    return json{{"k", k}, {"a", a}, {"n", n}, {"entries", std::move(entries)}};
}

/// {vertices: [[n, v|"inf"]...], slopes: [[num, den, length]...]}
inline json to_json(const NewtonPolygon& p) {
    json vertices = json::array();
    for (const auto& [idx, val] : p.vertices) vertices.push_back(json::array({idx, val}));
    json slopes = json::array();
    for (const auto& s : p.slopes) slopes.push_back(json::array({s.num, s.den, s.length}));
    return json{{"vertices", std::move(vertices)}, {"slopes", std::move(slopes)}};
}

inline json to_json(const TheoremReport& r) {
    return json{{"k", r.k},         {"a", r.a},         {"n", r.n},
                {"corank", r.corank}, {"bound", r.bound}, {"holds", r.holds}};
}

inline json to_json(const CorollaryReport& r) {
    return json{{"k", r.k},
                {"a", r.a},
                {"n", r.n},
                {"det_val", to_json(r.det_val)},
                {"ghost_val", to_json(r.ghost_val)},
                {"holds", r.holds}};
}

inline json to_json(const ProofIdentityReport& r) {
    return json{{"k", r.k},
                {"a", r.a},
                {"rank", r.rank},
                {"bound", r.bound},
                {"sum_is_zero", r.sum_is_zero},
                {"holds", r.holds}};
}

inline json to_json(const GhostCoefficient& g) {
    json support = json::array();
    for (const auto& [l, m] : g.support) support.push_back(json::array({l, m}));
    return json{{"n", g.n}, {"a", g.a}, {"support", std::move(support)}};
}

inline json to_json(const ConjectureReport& r) {
    return json{{"k", r.k},
                {"a", r.a},
                {"terms", r.terms},
                {"char_valuations", to_json(r.char_valuations)},
                {"ghost_valuations", to_json(r.ghost_valuations)},
                {"char_polygon", to_json(r.char_polygon)},
                {"ghost_polygon", to_json(r.ghost_polygon)},
                {"agree_up_to", r.agree_up_to},
                {"polygons_equal", r.polygons_equal}};
}

inline json to_json(const DimensionProfile& p) {
    return json{{"k", p.k},
                {"a", p.a},
                {"d_iw", p.iwahori},
                {"d_unr", p.unramified},
                {"d_unr_oracle", p.unramified_oracle},
                {"agree", p.agree()}};
}

}  // namespace ghost5
