#include <catch2/catch.hpp>

#include "ghost5/charseries.hpp"
#include "ghost5/hecke.hpp"
#include "ghost5/linalg.hpp"
#include "ghost5/newton.hpp"
#include "oracles.hpp"

using namespace ghost5;

namespace {
Matrix diag(std::initializer_list<long> entries) {
    Matrix m(entries.size(), entries.size());
    std::size_t i = 0;
    for (long e : entries) {
        m(i, i) = GaussianRational(e);
        ++i;
    }
    return m;
}
}  // namespace

TEST_CASE("rank and corank") {
    REQUIRE(corank(Matrix::identity(5)) == 0);
    REQUIRE(corank(block_minor({6, 0}, 1)) == 1);
    REQUIRE(corank(block_minor({30, 0}, 4)) == 3);

    oracles::Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        Matrix m = rng.matrix(static_cast<std::size_t>(rng.integer(1, 6)),
                              static_cast<std::size_t>(rng.integer(1, 6)));
        REQUIRE(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("determinant") {
    REQUIRE(determinant(block_minor({6, 0}, 1)).is_zero());
    REQUIRE(determinant(Matrix::identity(4)) == GaussianRational(1));
    REQUIRE(determinant(antidiagonal_operator({6, 0})) == GaussianRational(-625));
    REQUIRE_THROWS_WITH(determinant(Matrix(2, 3)), Catch::Contains("not square"));

    oracles::Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
        Matrix m = rng.matrix(n, n);
        REQUIRE(determinant(m).is_zero() == (corank(m) > 0));
    }
}

TEST_CASE("determinant is multiplicative") {
    oracles::Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
        Matrix a = rng.matrix(n, n), b = rng.matrix(n, n);
        REQUIRE(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("characteristic polynomial of det(I - X M)") {
    CharPoly one = char_poly(block_minor({6, 0}, 1));
    REQUIRE(one.coeffs.size() == 2);
    REQUIRE(one.coeffs[0] == GaussianRational(1));
    REQUIRE(one.coeffs[1].is_zero());

    CharPoly d = char_poly(diag({5, 25}));
    REQUIRE(d.coeffs == std::vector<GaussianRational>{GaussianRational(1), GaussianRational(-30),
                                                      GaussianRational(125)});

    oracles::Rng rng(29);
    for (int t = 0; t < 25; ++t) {
        Matrix m = rng.matrix(3, 3);
        CharPoly cp = char_poly(m);
        REQUIRE(cp.coeffs[0] == GaussianRational(1));
        REQUIRE(cp.coeffs[1] == -m.trace());
        REQUIRE(cp.coeffs[3] == -determinant(m));
    }
    REQUIRE_THROWS_WITH(char_poly(Matrix(2, 3)), Catch::Contains("not square"));
}

TEST_CASE("char poly factors over block-diagonal matrices") {
    oracles::Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        std::size_t na = static_cast<std::size_t>(rng.integer(1, 4));
        std::size_t nb = static_cast<std::size_t>(rng.integer(1, 4));
        Matrix a = rng.matrix(na, na), b = rng.matrix(nb, nb);
        Matrix block(na + nb, na + nb);
        for (std::size_t r = 0; r < na; ++r)
            for (std::size_t c = 0; c < na; ++c) block(r, c) = a(r, c);
        for (std::size_t r = 0; r < nb; ++r)
            for (std::size_t c = 0; c < nb; ++c) block(na + r, na + c) = b(r, c);

        CharPoly ca = char_poly(a), cb = char_poly(b), cab = char_poly(block);
        std::vector<GaussianRational> prod(na + nb + 1);
        for (std::size_t s = 0; s < ca.coeffs.size(); ++s)
            for (std::size_t u = 0; u < cb.coeffs.size(); ++u)
                prod[s + u] += ca.coeffs[s] * cb.coeffs[u];
        REQUIRE(cab.coeffs == prod);
    }
}

TEST_CASE("prefix coefficients match the full polynomial") {
    oracles::Rng rng(43);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
        Matrix m = rng.matrix(n, n);
        long terms = rng.integer(1, static_cast<long>(n) + 2);
        CharPoly full = char_poly(m);
        std::vector<GaussianRational> prefix = char_poly_prefix(m, terms);
        for (long j = 0; j <= terms; ++j) {
            GaussianRational expected =
                j < static_cast<long>(full.coeffs.size()) ? full.coeffs[j] : GaussianRational();
            REQUIRE(prefix[j] == expected);
        }
    }
}

TEST_CASE("nullspace") {
    oracles::Rng rng(47);
    for (int t = 0; t < 30; ++t) {
        Matrix m = rng.matrix(static_cast<std::size_t>(rng.integer(1, 6)),
                              static_cast<std::size_t>(rng.integer(1, 6)));
        Matrix basis = nullspace(m);
        REQUIRE(static_cast<long>(basis.cols()) == static_cast<long>(m.cols()) - rank(m));
        if (basis.cols() > 0) {
            REQUIRE((m * basis).is_zero());
            REQUIRE(rank(basis) == static_cast<long>(basis.cols()));
        }
    }
}

TEST_CASE("newton polygon hulls") {
    NewtonPolygon single = newton_polygon({{0, Valuation(0)}, {1, Valuation(1)}});
    REQUIRE(single.vertices == std::vector<std::pair<long, long>>{{0, 0}, {1, 1}});
    REQUIRE(single.slopes == std::vector<PolygonSlope>{{1, 1, 1}});

    NewtonPolygon skip = newton_polygon({{0, Valuation(0)}, {1, Valuation(3)}, {2, Valuation(4)}});
    REQUIRE(skip.vertices == std::vector<std::pair<long, long>>{{0, 0}, {2, 4}});
    REQUIRE(skip.slopes == std::vector<PolygonSlope>{{2, 1, 2}});

    CharPoly cp = char_poly(diag({5, 25}));
    std::vector<std::pair<long, Valuation>> pts;
    for (std::size_t j = 0; j < cp.coeffs.size(); ++j)
        pts.emplace_back(static_cast<long>(j), val5(cp.coeffs[j]));
    NewtonPolygon p = newton_polygon(pts);
    REQUIRE(p.slopes == std::vector<PolygonSlope>{{1, 1, 1}, {2, 1, 1}});

    NewtonPolygon inf = newton_polygon(
        {{0, Valuation(0)}, {1, Valuation::infinity()}, {2, Valuation(1)}});
    REQUIRE(inf.vertices == std::vector<std::pair<long, long>>{{0, 0}, {2, 1}});

    REQUIRE_THROWS_WITH(newton_polygon({}), Catch::Contains("empty"));
    REQUIRE_THROWS_WITH(newton_polygon({{1, Valuation(2)}}), Catch::Contains("index 0"));
    REQUIRE_THROWS_WITH(newton_polygon({{0, Valuation::infinity()}}),
                        Catch::Contains("index 0"));
}

TEST_CASE("polygon det-valuation is stable under unimodular row mixing") {
    oracles::Rng rng(59);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.integer(2, 5));
        Matrix m = rng.matrix(n, n);
        // random integer elementary row operations keep |det| = 1
        Matrix u = Matrix::identity(n);
        for (int s = 0; s < 8; ++s) {
            std::size_t r1 = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
            std::size_t r2 = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
            if (r1 == r2) continue;
            GaussianRational f(make_rational(rng.integer(-3, 3)));
            for (std::size_t c = 0; c < n; ++c) u(r1, c) += f * u(r2, c);
        }
        REQUIRE(val5(determinant(u * m)) == val5(determinant(m)));
    }
}

TEST_CASE("stabilized characteristic valuations") {
    WeightComponent wc{6, 0};
    std::vector<Valuation> v = stabilized_char_valuations(wc, 2);
    REQUIRE(v[0] == Valuation(0));
    REQUIRE(v == stabilized_char_valuations(wc, 2, default_stabilization_cap(2) + 4));

    WeightComponent big{30, 0};
    std::vector<Valuation> w = stabilized_char_valuations(big, 3);
    REQUIRE(w.size() == 4);
    REQUIRE(w[0] == Valuation(0));
    REQUIRE(w == stabilized_char_valuations(big, 3, default_stabilization_cap(3) + 4));

    REQUIRE_THROWS_WITH(stabilized_char_valuations(wc, 2, 2),
                        Catch::Contains("stabilization cap exceeded"));
}
