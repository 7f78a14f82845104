#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "altlink/hypgeom.hpp"
#include "oracles.hpp"

using namespace altlink;

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex random_point(std::mt19937_64& rng) {
    return Complex(4.0 * uniform(rng) - 2.0, 4.0 * uniform(rng) - 2.0);
}

MobiusMap random_mobius(std::mt19937_64& rng) {
    for (;;) {
        MobiusMap m;
        m.a = random_point(rng);
        m.b = random_point(rng);
        m.c = random_point(rng);
        m.d = random_point(rng);
        if (std::abs(m.determinant()) > 0.1)
            return m;
    }
}

} // namespace

TEST_CASE("extended complex basics") {
    ExtendedComplex z(Complex(3.0, 0.0), Complex(2.0, 0.0));
    CHECK(z.value() == Complex(1.5, 0.0));
    CHECK(!z.is_infinity());
    CHECK(ExtendedComplex::infinity().is_infinity());
    CHECK_THROWS_AS(ExtendedComplex::infinity().value(), InternalError);
    CHECK_THROWS_AS(ExtendedComplex(Complex(0.0, 0.0), Complex(0.0, 0.0)), InternalError);
    CHECK(projectively_equal(z, ExtendedComplex(Complex(1.5, 0.0), Complex(1.0, 0.0))));
    CHECK(!projectively_equal(z, ExtendedComplex(Complex(1.5, 0.0), Complex(0.0, 0.0))));
}

TEST_CASE("cross ratio of the 4th roots of unity is exactly 2") {
    ExtendedComplex one(Complex(1.0, 0.0));
    ExtendedComplex i(Complex(0.0, 1.0));
    ExtendedComplex minus_one(Complex(-1.0, 0.0));
    ExtendedComplex minus_i(Complex(0.0, -1.0));
    ExtendedComplex r = cross_ratio(one, i, minus_one, minus_i);
    CHECK(projectively_equal(r, ExtendedComplex(Complex(2.0, 0.0))));
    CHECK(projectively_equal(r, regular_ngon_target(4)));
}

TEST_CASE("cross ratio handles the point at infinity") {
    // (inf, 1, i, 0): the factors containing inf cancel formally,
    // leaving (1-0)/(1-i) = (1+i)/2.
    ExtendedComplex r = cross_ratio(ExtendedComplex::infinity(),
                                    ExtendedComplex(Complex(1.0, 0.0)),
                                    ExtendedComplex(Complex(0.0, 1.0)),
                                    ExtendedComplex(Complex(0.0, 0.0)));
    CHECK(projectively_equal(r, ExtendedComplex(Complex(0.5, 0.5))));
}

TEST_CASE("cross ratio is a mobius invariant") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 100; ++trial) {
        ExtendedComplex p(random_point(rng)), q(random_point(rng)),
                        r(random_point(rng)), s(random_point(rng));
        if (std::abs(p.value() - q.value()) < 0.05 || std::abs(p.value() - r.value()) < 0.05 ||
            std::abs(p.value() - s.value()) < 0.05 || std::abs(q.value() - r.value()) < 0.05 ||
            std::abs(q.value() - s.value()) < 0.05 || std::abs(r.value() - s.value()) < 0.05)
            continue;
        MobiusMap m = random_mobius(rng);
        ExtendedComplex before = cross_ratio(p, q, r, s);
        ExtendedComplex after = cross_ratio(m.apply(p), m.apply(q), m.apply(r), m.apply(s));
        CHECK(projectively_equal(before, after, 1e-10));
    }
}

TEST_CASE("mobius_from_triple sends the triple to 0, 1, infinity") {
    std::mt19937_64 rng(7);
    ExtendedComplex zero(Complex(0.0, 0.0));
    ExtendedComplex one(Complex(1.0, 0.0));
    for (int trial = 0; trial < 50; ++trial) {
        ExtendedComplex a(random_point(rng)), b(random_point(rng)), c(random_point(rng));
        if (std::abs(a.value() - b.value()) < 0.05 || std::abs(b.value() - c.value()) < 0.05 ||
            std::abs(a.value() - c.value()) < 0.05)
            continue;
        MobiusMap m = mobius_from_triple(a, b, c);
        CHECK(projectively_equal(m.apply(a), zero, 1e-12));
        CHECK(projectively_equal(m.apply(b), one, 1e-12));
        CHECK(projectively_equal(m.apply(c), ExtendedComplex::infinity(), 1e-12));
        // inverse really round-trips
        MobiusMap inv = m.inverse();
        ExtendedComplex back = inv.apply(m.apply(ExtendedComplex(random_point(rng))));
        CHECK(!back.is_infinity());
    }
    // the triple may include infinity itself
    MobiusMap m = mobius_from_triple(ExtendedComplex::infinity(), one, zero);
    CHECK(projectively_equal(m.apply(ExtendedComplex::infinity()), zero, 1e-14));
    CHECK(projectively_equal(m.apply(one), one, 1e-14));
    CHECK(projectively_equal(m.apply(zero), ExtendedComplex::infinity(), 1e-14));
}

TEST_CASE("regular polygon targets") {
    CHECK(regular_ngon_target(3).is_infinity());
    CHECK(projectively_equal(regular_ngon_target(4), ExtendedComplex(Complex(2.0, 0.0))));
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(regular_ngon_target(5).value().real() - phi) < 1e-12);
    CHECK(std::abs(regular_ngon_target(6).value().real() - 1.5) < 1e-15);
    CHECK_THROWS_AS(regular_ngon_target(2), InputError);
}

TEST_CASE("roots of unity form regular ideal polygons") {
    std::mt19937_64 rng(99);
    for (int n = 3; n <= 12; ++n) {
        std::vector<ExtendedComplex> vs;
        for (int k = 0; k < n; ++k)
            vs.emplace_back(std::polar(1.0, 2.0 * kPi * k / n));
        IdealPolygon poly(vs);
        CHECK(regularity_residual(poly) < 1e-12);
        CHECK(is_regular_polygon(poly, 1e-9));

        // regularity is a mobius-invariant notion
        MobiusMap m = random_mobius(rng);
        std::vector<ExtendedComplex> moved;
        for (const auto& v : vs)
            moved.push_back(m.apply(v));
        CHECK(is_regular_polygon(IdealPolygon(moved), 1e-9));
    }
}

TEST_CASE("perturbed polygons are flagged, triangles never") {
    for (int n = 4; n <= 6; ++n) {
        std::vector<ExtendedComplex> vs;
        for (int k = 0; k < n; ++k)
            vs.emplace_back(std::polar(1.0, 2.0 * kPi * k / n));
        vs[1] = ExtendedComplex(std::polar(1.0, 2.0 * kPi / n + 1e-3));
        CHECK(regularity_residual(IdealPolygon(vs)) > 1e-6);
    }
    // every ideal triangle is congruent to every other, so any distinct
    // triple passes
    std::vector<ExtendedComplex> tri{ExtendedComplex(Complex(0.3, 0.0)),
                                     ExtendedComplex(Complex(-2.0, 1.0)),
                                     ExtendedComplex::infinity()};
    CHECK(regularity_residual(IdealPolygon(tri)) == 0.0);
}

TEST_CASE("stereographic boundary map") {
    CHECK(projectively_equal(klein_to_boundary({0.0, 0.0, -1.0}),
                             ExtendedComplex(Complex(0.0, 0.0))));
    CHECK(klein_to_boundary({0.0, 0.0, 1.0}).is_infinity());
    CHECK(projectively_equal(klein_to_boundary({1.0, 0.0, 0.0}),
                             ExtendedComplex(Complex(1.0, 0.0))));
    CHECK(projectively_equal(klein_to_boundary({0.0, 1.0, 0.0}),
                             ExtendedComplex(Complex(0.0, 1.0))));
    // both formula branches agree where they overlap in exact arithmetic
    CHECK(projectively_equal(klein_to_boundary({0.8, 0.0, 0.6}),
                             ExtendedComplex(Complex(2.0, 0.0)), 1e-14));
    CHECK_THROWS_AS(klein_to_boundary({0.5, 0.0, 0.0}), InternalError);
}

TEST_CASE("lobachevsky agrees with quadrature") {
    // 100 angles across (0, pi), exercising both the series tail near pi/2
    // and the log-dominated region near 0
    for (int k = 1; k <= 100; ++k) {
        double theta = 3.0 * k / 100.0;
        double series = lobachevsky(theta);
        double quad = oracles::lobachevsky_quadrature(theta);
        CHECK(std::abs(series - quad) < 1e-10);
    }
    for (double theta : {1e-6, 1e-4, 1e-2}) {
        CHECK(std::abs(lobachevsky(theta) - oracles::lobachevsky_quadrature(theta)) < 1e-12);
    }
}

TEST_CASE("lobachevsky symmetries and special values") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(kPi)) < 1e-15);
    CHECK(std::abs(lobachevsky(kPi / 2.0)) < 1e-15);
    for (double theta : {0.3, 0.7, 1.2, 2.9}) {
        CHECK(lobachevsky(-theta) == doctest::Approx(-lobachevsky(theta)).epsilon(1e-14));
        CHECK(lobachevsky(theta + kPi) == doctest::Approx(lobachevsky(theta)).epsilon(1e-13));
        // distribution relation at m = 2
        double lhs = lobachevsky(2.0 * theta);
        double rhs = 2.0 * (lobachevsky(theta) + lobachevsky(theta + kPi / 2.0));
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
    // maximum value, attained at pi/6
    CHECK(std::abs(lobachevsky(kPi / 6.0) - 0.5074708032) < 1e-9);
    CHECK(std::abs(lobachevsky(kPi / 6.0) - 1.5 * lobachevsky(kPi / 3.0)) < 1e-14);
    // Catalan's constant over 2
    CHECK(std::abs(lobachevsky(kPi / 4.0) - 0.9159655941772190 / 2.0) < 1e-13);
}

TEST_CASE("ideal tetrahedron volumes") {
    // the regular ideal tetrahedron, shape exp(i pi/3)
    TetShape reg{std::polar(1.0, kPi / 3.0)};
    double v = ideal_tet_volume(reg);
    CHECK(std::abs(v - 3.0 * lobachevsky(kPi / 3.0)) < 1e-13);
    CHECK(std::abs(v - 1.0149416064) < 1e-9);

    // shape-parameter 3-fold symmetry: z, 1/(1-z), (z-1)/z give one volume
    Complex z(0.4, 0.9);
    double v1 = ideal_tet_volume({z});
    double v2 = ideal_tet_volume({Complex(1.0, 0.0) / (Complex(1.0, 0.0) - z)});
    double v3 = ideal_tet_volume({(z - Complex(1.0, 0.0)) / z});
    CHECK(std::abs(v1 - v2) < 1e-13);
    CHECK(std::abs(v1 - v3) < 1e-13);

    // mirror image: conjugate shape negates the volume
    CHECK(std::abs(ideal_tet_volume({std::conj(z)}) + v1) < 1e-15);

    // flat tetrahedra have no volume
    CHECK(ideal_tet_volume({Complex(2.5, 0.0)}) == 0.0);
    CHECK_THROWS_AS(ideal_tet_volume({Complex(0.0, 0.0)}), InternalError);

    // half an ideal octahedron: coning the square (1, i, -1, -i) plus apex 0
    // from infinity gives two tetrahedra of shape (1+i)/2 each
    ExtendedComplex inf = ExtendedComplex::infinity();
    ExtendedComplex r = cross_ratio(inf, ExtendedComplex(Complex(1.0, 0.0)),
                                    ExtendedComplex(Complex(0.0, 1.0)),
                                    ExtendedComplex(Complex(0.0, 0.0)));
    CHECK(projectively_equal(r, ExtendedComplex(Complex(0.5, 0.5))));
    double oct = 4.0 * ideal_tet_volume({r.value()});
    CHECK(std::abs(oct - 8.0 * lobachevsky(kPi / 4.0)) < 1e-12);
    CHECK(std::abs(oct - 3.6638623767) < 1e-9);
}
