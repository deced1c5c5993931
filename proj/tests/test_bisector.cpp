#include <cmath>
#include <random>
#include <stdexcept>
#include <variant>

#include <doctest.h>

#include "flowvor/bisector.hpp"
#include "flowvor/energy.hpp"
#include "oracles.hpp"

namespace {

using namespace flowvor;

constexpr double kPi = 3.14159265358979323846;

Point random_point(std::mt19937_64& rng, double half) {
    std::uniform_real_distribution<double> coord(-half, half);
    return {coord(rng), coord(rng)};
}

TEST_SUITE("bisector") {

TEST_CASE("local frame puts the pair on the abscissa") {
    const Point p1{0, 0};
    const Point p2{2, 2};
    const Point lp2 = to_local(p2, p1, p2);
    CHECK(lp2.x == doctest::Approx(std::sqrt(2.0)));
    CHECK(lp2.y == doctest::Approx(0.0).scale(1.0));
    const Point lp1 = to_local(p1, p1, p2);
    CHECK(lp1.x == doctest::Approx(-std::sqrt(2.0)));
    CHECK(lp1.y == doctest::Approx(0.0).scale(1.0));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Point a = random_point(rng, 3.0);
        const Point b = random_point(rng, 3.0);
        if (dist(a, b) < 1e-6) {
            continue;
        }
        const Point q = random_point(rng, 3.0);
        const Point back = from_local(to_local(q, a, b), a, b);
        CHECK(dist(back, q) <= 1e-12 * (1.0 + norm(q)));
    }
    CHECK_THROWS_AS(to_local({1, 1}, {2, 2}, {2, 2}), std::invalid_argument);
}

TEST_CASE("generic pair yields one hyperbola branch around the downstream point") {
    const Bisector bis = bisector({0, 0}, {2, 2});
    REQUIRE(std::holds_alternative<HyperbolaBranch>(bis));
    const auto& h = std::get<HyperbolaBranch>(bis);
    CHECK(h.center.x == doctest::Approx(1.0));
    CHECK(h.center.y == doctest::Approx(1.0));
    CHECK(h.alpha == doctest::Approx(kPi / 4.0));
    CHECK(h.a == doctest::Approx(1.0));
    CHECK(h.b_axis == doctest::Approx(1.0));
    CHECK(h.c == doctest::Approx(std::sqrt(2.0)));
    CHECK(h.c * h.c == doctest::Approx(h.a * h.a + h.b_axis * h.b_axis));
}

TEST_CASE("argument order does not change the described boundary") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 500; ++i) {
        const Point a = random_point(rng, 3.0);
        const Point b = random_point(rng, 3.0);
        if (a.x == b.x || a.y == b.y) {
            continue;
        }
        const auto ha = std::get<HyperbolaBranch>(bisector(a, b));
        const auto hb = std::get<HyperbolaBranch>(bisector(b, a));
        CHECK(ha.center == hb.center);
        CHECK(ha.alpha == hb.alpha);
        CHECK(ha.a == hb.a);
        CHECK(ha.b_axis == hb.b_axis);
        CHECK(ha.c == hb.c);
    }
}

TEST_CASE("equal-x pair yields the horizontal midline") {
    const Bisector bis = bisector({0, 0}, {0, 2});
    REQUIRE(std::holds_alternative<PerpendicularLine>(bis));
    CHECK(std::get<PerpendicularLine>(bis).y_level == doctest::Approx(1.0));
    CHECK(bisector_contains({0, 0}, {0, 2}, {5, 1}));
    CHECK(bisector_contains({0, 0}, {0, 2}, {-7, 1}));
    CHECK_FALSE(bisector_contains({0, 0}, {0, 2}, {0, 1.01}));
}

TEST_CASE("equal-y pair yields the half-line behind the downstream point") {
    const Bisector bis = bisector({0, 0}, {2, 0});
    REQUIRE(std::holds_alternative<DownstreamHalfLine>(bis));
    const auto& hl = std::get<DownstreamHalfLine>(bis);
    CHECK(hl.origin.x == doctest::Approx(2.0));
    CHECK(hl.origin.y == doctest::Approx(0.0).scale(1.0));
    CHECK(bisector_contains({0, 0}, {2, 0}, {2, 0}));
    CHECK(bisector_contains({0, 0}, {2, 0}, {5, 0}));
    CHECK_FALSE(bisector_contains({0, 0}, {2, 0}, {1.5, 0}));

    // Same boundary with the arguments swapped.
    const Bisector rev = bisector({2, 0}, {0, 0});
    CHECK(std::get<DownstreamHalfLine>(rev).origin == hl.origin);
}

TEST_CASE("closest boundary point splits the segment as the energies dictate") {
    const Point star = closest_boundary_point({0, 0}, {1, 1});
    CHECK(star.x == doctest::Approx(0.8535533905932737));
    CHECK(star.y == doctest::Approx(0.8535533905932737));
    CHECK(bisector_contains({0, 0}, {1, 1}, star));

    // Equal x: the midpoint. Equal y: the downstream generator.
    CHECK(closest_boundary_point({0, 0}, {0, 2}) == Point{0, 1});
    CHECK(closest_boundary_point({0, 0}, {2, 0}) == Point{2, 0});
    CHECK(closest_boundary_point({2, 0}, {0, 0}) == Point{2, 0});

    std::mt19937_64 rng(33);
    for (int i = 0; i < 500; ++i) {
        const Point a = random_point(rng, 3.0);
        const Point b = random_point(rng, 3.0);
        if (dist(a, b) < 1e-6) {
            continue;
        }
        const Point s = closest_boundary_point(a, b);
        CHECK(bisector_contains(a, b, s));
        // It lies on the segment between the generators.
        CHECK(std::fabs(cross(b - a, s - a)) <= 1e-9 * (1.0 + dist(a, b)));
        CHECK(dot(b - a, s - a) >= -1e-12);
        CHECK(dot(a - b, s - b) >= -1e-12);
    }
}

TEST_CASE("samples lie on the boundary, inside the box, in branch order") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 200; ++i) {
        const Point a = random_point(rng, 2.0);
        const Point b = random_point(rng, 2.0);
        if (dist(a, b) < 1e-3) {
            continue;
        }
        const Rect box{{-4.0, -4.0}, {4.0, 4.0}};
        const auto samples = sample_bisector(a, b, box, 256);
        for (const Point& s : samples) {
            CHECK(box.contains(s));
            CHECK(bisector_contains(a, b, s));
        }
        const Bisector bis = bisector(a, b);
        if (std::holds_alternative<HyperbolaBranch>(bis)) {
            const auto& h = std::get<HyperbolaBranch>(bis);
            // In the branch frame the ordinate grows monotonically along the
            // branch and the branch keeps to the downstream side.
            double prev = -1e300;
            for (const Point& s : samples) {
                const Point off = s - h.center;
                const double lx = std::cos(h.alpha) * off.x + std::sin(h.alpha) * off.y;
                const double ly = -std::sin(h.alpha) * off.x + std::cos(h.alpha) * off.y;
                CHECK(lx >= h.a - 1e-9 * (1.0 + h.c));
                CHECK(ly > prev);
                prev = ly;
            }
        }
    }
}

TEST_CASE("the vertex is among the samples when the box holds it") {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 200; ++i) {
        const Point a = random_point(rng, 1.5);
        const Point b = random_point(rng, 1.5);
        if (dist(a, b) < 1e-3) {
            continue;
        }
        const Rect box{{-4.0, -4.0}, {4.0, 4.0}};
        const Point star = closest_boundary_point(a, b);
        REQUIRE(box.contains(star));
        const auto samples = sample_bisector(a, b, box, 128);
        REQUIRE(!samples.empty());
        double best = 1e300;
        for (const Point& s : samples) {
            best = std::min(best, dist(s, star));
        }
        CHECK(best <= 1e-9 * (1.0 + dist(a, b)));
    }
}

TEST_CASE("a box missed by the boundary produces no samples") {
    // Boundary of (0,0),(2,2) passes near (1,1); a far-away box sees nothing.
    const Rect far{{50.0, -52.0}, {52.0, -50.0}};
    CHECK(sample_bisector({0, 0}, {2, 2}, far, 64).empty());
}

TEST_CASE("boundary membership matches the energy definition") {
    std::mt19937_64 rng(66);
    for (int i = 0; i < 300; ++i) {
        const Point a = random_point(rng, 2.0);
        const Point b = random_point(rng, 2.0);
        if (dist(a, b) < 1e-3) {
            continue;
        }
        const Point q = random_point(rng, 4.0);
        const FlowField field{1.0};
        const double gap = std::fabs(energy(a, q, field) - energy(b, q, field));
        if (gap <= 0.5 * bisector_tolerance(a, b, field)) {
            CHECK(bisector_contains(a, b, q));
        }
        if (gap > 2.0 * bisector_tolerance(a, b, field)) {
            CHECK_FALSE(bisector_contains(a, b, q));
        }
    }
}

TEST_CASE("degenerate pairs are rejected") {
    CHECK_THROWS_AS(bisector({1, 1}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(closest_boundary_point({1, 1}, {1, 1}), std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
