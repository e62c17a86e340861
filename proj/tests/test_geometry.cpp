#include <cmath>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "configs.hpp"
#include "conespan/geometry.hpp"
#include "oracles.hpp"

using namespace conespan;
using conespan::testing::oracle_cone_index;
using conespan::testing::rad;

namespace {

Point pt(std::uint32_t id, double x, double y) { return Point{id, x, y}; }

Point on_circle(double degrees, double r = 1.0) {
    return Point{1, r * std::cos(rad(degrees)), r * std::sin(rad(degrees))};
}

}  // namespace

TEST_CASE("cone system rejects degenerate counts") {
    CHECK_THROWS_AS(cone_system(1), std::invalid_argument);
    CHECK_THROWS_AS(cone_system(0), std::invalid_argument);
    CHECK_THROWS_AS(cone_system(-6), std::invalid_argument);
    CHECK(cone_system(2).cone_count == 2);
    CHECK(cone_system(6).alpha == doctest::Approx(std::numbers::pi / 3));
}

TEST_CASE("cone index basics at c = 6") {
    const ConeSystem six = cone_system(6);
    const Point o = pt(0, 0, 0);
    CHECK(cone_index(six, o, on_circle(10)) == 0);
    CHECK(cone_index(six, o, on_circle(59.9)) == 0);
    CHECK(cone_index(six, o, on_circle(60)) == 1);  // ccw boundary belongs to the next cone
    CHECK(cone_index(six, o, pt(1, 1, 0)) == 0);    // cw boundary is included
    CHECK(cone_index(six, o, on_circle(359.9)) == 5);
    CHECK(cone_index(six, o, pt(1, -1, 0)) == 3);
    CHECK_THROWS_AS(cone_index(six, o, pt(1, 0, 0)), std::invalid_argument);
}

TEST_CASE("cone index matches the angle-interval oracle on a fine sweep") {
    for (const int c : {2, 3, 6, 7, 36}) {
        const ConeSystem cs = cone_system(c);
        const double alpha = kTwoPi / c;
        const Point o = pt(0, 0, 0);
        for (int i = 0; i < 10000; ++i) {
            // Cell centers keep the sweep clear of cone boundaries.
            const double theta = (i + 0.5) * kTwoPi / 10000.0;
            const Point p = pt(1, std::cos(theta), std::sin(theta));
            int expected = 0;
            while ((expected + 1) * alpha <= theta) ++expected;
            REQUIRE(cone_index(cs, o, p) == expected);
            REQUIRE(oracle_cone_index(c, o, p) == expected);
        }
    }
}

TEST_CASE("cone index just past a boundary at c = 36") {
    const ConeSystem cs = cone_system(36);
    CHECK(cs.alpha == doctest::Approx(rad(10)));
    CHECK(cone_index(cs, pt(0, 0, 0), on_circle(10.01)) == 1);
    CHECK(cone_index(cs, pt(0, 0, 0), on_circle(9.99)) == 0);
}

TEST_CASE("angle within cone stays in [0, alpha)") {
    const ConeSystem six = cone_system(6);
    const Point o = pt(0, 0, 0);
    for (int i = 0; i < 720; ++i) {
        const double theta = (i + 0.5) * kTwoPi / 720.0;
        const Point p = pt(1, std::cos(theta), std::sin(theta));
        const double off = angle_in_cone(six, o, p);
        REQUIRE(off >= 0.0);
        REQUIRE(off < six.alpha);
        const int idx = cone_index(six, o, p);
        REQUIRE(off == doctest::Approx(theta - idx * six.alpha).epsilon(1e-12));
    }
}

TEST_CASE("ray and bisector directions") {
    const ConeSystem six = cone_system(6);
    const Vec2 r0 = ray_direction(six, 0);
    CHECK(r0.x == doctest::Approx(1.0));
    CHECK(r0.y == doctest::Approx(0.0));
    const Vec2 r2 = ray_direction(six, 2);
    CHECK(r2.x == doctest::Approx(std::cos(rad(120))));
    CHECK(r2.y == doctest::Approx(std::sin(rad(120))));
    const Vec2 b0 = bisector_direction(six, 0);
    CHECK(b0.x == doctest::Approx(std::cos(rad(30))));
    CHECK(b0.y == doctest::Approx(std::sin(rad(30))));
}

TEST_CASE("bisector projection against a rotation oracle") {
    const ConeSystem six = cone_system(6);
    const Point o = pt(0, 0, 0);

    // Spot value: target on the included boundary of cone 0.
    CHECK(bisector_projection_distance(six, o, pt(1, 1, 0)) ==
          doctest::Approx(std::cos(std::numbers::pi / 6)));

    for (const int c : {2, 4, 6, 9, 36}) {
        const ConeSystem cs = cone_system(c);
        for (int i = 0; i < 360; ++i) {
            const double theta = (i + 0.5) * kTwoPi / 360.0;
            const double r = 0.25 + 0.01 * i;
            const Point p = pt(1, r * std::cos(theta), r * std::sin(theta));
            const int idx = cone_index(cs, o, p);
            // Rotate p so the bisector lies on the x axis; the projection is
            // then just the rotated x coordinate.
            const double mid = (idx + 0.5) * cs.alpha;
            const double expected = std::cos(mid) * p.x + std::sin(mid) * p.y;
            REQUIRE(bisector_projection_distance(cs, o, p) ==
                    doctest::Approx(expected).epsilon(1e-12));
            REQUIRE(bisector_projection_distance(cs, o, p) <= dist(o, p) + 1e-12);
        }
    }
}

TEST_CASE("canonical triangle for a target on the included ray") {
    const ConeSystem six = cone_system(6);
    const Point a = pt(0, 0, 0);
    const Point b = pt(1, 1, 0);
    const CanonicalTriangle tri = canonical_triangle(six, a, b);
    // proj = cos(30 deg), corner distance = proj / cos(30 deg) = 1 exactly: the
    // clockwise corner coincides with b itself.
    CHECK(tri.corner_cw.x == doctest::Approx(1.0));
    CHECK(tri.corner_cw.y == doctest::Approx(0.0));
    CHECK(tri.corner_ccw.x == doctest::Approx(0.5));
    CHECK(tri.corner_ccw.y == doctest::Approx(std::sqrt(3.0) / 2));

    CHECK(strictly_inside(tri, pt(2, 0.5, 0.2)));
    CHECK_FALSE(strictly_inside(tri, pt(2, 0.5, 0.0)));  // on the cw side
    CHECK_FALSE(strictly_inside(tri, pt(2, 0.0, 0.0)));  // apex
    CHECK_FALSE(strictly_inside(tri, pt(2, 1.5, 0.2)));  // outside
    CHECK_FALSE(strictly_inside(tri, b));                // through-vertex side
}

TEST_CASE("canonical triangle corners sit on the bounding rays through b") {
    const ConeSystem six = cone_system(6);
    const Point a = pt(0, 2.0, -1.0);
    for (int i = 0; i < 48; ++i) {
        const double theta = (i + 0.5) * kTwoPi / 48.0;
        const double r = 0.5 + 0.03 * i;
        const Point b = pt(1, a.x + r * std::cos(theta), a.y + r * std::sin(theta));
        const CanonicalTriangle tri = canonical_triangle(six, a, b);
        const int idx = cone_index(six, a, b);
        const Vec2 av = to_vec(a);
        const Vec2 cw = tri.corner_cw - av;
        const Vec2 ccw = tri.corner_ccw - av;
        // Corners lie on the two bounding rays, equidistant from the apex.
        REQUIRE(cross(cw, ray_direction(six, idx)) == doctest::Approx(0.0).epsilon(1e-9));
        REQUIRE(cross(ccw, ray_direction(six, (idx + 1) % 6)) ==
                doctest::Approx(0.0).epsilon(1e-9));
        REQUIRE(norm(cw) == doctest::Approx(norm(ccw)).epsilon(1e-12));
        // The far side passes through b: b is on segment corner_cw..corner_ccw.
        REQUIRE(cross(tri.corner_ccw - tri.corner_cw, to_vec(b) - tri.corner_cw) ==
                doctest::Approx(0.0).epsilon(1e-9));
        // And b never lies strictly inside its own triangle.
        REQUIRE_FALSE(strictly_inside(tri, b));
    }
}

TEST_CASE("canonical triangle requires six cones") {
    const ConeSystem seven = cone_system(7);
    CHECK_THROWS_AS(canonical_triangle(seven, pt(0, 0, 0), pt(1, 1, 0)),
                    std::invalid_argument);
}

TEST_CASE("rotating the frame shifts every cone index") {
    const PointSet ps = conespan::testing::four_point_disagreement();
    const ConeSystem six = cone_system(6);
    for (const int sixths : {1, 2, 5, -1, 7}) {
        const PointSet rotated = rotate_frame(ps, sixths);
        REQUIRE(rotated.size() == ps.size());
        for (const Point& p : ps) {
            for (const Point& q : ps) {
                if (p.id == q.id) continue;
                const int before = cone_index(six, p, q);
                const int after = cone_index(six, rotated[p.id], rotated[q.id]);
                REQUIRE(after == ((before + sixths) % 6 + 6) % 6);
            }
        }
    }
}

TEST_CASE("point set validation") {
    CHECK_THROWS_AS(make_point_set({{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_point_set({{0, 0}, {std::nan(""), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_point_set({{0, 0}, {std::numeric_limits<double>::infinity(), 1}}),
                    std::invalid_argument);
    const PointSet ps = make_point_set({{0, 0}, {1, 2}, {3, -1}});
    CHECK(ps.size() == 3);
    CHECK(ps[1].id == 1);
    CHECK(ps[2].x == 3);
}
