#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

// Planar points and the cone machinery shared by every graph construction:
// each point partitions the plane around itself into c equal angular cones,
// indexed counter-clockwise from the positive x axis. A cone includes its
// clockwise bounding ray and excludes its counter-clockwise one.
namespace conespan {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

struct Point {
    std::uint32_t id = 0;
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 to_vec(const Point& p) { return {p.x, p.y}; }
inline double dist(const Point& a, const Point& b) { return std::hypot(b.x - a.x, b.y - a.y); }
inline double dist2(const Point& a, const Point& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    return dx * dx + dy * dy;
}

// Finite points with ids 0..n-1 in list order; duplicate coordinates rejected.
struct PointSet {
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    const Point& operator[](std::uint32_t id) const { return points[id]; }
    auto begin() const { return points.begin(); }
    auto end() const { return points.end(); }
};

// Validates finiteness and pairwise-distinct coordinates; throws std::invalid_argument.
PointSet make_point_set(const std::vector<std::pair<double, double>>& coords);

// c equal cones of angle alpha = 2*pi/c around every apex.
struct ConeSystem {
    int cone_count = 0;
    double alpha = 0.0;
};

// Throws std::invalid_argument for c < 2.
ConeSystem cone_system(int c);

// Index of the cone with apex `origin` containing `target`: floor(theta/alpha)
// with theta the polar angle of target-origin normalized to [0, 2*pi).
// Throws std::invalid_argument when the two points coincide.
int cone_index(const ConeSystem& cs, const Point& origin, const Point& target);

// Angular offset of target within its cone at origin, in [0, alpha).
double angle_in_cone(const ConeSystem& cs, const Point& origin, const Point& target);

// Unit vector along the bisector of cone i.
Vec2 bisector_direction(const ConeSystem& cs, int cone);

// Unit vector along the clockwise bounding ray of cone i (the included boundary).
Vec2 ray_direction(const ConeSystem& cs, int cone);

// Length of the orthogonal projection of p - apex onto the bisector of the
// cone at apex containing p. Always <= dist(apex, p).
double bisector_projection_distance(const ConeSystem& cs, const Point& apex, const Point& p);

// Equilateral triangle with vertex `apex`, two sides along the bounding rays
// of the 6-cone at apex containing `through`, and the third side passing
// through `through` perpendicular to the cone bisector. The triangle is open:
// containment tests use its interior only.
struct CanonicalTriangle {
    Point apex;
    Point through;
    Vec2 corner_cw;   // corner on the clockwise (included) bounding ray
    Vec2 corner_ccw;  // corner on the counter-clockwise bounding ray
};

// Requires a 6-cone system; throws std::invalid_argument otherwise or when the
// points coincide.
CanonicalTriangle canonical_triangle(const ConeSystem& six, const Point& a, const Point& b);

// True iff p lies strictly inside the triangle; boundary points are outside.
bool strictly_inside(const CanonicalTriangle& tri, const Point& p);

// Copy of ps with every point rotated by sixths*pi/3 about the origin
// (sixths may be negative; multiples of 6 reduce to the identity).
PointSet rotate_frame(const PointSet& ps, int sixths);

}  // namespace conespan
