#include "conespan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace conespan {

PointSet make_point_set(const std::vector<std::pair<double, double>>& coords) {
    PointSet ps;
    ps.points.reserve(coords.size());
    std::map<std::pair<double, double>, std::uint32_t> seen;
    for (std::uint32_t i = 0; i < coords.size(); ++i) {
        const auto [x, y] = coords[i];
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw std::invalid_argument("point set: non-finite coordinate at index " +
                                        std::to_string(i));
        }
        auto [it, fresh] = seen.emplace(coords[i], i);
        if (!fresh) {
            throw std::invalid_argument("point set: duplicate coordinates at indices " +
                                        std::to_string(it->second) + " and " + std::to_string(i));
        }
        ps.points.push_back({i, x, y});
    }
    return ps;
}

ConeSystem cone_system(int c) {
    if (c < 2) throw std::invalid_argument("cone system: need at least 2 cones");
    return {c, kTwoPi / c};
}

int cone_index(const ConeSystem& cs, const Point& origin, const Point& target) {
    const double dx = target.x - origin.x;
    const double dy = target.y - origin.y;
    if (dx == 0.0 && dy == 0.0) {
        throw std::invalid_argument("cone index: degenerate direction (coincident points)");
    }
    double theta = std::atan2(dy, dx);
    if (theta < 0.0) theta += kTwoPi;
    // theta/alpha can round up to cone_count when theta is just below 2*pi.
    const int idx = static_cast<int>(theta / cs.alpha);
    return idx >= cs.cone_count ? cs.cone_count - 1 : idx;
}

double angle_in_cone(const ConeSystem& cs, const Point& origin, const Point& target) {
    const int idx = cone_index(cs, origin, target);
    double theta = std::atan2(target.y - origin.y, target.x - origin.x);
    if (theta < 0.0) theta += kTwoPi;
    double off = theta - idx * cs.alpha;
    if (off < 0.0) off = 0.0;
    if (off >= cs.alpha) off = std::nextafter(cs.alpha, 0.0);
    return off;
}

Vec2 bisector_direction(const ConeSystem& cs, int cone) {
    const double th = (cone + 0.5) * cs.alpha;
    return {std::cos(th), std::sin(th)};
}

Vec2 ray_direction(const ConeSystem& cs, int cone) {
    const double th = cone * cs.alpha;
    return {std::cos(th), std::sin(th)};
}

double bisector_projection_distance(const ConeSystem& cs, const Point& apex, const Point& p) {
    const int idx = cone_index(cs, apex, p);
    return dot(to_vec(p) - to_vec(apex), bisector_direction(cs, idx));
}

CanonicalTriangle canonical_triangle(const ConeSystem& six, const Point& a, const Point& b) {
    if (six.cone_count != 6) {
        throw std::invalid_argument("canonical triangle: requires a 6-cone system");
    }
    const int idx = cone_index(six, a, b);
    const double h = bisector_projection_distance(six, a, b);
    // Corners sit on the bounding rays where the perpendicular through b at
    // bisector-distance h crosses them: side length h / cos(alpha/2).
    const double side = h / std::cos(six.alpha / 2.0);
    const Vec2 av = to_vec(a);
    CanonicalTriangle tri;
    tri.apex = a;
    tri.through = b;
    tri.corner_cw = av + side * ray_direction(six, idx);
    tri.corner_ccw = av + side * ray_direction(six, (idx + 1) % 6);
    return tri;
}

bool strictly_inside(const CanonicalTriangle& tri, const Point& p) {
    const Vec2 v0 = to_vec(tri.apex);
    const Vec2 v1 = tri.corner_cw;
    const Vec2 v2 = tri.corner_ccw;
    const Vec2 q = to_vec(p);
    // Vertices are in counter-clockwise order; strict interior needs all three
    // edge cross products positive by more than a rounding-scale margin, so a
    // point on the boundary never classifies as interior even when the corners
    // themselves carry trigonometric rounding noise.
    const double side2 = std::max({dot(v1 - v0, v1 - v0), dot(v2 - v1, v2 - v1),
                                   dot(v0 - v2, v0 - v2)});
    const double tol = 1e-12 * side2;
    const double c0 = cross(v1 - v0, q - v0);
    const double c1 = cross(v2 - v1, q - v1);
    const double c2 = cross(v0 - v2, q - v2);
    return c0 > tol && c1 > tol && c2 > tol;
}

PointSet rotate_frame(const PointSet& ps, int sixths) {
    int s = sixths % 6;
    if (s < 0) s += 6;
    const double th = s * (std::numbers::pi / 3.0);
    const double c = std::cos(th), n = std::sin(th);
    PointSet out;
    out.points.reserve(ps.size());
    for (const Point& p : ps) {
        out.points.push_back({p.id, c * p.x - n * p.y, n * p.x + c * p.y});
    }
    return out;
}

}  // namespace conespan
