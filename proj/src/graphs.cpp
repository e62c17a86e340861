#include "conespan/graphs.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace conespan {

const char* to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Theta: return "theta";
        case GraphKind::Yao: return "yao";
        case GraphKind::YaoYao: return "yaoyao";
        case GraphKind::HalfTheta6: return "halftheta6";
    }
    return "?";
}

std::optional<GraphKind> graph_kind_from(std::string_view name) {
    if (name == "theta") return GraphKind::Theta;
    if (name == "yao") return GraphKind::Yao;
    if (name == "yaoyao") return GraphKind::YaoYao;
    if (name == "halftheta6") return GraphKind::HalfTheta6;
    return std::nullopt;
}

bool GeometricDigraph::has_edge(std::uint32_t src, std::uint32_t dst) const {
    return std::binary_search(edges.begin(), edges.end(), Edge{src, dst});
}

bool GeometricDigraph::has_undirected(std::uint32_t a, std::uint32_t b) const {
    return has_edge(a, b) || has_edge(b, a);
}

namespace {

// One winning candidate per cone; `primary` is the builder-specific score
// (bisector projection for theta, squared distance for yao).
struct Candidate {
    double primary = std::numeric_limits<double>::infinity();
    double dist2 = std::numeric_limits<double>::infinity();
    std::uint32_t id = 0;
    bool present = false;

    bool beats(const Candidate& other) const {
        if (!other.present) return true;
        if (primary != other.primary) return primary < other.primary;
        if (dist2 != other.dist2) return dist2 < other.dist2;
        return id < other.id;
    }
};

GeometricDigraph scan_cones(const PointSet& ps, int c, GraphKind kind, bool by_projection) {
    const ConeSystem cs = cone_system(c);
    GeometricDigraph g{kind, c, ps, {}};
    std::vector<Candidate> best(static_cast<std::size_t>(c));
    for (const Point& a : ps) {
        std::fill(best.begin(), best.end(), Candidate{});
        for (const Point& b : ps) {
            if (a.id == b.id) continue;
            const int cone = cone_index(cs, a, b);
            const double d2 = dist2(a, b);
            Candidate cand{by_projection ? bisector_projection_distance(cs, a, b) : d2,
                           d2, b.id, true};
            if (cand.beats(best[cone])) best[cone] = cand;
        }
        for (const Candidate& cand : best) {
            if (cand.present) g.edges.push_back({a.id, cand.id});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace

GeometricDigraph build_theta(const PointSet& ps, int c) {
    return scan_cones(ps, c, GraphKind::Theta, /*by_projection=*/true);
}

GeometricDigraph build_yao(const PointSet& ps, int c) {
    return scan_cones(ps, c, GraphKind::Yao, /*by_projection=*/false);
}

GeometricDigraph build_yao_yao(const PointSet& ps, int c) {
    const GeometricDigraph yao = build_yao(ps, c);
    const ConeSystem cs = cone_system(c);
    // kept[dst * c + cone] = best incoming edge whose source lies in `cone` of dst.
    struct Kept {
        double dist2 = std::numeric_limits<double>::infinity();
        std::uint32_t src = 0;
        bool present = false;
    };
    std::vector<Kept> kept(ps.size() * static_cast<std::size_t>(c));
    for (const Edge& e : yao.edges) {
        const Point& src = ps[e.src];
        const Point& dst = ps[e.dst];
        const int cone = cone_index(cs, dst, src);
        Kept& slot = kept[e.dst * static_cast<std::size_t>(c) + cone];
        const double d2 = dist2(src, dst);
        if (!slot.present || d2 < slot.dist2 || (d2 == slot.dist2 && e.src < slot.src)) {
            slot = {d2, e.src, true};
        }
    }
    GeometricDigraph g{GraphKind::YaoYao, c, ps, {}};
    for (std::uint32_t dst = 0; dst < ps.size(); ++dst) {
        for (int cone = 0; cone < c; ++cone) {
            const Kept& slot = kept[dst * static_cast<std::size_t>(c) + cone];
            if (slot.present) g.edges.push_back({slot.src, dst});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

GeometricDigraph build_half_theta6(const PointSet& ps) {
    const GeometricDigraph theta = build_theta(ps, 6);
    const ConeSystem cs = cone_system(6);
    GeometricDigraph g{GraphKind::HalfTheta6, 6, ps, {}};
    for (const Edge& e : theta.edges) {
        if (cone_index(cs, ps[e.src], ps[e.dst]) % 2 == 0) g.edges.push_back(e);
    }
    return g;  // theta edges are already sorted
}

GeometricDigraph build_graph(GraphKind kind, const PointSet& ps, int c) {
    switch (kind) {
        case GraphKind::Theta: return build_theta(ps, c);
        case GraphKind::Yao: return build_yao(ps, c);
        case GraphKind::YaoYao: return build_yao_yao(ps, c);
        case GraphKind::HalfTheta6:
            if (c != 6) {
                throw std::invalid_argument("halftheta6 is defined for exactly 6 cones");
            }
            return build_half_theta6(ps);
    }
    throw std::invalid_argument("unknown graph kind");
}

OutEdgeIndex::OutEdgeIndex(const GeometricDigraph& g)
    : cone_count_(g.cone_count),
      slots_(g.points.size() * static_cast<std::size_t>(g.cone_count), -1) {
    const ConeSystem cs = cone_system(g.cone_count);
    for (const Edge& e : g.edges) {
        const int cone = cone_index(cs, g.points[e.src], g.points[e.dst]);
        auto& slot = slots_[e.src * static_cast<std::size_t>(cone_count_) + cone];
        if (slot != -1) throw std::logic_error("out-edge index: two edges share a cone");
        slot = e.dst;
    }
}

std::optional<std::uint32_t> OutEdgeIndex::target(std::uint32_t node, int cone) const {
    const std::int64_t v = slots_[node * static_cast<std::size_t>(cone_count_) + cone];
    if (v < 0) return std::nullopt;
    return static_cast<std::uint32_t>(v);
}

}  // namespace conespan
