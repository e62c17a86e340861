#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "conespan/geometry.hpp"

// Cone-based proximity digraphs over a point set. All four constructions scan
// every ordered pair once and keep at most one outgoing edge per cone, so the
// results are deterministic given the tie-break rules spelled out per builder.
namespace conespan {

enum class GraphKind { Theta, Yao, YaoYao, HalfTheta6 };

const char* to_string(GraphKind kind);
std::optional<GraphKind> graph_kind_from(std::string_view name);

struct Edge {
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    auto operator<=>(const Edge&) const = default;
};

struct GeometricDigraph {
    GraphKind kind = GraphKind::Theta;
    int cone_count = 0;
    PointSet points;
    std::vector<Edge> edges;  // sorted by (src, dst)

    bool has_edge(std::uint32_t src, std::uint32_t dst) const;
    bool has_undirected(std::uint32_t a, std::uint32_t b) const;
};

// Per cone of each point, the outgoing edge to the point whose orthogonal
// projection onto the cone bisector is nearest; ties go to the smaller
// Euclidean distance, then the smaller id. Requires c >= 2.
GeometricDigraph build_theta(const PointSet& ps, int c);

// Per cone of each point, the outgoing edge to the Euclidean-nearest point;
// distance ties go to the smaller id. Requires c >= 2.
GeometricDigraph build_yao(const PointSet& ps, int c);

// Second filtering pass over build_yao(ps, c): every point keeps, per cone,
// only the shortest incoming Yao edge whose source lies in that cone
// (length ties go to the smaller source id). Requires c >= 2.
GeometricDigraph build_yao_yao(const PointSet& ps, int c);

// build_theta(ps, 6) restricted to edges whose source-side cone index is even.
GeometricDigraph build_half_theta6(const PointSet& ps);

// Dispatches to the builder for `kind`. HalfTheta6 accepts only c == 6
// (throws std::invalid_argument otherwise).
GeometricDigraph build_graph(GraphKind kind, const PointSet& ps, int c);

// Lookup table answering "which edge leaves `node` inside cone i", built once
// from a digraph whose builders keep at most one outgoing edge per cone.
class OutEdgeIndex {
public:
    explicit OutEdgeIndex(const GeometricDigraph& g);
    std::optional<std::uint32_t> target(std::uint32_t node, int cone) const;

private:
    int cone_count_;
    std::vector<std::int64_t> slots_;  // n * cone_count, -1 when absent
};

}  // namespace conespan
