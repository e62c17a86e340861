#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conespan/graphs.hpp"

// Exact quality measurement: all graphs are measured as undirected graphs
// weighted by Euclidean edge length.
namespace conespan {

// Undirected weighted adjacency view of a digraph (reverse duplicates merged).
struct UndirectedView {
    struct Arc {
        std::uint32_t to;
        double weight;
    };
    std::vector<std::vector<Arc>> adj;

    explicit UndirectedView(const GeometricDigraph& g);
    std::size_t size() const { return adj.size(); }
};

struct ShortestPathTree {
    std::vector<double> dist;          // infinity when unreachable
    std::vector<std::int64_t> parent;  // -1 for source/unreachable
};

ShortestPathTree dijkstra(const UndirectedView& view, std::uint32_t source);

// Vertex sequence source..target recovered from the parent links; empty when
// target is unreachable.
std::vector<std::uint32_t> tree_path(const ShortestPathTree& tree, std::uint32_t target);

enum class StretchMode { MaxOnly, FullTable };

struct StretchReport {
    bool connected = false;
    // Maximum over connected pairs of graph-distance / Euclidean distance;
    // covers all pairs exactly when `connected` is true.
    double max_stretch = 0.0;
    std::pair<std::uint32_t, std::uint32_t> argmax_pair{0, 0};
    std::optional<std::vector<std::vector<double>>> per_pair;  // FullTable only
};

// Requires at least 2 points; throws std::invalid_argument otherwise.
StretchReport stretch_report(const GeometricDigraph& g, StretchMode mode = StretchMode::MaxOnly);

struct DegreeStats {
    std::vector<std::uint32_t> in;
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> total;  // undirected degree: distinct neighbors
    std::uint32_t max_in = 0;
    std::uint32_t max_out = 0;
    std::uint32_t max_total = 0;
};

DegreeStats degree_stats(const GeometricDigraph& g);

// Best published worst-case stretch factor for a graph family at a given cone
// count. Some families are provably not spanners at small cone counts and a
// few cases have no published constant at all.
struct TheoreticalBound {
    enum class Kind { Value, NotSpanner, Open };
    Kind kind = Kind::Open;
    double value = 0.0;  // meaningful only when kind == Value

    bool is_value() const { return kind == Kind::Value; }
    std::string display() const;
};

TheoreticalBound theoretical_bound(GraphKind kind, int c);

}  // namespace conespan
