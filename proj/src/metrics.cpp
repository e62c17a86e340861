#include "conespan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "conespan/io.hpp"

namespace conespan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

UndirectedView::UndirectedView(const GeometricDigraph& g) : adj(g.points.size()) {
    for (const Edge& e : g.edges) {
        const double w = dist(g.points[e.src], g.points[e.dst]);
        // Skip the reverse duplicate when both orientations are present.
        if (e.src < e.dst || !g.has_edge(e.dst, e.src)) {
            adj[e.src].push_back({e.dst, w});
            adj[e.dst].push_back({e.src, w});
        }
    }
}

ShortestPathTree dijkstra(const UndirectedView& view, std::uint32_t source) {
    const std::size_t n = view.size();
    ShortestPathTree tree{std::vector<double>(n, kInf), std::vector<std::int64_t>(n, -1)};
    using Item = std::pair<double, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    tree.dist[source] = 0.0;
    queue.push({0.0, source});
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > tree.dist[u]) continue;
        for (const auto& arc : view.adj[u]) {
            const double nd = d + arc.weight;
            if (nd < tree.dist[arc.to]) {
                tree.dist[arc.to] = nd;
                tree.parent[arc.to] = u;
                queue.push({nd, arc.to});
            }
        }
    }
    return tree;
}

std::vector<std::uint32_t> tree_path(const ShortestPathTree& tree, std::uint32_t target) {
    if (tree.dist[target] == kInf) return {};
    std::vector<std::uint32_t> path{target};
    std::uint32_t cur = target;
    while (tree.parent[cur] >= 0) {
        cur = static_cast<std::uint32_t>(tree.parent[cur]);
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

StretchReport stretch_report(const GeometricDigraph& g, StretchMode mode) {
    const std::size_t n = g.points.size();
    if (n < 2) throw std::invalid_argument("stretch report: need at least 2 points");
    const UndirectedView view(g);
    StretchReport report;
    report.connected = true;
    if (mode == StretchMode::FullTable) {
        report.per_pair.emplace(n, std::vector<double>(n, kInf));
    }
    for (std::uint32_t a = 0; a < n; ++a) {
        const ShortestPathTree tree = dijkstra(view, a);
        for (std::uint32_t b = 0; b < n; ++b) {
            if (a == b) continue;
            if (tree.dist[b] == kInf) {
                report.connected = false;
                continue;
            }
            const double stretch = tree.dist[b] / dist(g.points[a], g.points[b]);
            if (report.per_pair) (*report.per_pair)[a][b] = stretch;
            if (stretch > report.max_stretch) {
                report.max_stretch = stretch;
                report.argmax_pair = {a, b};
            }
        }
    }
    return report;
}

DegreeStats degree_stats(const GeometricDigraph& g) {
    const std::size_t n = g.points.size();
    DegreeStats stats;
    stats.in.assign(n, 0);
    stats.out.assign(n, 0);
    stats.total.assign(n, 0);
    for (const Edge& e : g.edges) {
        ++stats.out[e.src];
        ++stats.in[e.dst];
        if (e.src < e.dst || !g.has_edge(e.dst, e.src)) {
            ++stats.total[e.src];
            ++stats.total[e.dst];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        stats.max_in = std::max(stats.max_in, stats.in[i]);
        stats.max_out = std::max(stats.max_out, stats.out[i]);
        stats.max_total = std::max(stats.max_total, stats.total[i]);
    }
    return stats;
}

std::string TheoreticalBound::display() const {
    switch (kind) {
        case Kind::NotSpanner: return "NotSpanner";
        case Kind::Open: return "Open";
        case Kind::Value: return format_double(value);
    }
    return "?";
}

namespace {

TheoreticalBound value_bound(double v) { return {TheoreticalBound::Kind::Value, v}; }
TheoreticalBound not_spanner() { return {TheoreticalBound::Kind::NotSpanner, 0.0}; }
TheoreticalBound open_bound() { return {TheoreticalBound::Kind::Open, 0.0}; }

TheoreticalBound theta_bound(int c) {
    if (c <= 3) return not_spanner();
    if (c <= 5) return open_bound();
    if (c == 6) return value_bound(2.0);
    return value_bound(1.0 / (1.0 - 2.0 * std::sin(std::numbers::pi / c)));
}

TheoreticalBound yao_bound(int c) {
    if (c <= 3) return not_spanner();
    if (c == 4) return value_bound(8.0 * std::numbers::sqrt2 * (26.0 + 23.0 * std::numbers::sqrt2));
    if (c == 5) return open_bound();
    if (c == 6) return value_bound(17.64);
    const double t = kTwoPi / c;
    const double general = (1.0 + std::sqrt(2.0 - 2.0 * std::cos(t))) / (2.0 * std::cos(t) - 1.0);
    if (c <= 8) return value_bound(general);
    // For c > 8 two published constants apply; report the tighter one.
    return value_bound(std::min(general, 1.0 / (std::cos(t) - std::sin(t))));
}

TheoreticalBound yao_yao_bound(int c) {
    if (c == 2 || c == 3 || c == 4 || c == 6) return not_spanner();
    if (c % 6 == 0) {
        const int k = c / 6;
        if (k >= 8) return value_bound(4.75);
        if (k >= 6) return value_bound(11.67);
    }
    return open_bound();
}

}  // namespace

TheoreticalBound theoretical_bound(GraphKind kind, int c) {
    if (c < 2) throw std::invalid_argument("theoretical bound: need at least 2 cones");
    switch (kind) {
        case GraphKind::Theta: return theta_bound(c);
        case GraphKind::Yao: return yao_bound(c);
        case GraphKind::YaoYao: return yao_yao_bound(c);
        case GraphKind::HalfTheta6: return c == 6 ? value_bound(2.0) : open_bound();
    }
    return open_bound();
}

}  // namespace conespan
