#include <algorithm>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "configs.hpp"
#include "conespan/gen.hpp"
#include "conespan/graphs.hpp"
#include "oracles.hpp"

using namespace conespan;
namespace oracle = conespan::testing;

namespace {

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

PointSet random_uniform(std::size_t n, std::uint64_t seed) {
    GenConfig cfg;
    cfg.kind = GenKind::Uniform;
    cfg.n = n;
    cfg.seed = seed;
    return generate(cfg);
}

std::size_t in_degree(const GeometricDigraph& g, std::uint32_t v) {
    std::size_t d = 0;
    for (const Edge& e : g.edges)
        if (e.dst == v) ++d;
    return d;
}

}  // namespace

TEST_CASE("collinear points: nearest projection wins") {
    const PointSet ps = make_point_set({{0, 0}, {1, 0}, {2, 0}});
    const GeometricDigraph theta = build_theta(ps, 6);
    // From point 0 both others lie in cone 0; (1,0) has the smaller projection.
    CHECK(theta.has_edge(0, 1));
    CHECK_FALSE(theta.has_edge(0, 2));
    const GeometricDigraph yao = build_yao(ps, 6);
    CHECK(yao.has_edge(0, 1));
    CHECK_FALSE(yao.has_edge(0, 2));
}

TEST_CASE("distance-rule tie resolves to the smaller id") {
    // Both candidates sit in cone 0 of the origin at distance exactly 5.
    const PointSet ps = make_point_set({{0, 0}, {4, 3}, {3, 4}});
    const GeometricDigraph yao = build_yao(ps, 6);
    CHECK(yao.has_edge(0, 1));
    CHECK_FALSE(yao.has_edge(0, 2));
}

TEST_CASE("projection-rule tie falls back to distance then id") {
    // c = 2: the upper half-plane is one cone with bisector straight up, so
    // both projections round to exactly 2; (-1,2) is closer and wins despite
    // its larger id.
    const PointSet closer = make_point_set({{0, 0}, {2, 2}, {-1, 2}});
    CHECK(build_theta(closer, 2).has_edge(0, 2));
    CHECK_FALSE(build_theta(closer, 2).has_edge(0, 1));

    // Mirror-image candidates tie on projection and distance; id 1 wins.
    const PointSet mirrored = make_point_set({{0, 0}, {-1, 2}, {1, 2}});
    CHECK(build_theta(mirrored, 2).has_edge(0, 1));
    CHECK_FALSE(build_theta(mirrored, 2).has_edge(0, 2));
}

TEST_CASE("double filter keeps the shorter incoming edge and breaks ties by id") {
    // Both rim points reach the origin through its cone 0; equal lengths, so
    // the smaller source id survives.
    const PointSet ps = make_point_set({{0, 0}, {4, 3}, {3, 4}});
    const GeometricDigraph yy = build_yao_yao(ps, 6);
    CHECK(yy.has_edge(1, 0));
    CHECK_FALSE(yy.has_edge(2, 0));
}

TEST_CASE("half graph keeps even-cone edges only") {
    // b lies in cone 0 of a (kept); a lies in cone 3 of b (odd, dropped).
    const PointSet ps = make_point_set({{0, 0}, {1, 0.2}});
    const GeometricDigraph half = build_half_theta6(ps);
    REQUIRE(half.edges.size() == 1);
    CHECK(half.has_edge(0, 1));
    CHECK_FALSE(half.has_edge(1, 0));
}

TEST_CASE("circle family in-degrees collapse under the double filter") {
    GenConfig cfg;
    cfg.kind = GenKind::CircleWithCenter;
    cfg.n = 13;
    const PointSet ps = generate(cfg);
    const GeometricDigraph yao = build_yao(ps, 6);
    const GeometricDigraph yy = build_yao_yao(ps, 6);
    // Every rim point's cone containing the center selects the center.
    CHECK(in_degree(yao, 0) == 12);
    CHECK(in_degree(yy, 0) <= 6);
}

TEST_CASE("four-point disagreement between projection and distance rules") {
    const PointSet ps = conespan::testing::four_point_disagreement();
    const GeometricDigraph theta = build_theta(ps, 6);
    const GeometricDigraph yao = build_yao(ps, 6);
    const GeometricDigraph yy = build_yao_yao(ps, 6);

    // In cone 0 of point 0: |0->2| < |0->1| but point 1 projects shorter.
    CHECK(theta.has_edge(0, 1));
    CHECK_FALSE(theta.has_edge(0, 2));
    CHECK(yao.has_edge(0, 2));
    CHECK_FALSE(yao.has_edge(0, 1));

    const std::vector<Edge> expected_theta = {{0, 1}, {0, 3}, {1, 0}, {1, 2},
                                              {2, 0}, {2, 1}, {3, 0}};
    const std::vector<Edge> expected_yao = {{0, 2}, {0, 3}, {1, 0}, {1, 2},
                                            {2, 0}, {2, 1}, {3, 0}};
    CHECK(theta.edges == expected_theta);
    CHECK(yao.edges == expected_yao);

    // Points 1 and 2 both feed point 0 through one cone; the double filter
    // keeps the shorter edge 2->0 and drops 1->0 — exactly one edge lost.
    std::vector<Edge> expected_yy = expected_yao;
    expected_yy.erase(std::find(expected_yy.begin(), expected_yy.end(), Edge{1, 0}));
    CHECK(yy.edges == expected_yy);
}

TEST_CASE("constructors match the brute-force oracle on random instances") {
    for (const std::size_t n : {2, 5, 9, 12}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const PointSet ps = random_uniform(n, seed);
            for (const int c : {4, 6, 7, 36}) {
                REQUIRE(build_theta(ps, c).edges == oracle::oracle_theta_edges(ps, c));
                REQUIRE(build_yao(ps, c).edges == oracle::oracle_yao_edges(ps, c));
                REQUIRE(build_yao_yao(ps, c).edges == oracle::oracle_yao_yao_edges(ps, c));
            }
            REQUIRE(build_half_theta6(ps).edges == oracle::oracle_half_theta6_edges(ps));
        }
    }
}

TEST_CASE("graph kind names round-trip") {
    for (const GraphKind kind : {GraphKind::Theta, GraphKind::Yao, GraphKind::YaoYao,
                                 GraphKind::HalfTheta6}) {
        CHECK(graph_kind_from(to_string(kind)) == kind);
    }
    CHECK_FALSE(graph_kind_from("delaunay").has_value());
}

TEST_CASE("build_graph dispatches and validates the cone count") {
    const PointSet ps = random_uniform(8, 3);
    CHECK(build_graph(GraphKind::Theta, ps, 7).edges == build_theta(ps, 7).edges);
    CHECK(build_graph(GraphKind::Yao, ps, 7).edges == build_yao(ps, 7).edges);
    CHECK(build_graph(GraphKind::YaoYao, ps, 7).edges == build_yao_yao(ps, 7).edges);
    CHECK(build_graph(GraphKind::HalfTheta6, ps, 6).edges == build_half_theta6(ps).edges);
    CHECK_THROWS_AS(build_graph(GraphKind::HalfTheta6, ps, 12), std::invalid_argument);
}

TEST_CASE("edge membership queries") {
    const PointSet ps = make_point_set({{0, 0}, {1, 0.2}});
    const GeometricDigraph theta = build_theta(ps, 6);
    CHECK(theta.has_edge(0, 1));
    CHECK(theta.has_edge(1, 0));
    CHECK(theta.has_undirected(0, 1));
    const GeometricDigraph half = build_half_theta6(ps);
    CHECK_FALSE(half.has_edge(1, 0));
    CHECK(half.has_undirected(1, 0));
}

TEST_CASE("out-edge index mirrors the edge list") {
    const PointSet ps = random_uniform(20, 7);
    const GeometricDigraph theta = build_theta(ps, 6);
    const OutEdgeIndex index(theta);
    const ConeSystem six = cone_system(6);
    std::size_t listed = 0;
    for (std::uint32_t v = 0; v < ps.size(); ++v) {
        for (int cone = 0; cone < 6; ++cone) {
            const auto target = index.target(v, cone);
            if (!target) continue;
            ++listed;
            REQUIRE(theta.has_edge(v, *target));
            REQUIRE(cone_index(six, ps[v], ps[*target]) == cone);
        }
    }
    CHECK(listed == theta.edges.size());
}

TEST_CASE("sorted edge vectors compare as sets") {
    const std::vector<Edge> a = {{0, 1}, {1, 2}};
    CHECK(sorted_edges({{1, 2}, {0, 1}}) == a);
}
