#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "conespan/cli.hpp"
#include "conespan/gen.hpp"
#include "conespan/graphs.hpp"
#include "conespan/io.hpp"
#include "conespan/witness.hpp"

using namespace conespan;
namespace fs = std::filesystem;

namespace {

// Scratch directory under the test runner's working directory.
fs::path scratch() {
    const fs::path dir = fs::path("io_cli_scratch");
    fs::create_directories(dir);
    return dir;
}

// Captures std::cout and std::cerr for the duration of one CLI call.
struct CaptureStreams {
    std::ostringstream out, err;
    std::streambuf* old_out;
    std::streambuf* old_err;

    CaptureStreams()
        : old_out(std::cout.rdbuf(out.rdbuf())), old_err(std::cerr.rdbuf(err.rdbuf())) {}
    ~CaptureStreams() {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
    }
};

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr,
            std::string* err = nullptr) {
    CaptureStreams cap;
    const int code = run_command(args);
    if (out != nullptr) *out = cap.out.str();
    if (err != nullptr) *err = cap.err.str();
    return code;
}

PointSet small_instance() {
    GenConfig cfg;
    cfg.n = 9;
    cfg.seed = 12;
    return generate(cfg);
}

}  // namespace

TEST_CASE("format_double emits shortest round-trip decimals") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(11.67) == "11.67");
    CHECK(format_double(-0.25) == "-0.25");
    const double third = 1.0 / 3.0;
    CHECK(std::stod(format_double(third)) == third);
}

TEST_CASE("parse_points accepts both line forms") {
    const PointSet a = parse_points("0.5 0.25\n-1 2\n");
    REQUIRE(a.size() == 2);
    CHECK(a[0].x == 0.5);
    CHECK(a[1].y == 2.0);

    const PointSet b = parse_points("0,0.5,0.25\n1,-1,2\n");
    REQUIRE(b.size() == 2);
    CHECK(b[1].x == -1.0);

    const PointSet c = parse_points("x y\n# comment\n\n0.5 0.25\n-1 2\n");
    REQUIRE(c.size() == 2);
}

TEST_CASE("parse_points rejects malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_points("0.5 0.25\nbroken\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_points("0,0,0\n2,1,1\n"),
                         doctest::Contains("0-based position"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_points("0 0\n1 1\n0 0\n"), doctest::Contains("line 1"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_points("0 0\n1 1 1\n"), std::invalid_argument);
}

TEST_CASE("points survive a format/parse round trip bit-exactly") {
    const PointSet ps = small_instance();
    const PointSet back = parse_points(format_points(ps));
    REQUIRE(back.size() == ps.size());
    for (std::uint32_t i = 0; i < ps.size(); ++i) {
        REQUIRE(back[i].x == ps[i].x);
        REQUIRE(back[i].y == ps[i].y);
    }
}

TEST_CASE("graph json round trip preserves everything") {
    const PointSet ps = small_instance();
    const GeometricDigraph g = build_yao(ps, 7);
    const GeometricDigraph back = parse_graph_json(export_graph(g, ExportFormat::Json));
    CHECK(back.kind == g.kind);
    CHECK(back.cone_count == g.cone_count);
    CHECK(back.edges == g.edges);
    REQUIRE(back.points.size() == g.points.size());
    for (std::uint32_t i = 0; i < g.points.size(); ++i) {
        REQUIRE(back.points[i].x == g.points[i].x);
        REQUIRE(back.points[i].y == g.points[i].y);
    }
}

TEST_CASE("export formats contain their structural markers") {
    const PointSet ps = make_point_set({{0, 0}, {1, 0.2}});
    const GeometricDigraph g = build_theta(ps, 6);

    const std::string csv = export_graph(g, ExportFormat::EdgeCsv);
    CHECK(csv.starts_with("0,1,"));
    CHECK(csv.find("\n1,0,") != std::string::npos);
    // One row per edge, no header: a two-point graph exports exactly two lines.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);

    const std::string dot = export_graph(g, ExportFormat::Dot);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0 -> 1") != std::string::npos);

    const std::string svg = export_graph(g, ExportFormat::Svg);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);

    SvgOptions overlays;
    overlays.cone_overlays = true;
    const std::string svg2 = export_graph(g, ExportFormat::Svg, overlays);
    CHECK(svg2.size() > svg.size());  // overlay rays add elements
}

TEST_CASE("malformed graph json is rejected") {
    CHECK_THROWS_AS(parse_graph_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph_json("{}"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph_json(
                        R"({"kind":"mystery","cone_count":6,"points":[[0,0],[1,1]],"edges":[]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_graph_json(
                        R"({"kind":"yao","cone_count":6,"points":[[0,0],[1,1]],"edges":[[0,5]]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_graph_json(
                        R"({"kind":"yao","cone_count":6,"points":[[0,0],[1,1]],"edges":[[0,1],[0,1]]})"),
                    std::runtime_error);
}

TEST_CASE("content digest reference values") {
    CHECK(content_digest("") == "cbf29ce484222325");
    CHECK(content_digest("abc") == "e71fa2190541574b");
    CHECK(content_digest("0 0\n1 1\n") == "738e2552029d8fcd");
}

TEST_CASE("cli pipeline: gen, build, render, stretch") {
    const fs::path dir = scratch();
    const std::string points = (dir / "pts.txt").string();
    const std::string graph = (dir / "graph.json").string();
    const std::string svg = (dir / "graph.svg").string();
    const std::string report = (dir / "stretch.json").string();

    CHECK(run_cli({"gen", "--kind", "uniform", "--n", "12", "--seed", "4", "--out",
                   points}) == 0);
    CHECK(run_cli({"build", "--graph", "theta", "--cones", "6", "--points", points,
                   "--out", graph}) == 0);
    CHECK(run_cli({"render", "--graph", graph, "--out", svg}) == 0);
    CHECK(read_file(svg).find("<svg") != std::string::npos);

    std::string out;
    CHECK(run_cli({"stretch", "--graph", "theta", "--cones", "6", "--points", points,
                   "--report", report},
                  &out) == 0);
    CHECK(out.find("PASS") != std::string::npos);

    const auto body = nlohmann::json::parse(read_file(report));
    CHECK(body["tool_version"] == kToolVersion);
    CHECK(body["command"] == "stretch");
    CHECK(body["connected"] == true);
    CHECK(body["max_stretch"].get<double>() <= 2.0 + 1e-9);
    CHECK(body["input_digest"] == content_digest(read_file(points)));
    CHECK(body["checks"][0]["passed"] == true);
    CHECK(body.contains("elapsed_ms"));
}

TEST_CASE("cli build deduces the format from the extension") {
    const fs::path dir = scratch();
    const std::string points = (dir / "fmt_pts.txt").string();
    REQUIRE(run_cli({"gen", "--kind", "uniform", "--n", "6", "--seed", "1", "--out",
                     points}) == 0);

    const std::string csv = (dir / "g.csv").string();
    REQUIRE(run_cli({"build", "--graph", "yao", "--cones", "6", "--points", points,
                     "--out", csv}) == 0);
    const std::string rows = read_file(csv);
    REQUIRE(!rows.empty());
    CHECK(std::isdigit(static_cast<unsigned char>(rows.front())) != 0);
    CHECK(std::count(rows.begin(), rows.end(), ',') ==
          2 * std::count(rows.begin(), rows.end(), '\n'));

    const std::string dot = (dir / "g.dot").string();
    REQUIRE(run_cli({"build", "--graph", "yao", "--cones", "6", "--points", points,
                     "--out", dot, "--format", "dot"}) == 0);
    CHECK(read_file(dot).find("digraph") != std::string::npos);
}

TEST_CASE("cli witness single edge and full sweep") {
    const fs::path dir = scratch();
    const std::string points = (dir / "wit_pts.txt").string();
    REQUIRE(run_cli({"gen", "--kind", "uniform", "--n", "15", "--seed", "2", "--out",
                     points}) == 0);

    // Pick a real 6-cone edge of the same instance for the single-edge mode.
    const PointSet ps = parse_points(read_file(points));
    const GeometricDigraph theta6 = build_theta(ps, 6);
    REQUIRE_FALSE(theta6.edges.empty());
    const Edge probe = theta6.edges.front();
    const std::string edge_arg =
        std::to_string(probe.src) + "," + std::to_string(probe.dst);

    const std::string single = (dir / "wit_single.json").string();
    CHECK(run_cli({"witness", "--k", "6", "--points", points, "--edge", edge_arg,
                   "--report", single}) == 0);
    const auto single_body = nlohmann::json::parse(read_file(single));
    CHECK(single_body["trace"]["a"] == probe.src);
    CHECK(single_body["ratio"].get<double>() <= kWitnessStretch + 1e-9);

    const std::string sweep = (dir / "wit_all.json").string();
    CHECK(run_cli({"witness", "--k", "6", "--points", points, "--all", "--report",
                   sweep}) == 0);
    const auto sweep_body = nlohmann::json::parse(read_file(sweep));
    CHECK(sweep_body["edge_count"].get<std::size_t>() == theta6.edges.size());
    CHECK(sweep_body["checks"][0]["passed"] == true);

    // Exactly one of --edge / --all must be given.
    CHECK(run_cli({"witness", "--points", points}) == 2);
    CHECK(run_cli({"witness", "--points", points, "--edge", edge_arg, "--all"}) == 2);
    // And the edge must exist in the 6-cone graph.
    CHECK(run_cli({"witness", "--points", points, "--edge", "0,0"}) == 2);
}

TEST_CASE("cli verify suites pass on small inputs") {
    const fs::path dir = scratch();
    for (const std::string suite : {"lemmas", "bounds", "invariants"}) {
        const std::string report = (dir / ("verify_" + suite + ".json")).string();
        std::string out;
        CHECK(run_cli({"verify", "--suite", suite, "--k", "6", "--seeds", "2", "--n",
                       "30", "--report", report},
                      &out) == 0);
        CHECK(out.find("PASS") != std::string::npos);
        const auto body = nlohmann::json::parse(read_file(report));
        CHECK(body["suite"] == suite);
        for (const auto& row : body["checks"]) CHECK(row["passed"] == true);
    }
    CHECK(run_cli({"verify", "--suite", "nonsense"}) == 2);
}

TEST_CASE("cli bounds prints the table value") {
    std::string out;
    CHECK(run_cli({"bounds", "--graph", "yaoyao", "--cones", "36"}, &out) == 0);
    CHECK(out == "11.67\n");
    CHECK(run_cli({"bounds", "--graph", "theta", "--cones", "6"}, &out) == 0);
    CHECK(out == "2\n");
    CHECK(run_cli({"bounds", "--graph", "yaoyao", "--cones", "30"}, &out) == 0);
    CHECK(out == "Open\n");
}

TEST_CASE("cli usage and io failures exit with code 2") {
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"frobnicate"}) == 2);
    CHECK(run_cli({"gen", "--kind", "uniform", "--n", "5"}) == 2);  // --out missing
    CHECK(run_cli({"gen", "--kind", "martian", "--n", "5", "--out", "x.txt"}) == 2);
    CHECK(run_cli({"stretch", "--graph", "theta", "--cones", "6", "--points",
                   "no_such_file.txt"}) == 2);
    CHECK(run_cli({"build", "--graph", "halftheta6", "--cones", "12", "--points",
                   "no_such_file.txt", "--out", "x.json"}) == 2);
    std::string out;
    CHECK(run_cli({"--help"}, &out) == 0);
    CHECK(out.find("gen") != std::string::npos);
}
