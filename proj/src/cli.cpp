#include "conespan/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conespan/gen.hpp"
#include "conespan/geometry.hpp"
#include "conespan/graphs.hpp"
#include "conespan/io.hpp"
#include "conespan/metrics.hpp"
#include "conespan/witness.hpp"

namespace conespan {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// One named comparison with its verdict; every report carries a list of them
// and the process exit code is 0 exactly when all of them passed.
struct CheckRow {
    std::string name;
    bool passed = false;
    std::optional<double> measured;
    std::optional<double> bound;
    std::string note;
};

struct Report {
    ordered_json body;
    std::vector<CheckRow> checks;
    Clock::time_point start = Clock::now();

    explicit Report(std::string_view command) {
        body["tool"] = kToolName;
        body["tool_version"] = kToolVersion;
        body["command"] = std::string(command);
    }

    void add(CheckRow row) { checks.push_back(std::move(row)); }

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckRow& c) { return c.passed; });
    }

    // Appends the check rows and elapsed time, then writes the report when a
    // path was given (an empty path keeps the run stdout-only).
    void finish(const std::string& path) {
        if (!checks.empty()) {
            ordered_json rows = ordered_json::array();
            for (const CheckRow& c : checks) {
                ordered_json row;
                row["name"] = c.name;
                row["passed"] = c.passed;
                if (c.measured) row["measured"] = *c.measured;
                if (c.bound) row["bound"] = *c.bound;
                if (!c.note.empty()) row["note"] = c.note;
                rows.push_back(std::move(row));
            }
            body["checks"] = std::move(rows);
        }
        const std::chrono::duration<double, std::milli> dt = Clock::now() - start;
        body["elapsed_ms"] = dt.count();
        if (!path.empty()) write_file(path, body.dump(2) + "\n");
    }
};

PointSet load_points(const std::string& path, std::string* digest) {
    const std::string text = read_file(path);
    if (digest != nullptr) *digest = content_digest(text);
    return parse_points(text);
}

ExportFormat format_for_path(const std::string& path) {
    if (path.ends_with(".csv")) return ExportFormat::EdgeCsv;
    if (path.ends_with(".dot")) return ExportFormat::Dot;
    if (path.ends_with(".svg")) return ExportFormat::Svg;
    return ExportFormat::Json;
}

std::optional<std::uint32_t> parse_u32(std::string_view s) {
    std::uint32_t v = 0;
    const char* last = s.data() + s.size();
    const auto r = std::from_chars(s.data(), last, v);
    if (r.ec != std::errc{} || r.ptr != last) return std::nullopt;
    return v;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> parse_edge_pair(std::string_view text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    const auto a = parse_u32(text.substr(0, comma));
    const auto b = parse_u32(text.substr(comma + 1));
    if (!a || !b) return std::nullopt;
    return std::make_pair(*a, *b);
}

ordered_json trace_to_json(const TraceNode& t) {
    ordered_json j;
    j["a"] = t.a;
    j["b"] = t.b;
    ordered_json tags = ordered_json::array();
    for (const WitnessTag tag : t.tags) tags.push_back(to_string(tag));
    j["tags"] = std::move(tags);
    if (!t.children.empty()) {
        ordered_json kids = ordered_json::array();
        for (const TraceNode& c : t.children) kids.push_back(trace_to_json(c));
        j["children"] = std::move(kids);
    }
    return j;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    int clusters = 5;
    double sigma = 0.05;
    double radius = 1.0;
    double jitter = 0.25;
    double phase = 1e-3;
    std::string out;
};

int cmd_gen(const GenOptions& o) {
    const auto kind = gen_kind_from(o.kind);
    if (!kind) {
        std::cerr << "error: unknown generator kind '" << o.kind << "'\n";
        return 2;
    }
    GenConfig cfg;
    cfg.kind = *kind;
    cfg.n = o.n;
    cfg.seed = o.seed;
    cfg.clusters = o.clusters;
    cfg.sigma = o.sigma;
    cfg.radius = o.radius;
    cfg.jitter = o.jitter;
    cfg.phase = o.phase;
    const PointSet ps = generate(cfg);
    write_file(o.out, format_points(ps));
    std::cout << "wrote " << ps.size() << " points to " << o.out << "\n";
    return 0;
}

// ---------------------------------------------------------------- build

struct BuildOptions {
    std::string graph;
    int cones = 6;
    std::string points;
    std::string out;
    std::string format;
    bool cone_overlays = false;
};

int cmd_build(const BuildOptions& o) {
    const auto kind = graph_kind_from(o.graph);
    if (!kind) {
        std::cerr << "error: unknown graph kind '" << o.graph << "'\n";
        return 2;
    }
    ExportFormat fmt = format_for_path(o.out);
    if (!o.format.empty()) {
        const auto named = export_format_from(o.format);
        if (!named) {
            std::cerr << "error: unknown export format '" << o.format << "'\n";
            return 2;
        }
        fmt = *named;
    }
    const PointSet ps = load_points(o.points, nullptr);
    const GeometricDigraph g = build_graph(*kind, ps, o.cones);
    SvgOptions svg;
    svg.cone_overlays = o.cone_overlays;
    write_file(o.out, export_graph(g, fmt, svg));
    std::cout << "wrote " << to_string(g.kind) << " graph with " << g.edges.size()
              << " edges to " << o.out << "\n";
    return 0;
}

// ---------------------------------------------------------------- stretch

struct StretchOptions {
    std::string graph;
    int cones = 6;
    std::string points;
    std::string report;
    bool full_table = false;
};

int cmd_stretch(const StretchOptions& o) {
    const auto kind = graph_kind_from(o.graph);
    if (!kind) {
        std::cerr << "error: unknown graph kind '" << o.graph << "'\n";
        return 2;
    }
    std::string digest;
    const PointSet ps = load_points(o.points, &digest);
    const GeometricDigraph g = build_graph(*kind, ps, o.cones);
    const StretchReport sr =
        stretch_report(g, o.full_table ? StretchMode::FullTable : StretchMode::MaxOnly);
    const TheoreticalBound tb = theoretical_bound(*kind, o.cones);

    Report rep("stretch");
    rep.body["graph"] = to_string(*kind);
    rep.body["cone_count"] = o.cones;
    rep.body["points"] = o.points;
    rep.body["input_digest"] = digest;
    rep.body["point_count"] = ps.size();
    rep.body["edge_count"] = g.edges.size();
    rep.body["connected"] = sr.connected;
    rep.body["max_stretch"] = sr.max_stretch;
    rep.body["argmax_pair"] = {sr.argmax_pair.first, sr.argmax_pair.second};
    rep.body["theoretical_bound"] = tb.display();
    if (sr.per_pair) rep.body["stretch_table"] = *sr.per_pair;

    CheckRow row;
    row.name = "stretch-within-bound";
    row.measured = sr.max_stretch;
    if (tb.is_value()) {
        row.bound = tb.value;
        row.passed = sr.connected && bound_satisfied(sr.max_stretch, tb.value);
        if (!sr.connected) row.note = "graph is disconnected";
    } else {
        // No finite bound to compare against: the measured value is recorded
        // and the check passes by definition.
        row.passed = true;
        row.note = tb.kind == TheoreticalBound::Kind::NotSpanner
                       ? "family has no finite worst-case bound"
                       : "no published bound for this cone count";
    }
    rep.add(row);
    rep.finish(o.report);

    std::cout << "max stretch " << format_double(sr.max_stretch) << " over "
              << ps.size() << " points (bound " << tb.display() << ") "
              << (rep.all_passed() ? "PASS" : "FAIL") << "\n";
    return rep.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------- witness

struct WitnessOptions {
    int k = 6;
    std::string points;
    std::string edge;
    bool all = false;
    std::string report;
};

int cmd_witness(const WitnessOptions& o) {
    if (o.all == !o.edge.empty()) {
        std::cerr << "error: pass exactly one of --edge or --all\n";
        return 2;
    }
    std::string digest;
    const PointSet ps = load_points(o.points, &digest);
    WitnessExtractor ex(ps, o.k);

    Report rep("witness");
    rep.body["k"] = o.k;
    rep.body["cone_count"] = 6 * o.k;
    rep.body["points"] = o.points;
    rep.body["input_digest"] = digest;
    rep.body["stretch_bound"] = kWitnessStretch;

    if (!o.edge.empty()) {
        const auto edge = parse_edge_pair(o.edge);
        if (!edge) {
            std::cerr << "error: --edge expects two comma-separated ids, e.g. 3,7\n";
            return 2;
        }
        CheckRow row;
        row.name = "witness-within-stretch";
        row.bound = kWitnessStretch;
        try {
            const WitnessCertificate cert = ex.extract(edge->first, edge->second);
            rep.body["edge"] = {cert.a, cert.b};
            rep.body["path"] = cert.yy_path.ids;
            rep.body["path_length"] = cert.yy_path.total_length;
            rep.body["max_edge_length"] = cert.yy_path.max_edge_length;
            rep.body["ratio"] = cert.ratio;
            rep.body["trace"] = trace_to_json(cert.trace);
            row.measured = cert.ratio;
            row.passed = cert.satisfied;
        } catch (const std::runtime_error& e) {
            row.passed = false;
            row.note = e.what();
        }
        rep.add(row);
    } else {
        ordered_json entries = ordered_json::array();
        std::size_t failures = 0;
        double worst = 0.0;
        std::pair<std::uint32_t, std::uint32_t> worst_edge{0, 0};
        for (const Edge& e : ex.theta6().edges) {
            ordered_json entry;
            entry["edge"] = {e.src, e.dst};
            try {
                const WitnessCertificate cert = ex.extract(e.src, e.dst);
                entry["ratio"] = cert.ratio;
                entry["satisfied"] = cert.satisfied;
                if (!cert.satisfied) ++failures;
                if (cert.ratio > worst) {
                    worst = cert.ratio;
                    worst_edge = {e.src, e.dst};
                }
            } catch (const std::runtime_error& err) {
                entry["error"] = err.what();
                ++failures;
            }
            entries.push_back(std::move(entry));
        }
        rep.body["edge_count"] = ex.theta6().edges.size();
        rep.body["worst_ratio"] = worst;
        rep.body["worst_edge"] = {worst_edge.first, worst_edge.second};
        rep.body["edges"] = std::move(entries);

        CheckRow row;
        row.name = "all-edges-within-stretch";
        row.passed = failures == 0;
        row.measured = worst;
        row.bound = kWitnessStretch;
        if (failures > 0) row.note = std::to_string(failures) + " edges failed";
        rep.add(row);
    }
    rep.finish(o.report);

    std::cout << "witness " << (rep.all_passed() ? "PASS" : "FAIL") << "\n";
    return rep.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string suite;
    int k = 6;
    int seeds = 5;
    std::size_t n = 50;
    std::string report;
};

PointSet uniform_instance(std::size_t n, std::uint64_t seed) {
    GenConfig cfg;
    cfg.kind = GenKind::Uniform;
    cfg.n = n;
    cfg.seed = seed;
    return generate(cfg);
}

void run_lemma_suite(const VerifyOptions& o, Report& rep) {
    struct Agg {
        std::size_t candidates = 0;
        std::size_t matches = 0;
        std::size_t violations = 0;
        double min_slack = std::numeric_limits<double>::infinity();
        double max_ratio = 0.0;
    };
    constexpr std::array<LemmaCheck, 4> kChecks = {LemmaCheck::Bb, LemmaCheck::Aa1,
                                                   LemmaCheck::Aa2, LemmaCheck::Aa3};
    std::array<Agg, kChecks.size()> agg;

    for (int seed = 0; seed < o.seeds; ++seed) {
        const PointSet ps = uniform_instance(o.n, static_cast<std::uint64_t>(seed));
        LemmaValidator validator(ps, o.k);
        for (std::size_t i = 0; i < kChecks.size(); ++i) {
            const ValidationReport vr = validator.validate(kChecks[i]);
            agg[i].candidates += vr.candidates;
            agg[i].matches += vr.matches;
            agg[i].violations += vr.violations;
            if (vr.matches > 0) {
                agg[i].min_slack = std::min(agg[i].min_slack, vr.min_slack);
                agg[i].max_ratio = std::max(agg[i].max_ratio, vr.max_ratio);
            }
        }
    }
    for (std::size_t i = 0; i < kChecks.size(); ++i) {
        CheckRow row;
        row.name = to_string(kChecks[i]);
        row.passed = agg[i].violations == 0;
        row.measured = agg[i].matches > 0 ? agg[i].max_ratio : 0.0;
        row.bound = 1.0;  // measured is the worst path-length / bound ratio
        row.note = std::to_string(agg[i].matches) + " matches over " +
                   std::to_string(agg[i].candidates) + " candidates";
        rep.add(row);
    }
}

void run_bound_suite(const VerifyOptions& o, Report& rep) {
    struct Probe {
        GraphKind kind;
        int cones;
    };
    const std::vector<Probe> probes = {
        {GraphKind::Theta, 6},   {GraphKind::YaoYao, 6 * o.k}, {GraphKind::Yao, 7},
        {GraphKind::Yao, 12},    {GraphKind::Yao, 36},
    };
    std::vector<double> worst(probes.size(), 0.0);
    std::vector<char> connected(probes.size(), 1);

    for (int seed = 0; seed < o.seeds; ++seed) {
        const PointSet ps = uniform_instance(o.n, static_cast<std::uint64_t>(seed));
        for (std::size_t i = 0; i < probes.size(); ++i) {
            const GeometricDigraph g = build_graph(probes[i].kind, ps, probes[i].cones);
            const StretchReport sr = stretch_report(g);
            worst[i] = std::max(worst[i], sr.max_stretch);
            if (!sr.connected) connected[i] = 0;
        }
    }
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const TheoreticalBound tb = theoretical_bound(probes[i].kind, probes[i].cones);
        CheckRow row;
        row.name = std::string(to_string(probes[i].kind)) + "-" +
                   std::to_string(probes[i].cones) + "-stretch";
        row.measured = worst[i];
        if (tb.is_value()) {
            row.bound = tb.value;
            row.passed = connected[i] != 0 && bound_satisfied(worst[i], tb.value);
            if (connected[i] == 0) row.note = "instance disconnected";
        } else {
            row.passed = true;
            row.note = "no finite bound (" + tb.display() + "); measured value recorded";
        }
        rep.add(row);
    }
}

void run_invariant_suite(const VerifyOptions& o, Report& rep) {
    const int c = 6 * o.k;
    const ConeSystem fine = cone_system(c);
    const ConeSystem six = cone_system(6);

    // Edges in a (source, cone) slot beyond the first one.
    const auto extra_out_per_cone = [](const GeometricDigraph& g, const ConeSystem& cs,
                                       const PointSet& ps) {
        std::vector<std::uint8_t> seen(ps.size() * static_cast<std::size_t>(cs.cone_count), 0);
        std::size_t extra = 0;
        for (const Edge& e : g.edges) {
            const int idx = cone_index(cs, ps[e.src], ps[e.dst]);
            std::uint8_t& slot =
                seen[e.src * static_cast<std::size_t>(cs.cone_count) + static_cast<std::size_t>(idx)];
            if (slot != 0) ++extra;
            if (slot < 255) ++slot;
        }
        return extra;
    };

    std::size_t yy_not_in_yao = 0;
    std::size_t out_cone_extra = 0;
    std::size_t yy_in_cone_extra = 0;
    std::size_t degree_cap_breaks = 0;
    std::size_t half_mismatch = 0;
    std::size_t occupied_triangles = 0;

    for (int seed = 0; seed < o.seeds; ++seed) {
        const PointSet ps = uniform_instance(o.n, static_cast<std::uint64_t>(seed));
        const GeometricDigraph theta = build_theta(ps, c);
        const GeometricDigraph yao = build_yao(ps, c);
        const GeometricDigraph yy = build_yao_yao(ps, c);
        const GeometricDigraph theta6 = build_theta(ps, 6);
        const GeometricDigraph half = build_half_theta6(ps);

        for (const Edge& e : yy.edges)
            if (!yao.has_edge(e.src, e.dst)) ++yy_not_in_yao;

        out_cone_extra += extra_out_per_cone(theta, fine, ps);
        out_cone_extra += extra_out_per_cone(yao, fine, ps);
        out_cone_extra += extra_out_per_cone(yy, fine, ps);
        out_cone_extra += extra_out_per_cone(theta6, six, ps);

        {
            std::vector<std::uint8_t> seen(ps.size() * static_cast<std::size_t>(c), 0);
            for (const Edge& e : yy.edges) {
                const int idx = cone_index(fine, ps[e.dst], ps[e.src]);
                std::uint8_t& slot = seen[e.dst * static_cast<std::size_t>(c) +
                                          static_cast<std::size_t>(idx)];
                if (slot != 0) ++yy_in_cone_extra;
                if (slot < 255) ++slot;
            }
        }

        const DegreeStats ds = degree_stats(yy);
        for (std::size_t v = 0; v < ps.size(); ++v) {
            if (ds.in[v] > static_cast<std::uint32_t>(c)) ++degree_cap_breaks;
            if (ds.out[v] > static_cast<std::uint32_t>(c)) ++degree_cap_breaks;
            if (ds.total[v] > static_cast<std::uint32_t>(2 * c)) ++degree_cap_breaks;
        }

        std::vector<Edge> expected_half;
        for (const Edge& e : theta6.edges)
            if (cone_index(six, ps[e.src], ps[e.dst]) % 2 == 0) expected_half.push_back(e);
        if (expected_half != half.edges) ++half_mismatch;

        for (const Edge& e : theta6.edges) {
            const CanonicalTriangle tri = canonical_triangle(six, ps[e.src], ps[e.dst]);
            for (const Point& p : ps)
                if (p.id != e.src && p.id != e.dst && strictly_inside(tri, p))
                    ++occupied_triangles;
        }
    }

    const auto add_count = [&rep](std::string name, std::size_t count) {
        CheckRow row;
        row.name = std::move(name);
        row.passed = count == 0;
        row.measured = static_cast<double>(count);
        row.bound = 0.0;
        rep.add(row);
    };
    add_count("doubly-filtered-subset-of-filtered", yy_not_in_yao);
    add_count("at-most-one-out-edge-per-cone", out_cone_extra);
    add_count("at-most-one-kept-in-edge-per-cone", yy_in_cone_extra);
    add_count("doubly-filtered-degree-caps", degree_cap_breaks);
    add_count("half-graph-is-even-cone-subset", half_mismatch);
    add_count("empty-canonical-triangles", occupied_triangles);
}

int cmd_verify(const VerifyOptions& o) {
    if (o.seeds < 1) {
        std::cerr << "error: --seeds must be at least 1\n";
        return 2;
    }
    Report rep("verify");
    rep.body["suite"] = o.suite;
    rep.body["k"] = o.k;
    rep.body["seeds"] = o.seeds;
    rep.body["n"] = o.n;

    if (o.suite == "lemmas") {
        run_lemma_suite(o, rep);
    } else if (o.suite == "bounds") {
        run_bound_suite(o, rep);
    } else if (o.suite == "invariants") {
        run_invariant_suite(o, rep);
    } else {
        std::cerr << "error: unknown suite '" << o.suite
                  << "' (expected lemmas, bounds, or invariants)\n";
        return 2;
    }
    rep.finish(o.report);

    for (const CheckRow& row : rep.checks) {
        std::cout << (row.passed ? "  ok  " : " FAIL ") << row.name;
        if (!row.note.empty()) std::cout << "  (" << row.note << ")";
        std::cout << "\n";
    }
    std::cout << "verify " << o.suite << " " << (rep.all_passed() ? "PASS" : "FAIL") << "\n";
    return rep.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------- bounds

struct BoundsOptions {
    std::string graph;
    int cones = 6;
};

int cmd_bounds(const BoundsOptions& o) {
    const auto kind = graph_kind_from(o.graph);
    if (!kind) {
        std::cerr << "error: unknown graph kind '" << o.graph << "'\n";
        return 2;
    }
    std::cout << theoretical_bound(*kind, o.cones).display() << "\n";
    return 0;
}

// ---------------------------------------------------------------- render

struct RenderOptions {
    std::string graph;
    std::string out;
    bool cone_overlays = false;
};

int cmd_render(const RenderOptions& o) {
    const GeometricDigraph g = parse_graph_json(read_file(o.graph));
    SvgOptions svg;
    svg.cone_overlays = o.cone_overlays;
    write_file(o.out, export_graph(g, ExportFormat::Svg, svg));
    std::cout << "wrote " << o.out << "\n";
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
    CLI::App app{"cone-based sparse spanner toolkit", kToolName};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    GenOptions gen_opt;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a deterministic point set");
    gen_cmd->add_option("--kind", gen_opt.kind,
                        "uniform | grid | gaussian-clusters | circle-with-center")
        ->required();
    gen_cmd->add_option("--n", gen_opt.n, "number of points")->required();
    gen_cmd->add_option("--seed", gen_opt.seed, "rng seed (default 0)");
    gen_cmd->add_option("--clusters", gen_opt.clusters, "gaussian-clusters: cluster count");
    gen_cmd->add_option("--sigma", gen_opt.sigma, "gaussian-clusters: standard deviation");
    gen_cmd->add_option("--radius", gen_opt.radius, "circle-with-center: rim radius");
    gen_cmd->add_option("--jitter", gen_opt.jitter, "grid: jitter fraction of one cell");
    gen_cmd->add_option("--phase", gen_opt.phase, "circle-with-center: first rim angle");
    gen_cmd->add_option("--out", gen_opt.out, "output points file")->required();

    BuildOptions build_opt;
    CLI::App* build_cmd = app.add_subcommand("build", "construct a cone graph and export it");
    build_cmd->add_option("--graph", build_opt.graph, "theta | yao | yaoyao | halftheta6")
        ->required();
    build_cmd->add_option("--cones", build_opt.cones, "number of cones")->required();
    build_cmd->add_option("--points", build_opt.points, "input points file")->required();
    build_cmd->add_option("--out", build_opt.out, "output file")->required();
    build_cmd->add_option("--format", build_opt.format,
                          "edge-csv | dot | svg | json (default: from --out extension)");
    build_cmd->add_flag("--cone-overlays", build_opt.cone_overlays,
                        "svg only: draw cone boundary rays");

    StretchOptions stretch_opt;
    CLI::App* stretch_cmd =
        app.add_subcommand("stretch", "measure the exact stretch factor of a cone graph");
    stretch_cmd->add_option("--graph", stretch_opt.graph, "theta | yao | yaoyao | halftheta6")
        ->required();
    stretch_cmd->add_option("--cones", stretch_opt.cones, "number of cones")->required();
    stretch_cmd->add_option("--points", stretch_opt.points, "input points file")->required();
    stretch_cmd->add_option("--report", stretch_opt.report, "write a json report here");
    stretch_cmd->add_flag("--full-table", stretch_opt.full_table,
                          "include the full per-pair stretch table in the report");

    WitnessOptions witness_opt;
    CLI::App* witness_cmd = app.add_subcommand(
        "witness", "extract certified short paths in the doubly-filtered graph");
    witness_cmd->add_option("--k", witness_opt.k, "cone refinement factor (>= 6)");
    witness_cmd->add_option("--points", witness_opt.points, "input points file")->required();
    witness_cmd->add_option("--edge", witness_opt.edge, "single edge as src,dst");
    witness_cmd->add_flag("--all", witness_opt.all, "process every 6-cone edge");
    witness_cmd->add_option("--report", witness_opt.report, "write a json report here");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run a randomized validation suite");
    verify_cmd->add_option("--suite", verify_opt.suite, "lemmas | bounds | invariants")
        ->required();
    verify_cmd->add_option("--k", verify_opt.k, "cone refinement factor");
    verify_cmd->add_option("--seeds", verify_opt.seeds, "number of seeds (default 5)");
    verify_cmd->add_option("--n", verify_opt.n, "points per instance (default 50)");
    verify_cmd->add_option("--report", verify_opt.report, "write a json report here");

    BoundsOptions bounds_opt;
    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "print the best published stretch bound");
    bounds_cmd->add_option("--graph", bounds_opt.graph, "theta | yao | yaoyao | halftheta6")
        ->required();
    bounds_cmd->add_option("--cones", bounds_opt.cones, "number of cones")->required();

    RenderOptions render_opt;
    CLI::App* render_cmd = app.add_subcommand("render", "draw an exported json graph as svg");
    render_cmd->add_option("--graph", render_opt.graph, "input graph json file")->required();
    render_cmd->add_option("--out", render_opt.out, "output svg file")->required();
    render_cmd->add_flag("--cone-overlays", render_opt.cone_overlays,
                         "draw cone boundary rays");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen_opt);
        if (build_cmd->parsed()) return cmd_build(build_opt);
        if (stretch_cmd->parsed()) return cmd_stretch(stretch_opt);
        if (witness_cmd->parsed()) return cmd_witness(witness_opt);
        if (verify_cmd->parsed()) return cmd_verify(verify_opt);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds_opt);
        if (render_cmd->parsed()) return cmd_render(render_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace conespan
