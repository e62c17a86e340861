#include "conespan/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

#include <json.hpp>

namespace conespan {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_double_token(std::string_view tok, double& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_u32_token(std::string_view tok, std::uint32_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) parts.push_back(s.substr(i, j - i));
        i = j;
    }
    return parts;
}

// Attempts both accepted line shapes; on success appends to coords.
bool parse_point_line(std::string_view line, std::size_t row_index, std::size_t line_no,
                      std::vector<std::pair<double, double>>& coords, std::string& error) {
    double x = 0.0, y = 0.0;
    if (line.find(',') != std::string_view::npos) {
        const auto fields = split(line, ',');
        if (fields.size() != 3) {
            error = "expected id,x,y";
            return false;
        }
        std::uint32_t id = 0;
        if (!parse_u32_token(trim(fields[0]), id)) {
            error = "id is not a non-negative integer";
            return false;
        }
        if (!parse_double_token(trim(fields[1]), x) || !parse_double_token(trim(fields[2]), y)) {
            error = "coordinate is not a number";
            return false;
        }
        if (id != row_index) {
            error = "id " + std::to_string(id) + " does not match its 0-based position " +
                    std::to_string(row_index);
            return false;
        }
    } else {
        const auto fields = split_ws(line);
        if (fields.size() != 2) {
            error = "expected two whitespace-separated coordinates";
            return false;
        }
        if (!parse_double_token(fields[0], x) || !parse_double_token(fields[1], y)) {
            error = "coordinate is not a number";
            return false;
        }
    }
    if (!std::isfinite(x) || !std::isfinite(y)) {
        error = "coordinate is not finite";
        return false;
    }
    (void)line_no;
    coords.emplace_back(x, y);
    return true;
}

std::string fmt_px(double v) {
    // Fixed two decimals keeps the drawing byte-stable across platforms.
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

std::string dot_export(const GeometricDigraph& g) {
    std::string out;
    out += "digraph conespan {\n";
    out += "  graph [kind=\"";
    out += to_string(g.kind);
    out += "\", cone_count=" + std::to_string(g.cone_count) + "];\n";
    out += "  node [shape=circle, width=0.12, fixedsize=true, fontsize=8];\n";
    for (const Point& p : g.points) {
        out += "  " + std::to_string(p.id) + " [pos=\"" + format_double(p.x) + "," +
               format_double(p.y) + "!\"];\n";
    }
    for (const Edge& e : g.edges) {
        out += "  " + std::to_string(e.src) + " -> " + std::to_string(e.dst) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string svg_export(const GeometricDigraph& g, const SvgOptions& opt) {
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    bool first = true;
    for (const Point& p : g.points) {
        if (first) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            first = false;
        } else {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const double margin = 40.0;
    const double inner = 720.0;
    const double scale = inner / std::max(span_x, span_y);
    const double width = span_x * scale + 2.0 * margin;
    const double height = span_y * scale + 2.0 * margin;
    const auto px = [&](double x) { return margin + (x - min_x) * scale; };
    const auto py = [&](double y) { return margin + (max_y - y) * scale; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_px(width) + "\" height=\"" +
           fmt_px(height) + "\" viewBox=\"0 0 " + fmt_px(width) + " " + fmt_px(height) + "\">\n";
    out +=
        "  <defs>\n"
        "    <marker id=\"arrow\" viewBox=\"0 0 8 6\" refX=\"8\" refY=\"3\" markerWidth=\"8\" "
        "markerHeight=\"6\" orient=\"auto\">\n"
        "      <path d=\"M0,0 L8,3 L0,6 z\" fill=\"#333333\"/>\n"
        "    </marker>\n"
        "  </defs>\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"" + fmt_px(width) + "\" height=\"" + fmt_px(height) +
           "\" fill=\"#ffffff\"/>\n";

    if (opt.cone_overlays && g.cone_count >= 2) {
        const ConeSystem cs = cone_system(g.cone_count);
        const double ray_len = 0.08 * std::max(span_x, span_y) * scale;
        out += "  <g stroke=\"#c8c8c8\" stroke-width=\"0.6\" stroke-dasharray=\"3,3\">\n";
        for (const Point& p : g.points) {
            for (int j = 0; j < g.cone_count; ++j) {
                const Vec2 d = ray_direction(cs, j);
                out += "    <line x1=\"" + fmt_px(px(p.x)) + "\" y1=\"" + fmt_px(py(p.y)) +
                       "\" x2=\"" + fmt_px(px(p.x) + d.x * ray_len) + "\" y2=\"" +
                       fmt_px(py(p.y) - d.y * ray_len) + "\"/>\n";
            }
        }
        out += "  </g>\n";
    }

    out += "  <g stroke=\"#333333\" stroke-width=\"1.2\">\n";
    const double shorten = 7.0;  // keep arrowheads clear of the node disc
    for (const Edge& e : g.edges) {
        const Point& a = g.points[e.src];
        const Point& b = g.points[e.dst];
        const double x1 = px(a.x), y1 = py(a.y);
        const double x2 = px(b.x), y2 = py(b.y);
        const double len = std::hypot(x2 - x1, y2 - y1);
        const double keep = len > 2.0 * shorten ? (len - shorten) / len : 1.0;
        out += "    <line x1=\"" + fmt_px(x1) + "\" y1=\"" + fmt_px(y1) + "\" x2=\"" +
               fmt_px(x1 + (x2 - x1) * keep) + "\" y2=\"" + fmt_px(y1 + (y2 - y1) * keep) +
               "\" marker-end=\"url(#arrow)\"/>\n";
    }
    out += "  </g>\n";

    out += "  <g fill=\"#1f77b4\">\n";
    for (const Point& p : g.points) {
        out += "    <circle cx=\"" + fmt_px(px(p.x)) + "\" cy=\"" + fmt_px(py(p.y)) +
               "\" r=\"3.5\"/>\n";
    }
    out += "  </g>\n";

    out += "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"#555555\">\n";
    for (const Point& p : g.points) {
        out += "    <text x=\"" + fmt_px(px(p.x) + 5.0) + "\" y=\"" + fmt_px(py(p.y) - 5.0) +
               "\">" + std::to_string(p.id) + "</text>\n";
    }
    out += "  </g>\n";
    out += "</svg>\n";
    return out;
}

std::string json_export(const GeometricDigraph& g) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(g.kind);
    j["cone_count"] = g.cone_count;
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (const Point& p : g.points) pts.push_back({p.x, p.y});
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges) edges.push_back({e.src, e.dst});
    return j.dump(2) + "\n";
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

PointSet parse_points(std::string_view text) {
    std::vector<std::pair<double, double>> coords;
    std::vector<std::size_t> row_lines;  // 1-based source line of each data row
    std::map<std::pair<double, double>, std::size_t> seen;
    bool header_allowed = true;
    std::size_t line_no = 0;
    for (std::string_view raw : split(text, '\n')) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::string error;
        if (!parse_point_line(line, coords.size(), line_no, coords, error)) {
            if (header_allowed) {  // one leading header line is tolerated
                header_allowed = false;
                continue;
            }
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + error);
        }
        header_allowed = false;
        row_lines.push_back(line_no);
        const auto [it, inserted] = seen.emplace(coords.back(), row_lines.back());
        if (!inserted) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": duplicate coordinates, first seen on line " +
                                        std::to_string(it->second));
        }
    }
    return make_point_set(coords);
}

std::string format_points(const PointSet& ps) {
    std::string out;
    for (const Point& p : ps) {
        out += format_double(p.x);
        out += ' ';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

std::optional<ExportFormat> export_format_from(std::string_view name) {
    if (name == "edge-csv") return ExportFormat::EdgeCsv;
    if (name == "dot") return ExportFormat::Dot;
    if (name == "svg") return ExportFormat::Svg;
    if (name == "json") return ExportFormat::Json;
    return std::nullopt;
}

std::string export_graph(const GeometricDigraph& g, ExportFormat format, SvgOptions svg) {
    switch (format) {
        case ExportFormat::EdgeCsv: {
            std::string out;
            for (const Edge& e : g.edges) {
                out += std::to_string(e.src) + "," + std::to_string(e.dst) + "," +
                       format_double(dist(g.points[e.src], g.points[e.dst])) + "\n";
            }
            return out;
        }
        case ExportFormat::Dot:
            return dot_export(g);
        case ExportFormat::Svg:
            return svg_export(g, svg);
        case ExportFormat::Json:
            return json_export(g);
    }
    throw std::logic_error("unknown export format");
}

GeometricDigraph parse_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("cone_count") ||
        !j.contains("points") || !j.contains("edges")) {
        throw std::runtime_error("graph json: expected object with kind, cone_count, points, edges");
    }
    GeometricDigraph g;
    const auto kind = graph_kind_from(j["kind"].get<std::string>());
    if (!kind) throw std::runtime_error("graph json: unknown kind \"" + j["kind"].get<std::string>() + "\"");
    g.kind = *kind;
    g.cone_count = j["cone_count"].get<int>();
    if (g.cone_count < 2) throw std::runtime_error("graph json: cone_count must be >= 2");

    std::vector<std::pair<double, double>> coords;
    for (const auto& item : j["points"]) {
        if (!item.is_array() || item.size() != 2) {
            throw std::runtime_error("graph json: each point must be an [x, y] pair");
        }
        coords.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    try {
        g.points = make_point_set(coords);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("graph json: ") + e.what());
    }

    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 2) {
            throw std::runtime_error("graph json: each edge must be a [src, dst] pair");
        }
        const auto src = item[0].get<std::int64_t>();
        const auto dst = item[1].get<std::int64_t>();
        if (src < 0 || dst < 0 || src >= static_cast<std::int64_t>(g.points.size()) ||
            dst >= static_cast<std::int64_t>(g.points.size()) || src == dst) {
            throw std::runtime_error("graph json: edge endpoint out of range");
        }
        g.edges.push_back({static_cast<std::uint32_t>(src), static_cast<std::uint32_t>(dst)});
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
        throw std::runtime_error("graph json: duplicate edge");
    }
    return g;
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    for (int i = 15; i >= 0; --i) {
        buf[i] = "0123456789abcdef"[h & 0xF];
        h >>= 4;
    }
    return std::string(buf, 16);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error while reading " + path);
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("error while writing " + path);
}

}  // namespace conespan
