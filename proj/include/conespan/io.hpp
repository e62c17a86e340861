#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "conespan/graphs.hpp"

// Text formats: point lists, graph exports, and the helpers shared by the
// command-line reports. All numeric output uses shortest round-trip decimals.
namespace conespan {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Accepts one point per line as either "x y" or "id,x,y"; a leading
// non-numeric header line is skipped. Explicit ids must equal the line's
// 0-based data position. Errors carry 1-based line numbers.
PointSet parse_points(std::string_view text);

// One "x y" line per point, in id order.
std::string format_points(const PointSet& ps);

enum class ExportFormat { EdgeCsv, Dot, Svg, Json };

std::optional<ExportFormat> export_format_from(std::string_view name);

struct SvgOptions {
    bool cone_overlays = false;  // draw the cone boundary rays at every point
};

// edge-csv: "src,dst,length" rows sorted by (src, dst).
// dot:      directed graph with pinned node positions.
// svg:      standalone drawing with directed arrowheads.
// json:     {kind, cone_count, points, edges}; lossless round trip.
std::string export_graph(const GeometricDigraph& g, ExportFormat format, SvgOptions svg = {});

// Inverse of the json export; throws std::runtime_error on malformed input.
GeometricDigraph parse_graph_json(std::string_view text);

// FNV-1a 64-bit content digest, returned as 16 hex digits.
std::string content_digest(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace conespan
