#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conespan/graphs.hpp"
#include "conespan/metrics.hpp"

// Certified short paths. Three layers: a constructive 6-cone path carrying a
// per-instance length bound, recursive extraction of witness paths that place
// every 6-cone edge inside the doubly-filtered (yao-yao) graph within a fixed
// stretch, and empirical validators for the four supporting path bounds the
// extraction relies on.
namespace conespan {

// Relative slack applied to every numeric bound comparison, absorbing the
// accumulated floating error of O(n)-term path sums.
inline constexpr double kBoundSlack = 1e-9;

inline bool bound_satisfied(double value, double bound) {
    return value <= bound * (1.0 + kBoundSlack) + 1e-12;
}

// Certified worst-case stretch of witness paths over 6k cones, k >= 6.
inline constexpr double kWitnessStretch = 5.832;

struct Path {
    std::vector<std::uint32_t> ids;
    double total_length = 0.0;
    double max_edge_length = 0.0;
};

// Fills in the length fields; requires at least one id, ids within range, and
// distinct consecutive ids (throws std::invalid_argument otherwise).
Path make_path(const PointSet& ps, std::vector<std::uint32_t> ids);

// True iff every consecutive pair of p is an edge of g, ignoring direction.
bool path_edges_in(const GeometricDigraph& g, const Path& p);

// Geometry backing the constructive path between a and b. The enclosing
// triangle of the pair has free corners on its two bounding rays; one labeling
// calls the clockwise corner x and the other z, the second labeling swaps
// them. y is the point on segment az such that by is parallel to ax.
struct CanonicalPathFrame {
    Vec2 x;
    Vec2 y;
    Vec2 z;
    double length_bound = 0.0;    // |ax| + |ay|
    double edge_bound = 0.0;      // |ax|
    bool triangle_empty = false;  // no input point strictly inside triangle b,y,z
};

// Frame for the labeling that puts x on the clockwise (x_clockwise = true) or
// counter-clockwise bounding ray. Throws std::invalid_argument for bad ids.
CanonicalPathFrame canonical_path_frame(const PointSet& ps, std::uint32_t a, std::uint32_t b,
                                        bool x_clockwise);

// True iff at least one labeling has an empty triangle b,y,z — the
// precondition of lemma1_canonical_path.
bool lemma1_applicable(const PointSet& ps, std::uint32_t a, std::uint32_t b);

// Constructive path from a to b in the 6-cone graph, built by repeatedly
// taking the outgoing edge in the cone of the current point containing its
// target. Guarantees total_length <= |ax| + |ay| and max_edge_length <= |ax|
// (within slack) for the chosen labeling. Throws std::invalid_argument when
// neither labeling passes the empty-triangle precondition, std::logic_error
// if the construction breaks its own bound or fails to terminate in n steps.
Path lemma1_canonical_path(const GeometricDigraph& theta6, std::uint32_t a, std::uint32_t b);

// Labels attached to one node of a witness expansion:
//  Base / InYaoYao          the edge itself survives the double filtering
//                           (Base marks a globally shortest 6-cone edge);
//  Case1..Case4             position of the kept source a' relative to the
//                           cone of a containing b (next cone counter-
//                           clockwise, the two lateral cones, next clockwise);
//  CaseOther                a' in a relative cone the bound analysis treats as
//                           unreachable; kept for diagnosis, never fatal;
//  SpecialAbInYao           b was a's nearest in-cone point, so the detour
//                           collapses to b' = b;
//  SpecialAbPrimeInYaoYao   the edge a ~ b' survives filtering, so a' = a.
enum class WitnessTag {
    Base,
    InYaoYao,
    Case1,
    Case2,
    Case3,
    Case4,
    CaseOther,
    SpecialAbInYao,
    SpecialAbPrimeInYaoYao,
};

const char* to_string(WitnessTag tag);

// One node of the expansion tree for a 6-cone edge a -> b; children are the
// expansions of the 6-cone sub-edges its detour decomposed into.
struct TraceNode {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::vector<WitnessTag> tags;
    std::vector<TraceNode> children;
};

struct WitnessCertificate {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    Path yy_path;  // endpoints {a, b}; every edge in the doubly-filtered graph
    TraceNode trace;
    double bound = 0.0;  // kWitnessStretch * |ab|
    double ratio = 0.0;  // yy_path.total_length / |ab|
    bool satisfied = false;
};

// Shared expansion state for one (point set, k) pair: graphs are built once,
// shortest-path trees and per-edge expansions are cached across extractions.
class WitnessExtractor {
public:
    // Requires k >= 6 (throws std::invalid_argument).
    WitnessExtractor(const PointSet& ps, int k);
    ~WitnessExtractor();
    WitnessExtractor(WitnessExtractor&&) noexcept;
    WitnessExtractor& operator=(WitnessExtractor&&) noexcept;

    // Requires a directed edge a -> b of the 6-cone graph (throws
    // std::invalid_argument). Throws std::runtime_error("descent violation...")
    // if a recursive sub-edge fails to be strictly shorter than its parent.
    WitnessCertificate extract(std::uint32_t a, std::uint32_t b);

    const PointSet& points() const;
    const GeometricDigraph& theta6() const;
    const GeometricDigraph& yao() const;
    const GeometricDigraph& yao_yao() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One-shot convenience wrapper around WitnessExtractor.
WitnessCertificate extract_witness(const PointSet& ps, int k, std::uint32_t a, std::uint32_t b);

// The four path-length checks, named after the path each one bounds:
//  bb   from the detour point b' (the in-cone nearest neighbor of a in the
//       cone holding b) back to b, bounded via the perpendicular drop e;
//  aa1  between a and the kept source a' when a' falls in one of the two
//       lateral cones relative to ab';
//  aa2  between a' and a when a' falls in the next cone counter-clockwise
//       from the one holding ab;
//  aa3  between a' and a when a' falls in the next cone clockwise, below the
//       supporting line of ab'.
enum class LemmaCheck { Bb, Aa1, Aa2, Aa3 };

const char* to_string(LemmaCheck check);
std::optional<LemmaCheck> lemma_check_from(std::string_view name);

inline constexpr std::uint32_t kNoRole = 0xFFFFFFFFu;

// One configuration matching a check's preconditions, with its verdict.
// Role ids not used by the check stay kNoRole.
struct LemmaMatch {
    std::uint32_t a = kNoRole;
    std::uint32_t b = kNoRole;
    std::uint32_t a_prime = kNoRole;
    std::uint32_t b_prime = kNoRole;
    bool reflected = false;  // frame mirrored so ab sits on or below its cone bisector
    std::vector<std::pair<std::string, Vec2>> anchors;  // derived points (e, h)
    double path_length = 0.0;  // shortest 6-cone path between the bounded endpoints
    double bound = 0.0;
    double max_edge_length = 0.0;
    bool within = false;      // path_length <= bound (within slack)
    bool edges_short = true;  // max edge < |ab| where the check claims it
};

struct ValidationReport {
    LemmaCheck check = LemmaCheck::Bb;
    std::size_t candidates = 0;  // primary edges scanned
    std::size_t matches = 0;
    std::size_t violations = 0;
    double min_slack = 0.0;  // min over matches of bound - path_length
    double max_ratio = 0.0;  // max over matches of path_length / bound
    std::vector<LemmaMatch> samples;

    bool vacuous() const { return matches == 0; }
    bool passed() const { return violations == 0; }
};

// Enumerates every role assignment over the point set that satisfies a
// check's preconditions and compares the shortest 6-cone path length against
// the check's bound. Graphs are built once per validator.
class LemmaValidator {
public:
    // Requires k >= 2 (throws std::invalid_argument).
    LemmaValidator(const PointSet& ps, int k);
    ~LemmaValidator();
    LemmaValidator(LemmaValidator&&) noexcept;
    LemmaValidator& operator=(LemmaValidator&&) noexcept;

    // Aa3 additionally requires k > 2 (throws std::invalid_argument).
    ValidationReport validate(LemmaCheck check);

    const PointSet& points() const;
    const GeometricDigraph& theta6() const;
    const GeometricDigraph& yao() const;
    const GeometricDigraph& yao_yao() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One-shot convenience wrapper around LemmaValidator.
ValidationReport validate_lemma_bounds(const PointSet& ps, int k, LemmaCheck which);

}  // namespace conespan
