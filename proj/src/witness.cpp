#include "conespan/witness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace conespan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

bool strictly_inside_triangle(const Vec2& p, const Vec2& t0, const Vec2& t1, const Vec2& t2) {
    const double d0 = cross(t1 - t0, p - t0);
    const double d1 = cross(t2 - t1, p - t1);
    const double d2 = cross(t0 - t2, p - t2);
    return (d0 > 0 && d1 > 0 && d2 > 0) || (d0 < 0 && d1 < 0 && d2 < 0);
}

bool on_segment_box(const Vec2& a, const Vec2& b, const Vec2& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

// Closed-segment intersection test for p1p2 vs q1q2.
bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
    const auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) {
        return cross(b - a, c - a);
    };
    const double d1 = orient(q1, q2, p1);
    const double d2 = orient(q1, q2, p2);
    const double d3 = orient(p1, p2, q1);
    const double d4 = orient(p1, p2, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    if (d1 == 0 && on_segment_box(q1, q2, p1)) return true;
    if (d2 == 0 && on_segment_box(q1, q2, p2)) return true;
    if (d3 == 0 && on_segment_box(p1, p2, q1)) return true;
    if (d4 == 0 && on_segment_box(p1, p2, q2)) return true;
    return false;
}

}  // namespace

Path make_path(const PointSet& ps, std::vector<std::uint32_t> ids) {
    if (ids.empty()) throw std::invalid_argument("path: needs at least one vertex");
    Path p;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] >= ps.size()) throw std::invalid_argument("path: vertex id out of range");
        if (i > 0) {
            if (ids[i] == ids[i - 1]) throw std::invalid_argument("path: repeated consecutive id");
            const double w = dist(ps[ids[i - 1]], ps[ids[i]]);
            p.total_length += w;
            p.max_edge_length = std::max(p.max_edge_length, w);
        }
    }
    p.ids = std::move(ids);
    return p;
}

bool path_edges_in(const GeometricDigraph& g, const Path& p) {
    for (std::size_t i = 0; i + 1 < p.ids.size(); ++i) {
        if (!g.has_undirected(p.ids[i], p.ids[i + 1])) return false;
    }
    return true;
}

CanonicalPathFrame canonical_path_frame(const PointSet& ps, std::uint32_t a, std::uint32_t b,
                                        bool x_clockwise) {
    if (a >= ps.size() || b >= ps.size() || a == b) {
        throw std::invalid_argument("canonical path frame: invalid ids");
    }
    const ConeSystem six = cone_system(6);
    const CanonicalTriangle tri = canonical_triangle(six, ps[a], ps[b]);
    CanonicalPathFrame f;
    f.x = x_clockwise ? tri.corner_cw : tri.corner_ccw;
    f.z = x_clockwise ? tri.corner_ccw : tri.corner_cw;
    const Vec2 av = to_vec(ps[a]);
    const Vec2 bv = to_vec(ps[b]);
    const Vec2 ax = f.x - av;
    const Vec2 az = f.z - av;
    // y = a + s*(z - a) with by parallel to ax.
    const double denom = cross(az, ax);
    const double s = denom == 0.0 ? 0.0 : cross(bv - av, ax) / denom;
    f.y = av + s * az;
    f.length_bound = norm(ax) + norm(f.y - av);
    f.edge_bound = norm(ax);
    f.triangle_empty = true;
    for (const Point& p : ps) {
        if (p.id == a || p.id == b) continue;
        if (strictly_inside_triangle(to_vec(p), bv, f.y, f.z)) {
            f.triangle_empty = false;
            break;
        }
    }
    return f;
}

bool lemma1_applicable(const PointSet& ps, std::uint32_t a, std::uint32_t b) {
    return canonical_path_frame(ps, a, b, false).triangle_empty ||
           canonical_path_frame(ps, a, b, true).triangle_empty;
}

Path lemma1_canonical_path(const GeometricDigraph& theta6, std::uint32_t a, std::uint32_t b) {
    if (theta6.kind != GraphKind::Theta || theta6.cone_count != 6) {
        throw std::invalid_argument("constructive path: requires the 6-cone graph");
    }
    const PointSet& ps = theta6.points;
    if (a >= ps.size() || b >= ps.size() || a == b) {
        throw std::invalid_argument("constructive path: invalid ids");
    }

    bool top_cw = false;
    bool found = false;
    for (const bool cw : {false, true}) {
        if (canonical_path_frame(ps, a, b, cw).triangle_empty) {
            top_cw = cw;
            found = true;
            break;
        }
    }
    if (!found) {
        throw std::invalid_argument(
            "constructive path: the empty-triangle precondition fails for both labelings");
    }

    const ConeSystem six = cone_system(6);
    const OutEdgeIndex out(theta6);
    std::size_t steps = 0;
    const std::size_t max_steps = ps.size();

    // Returns the vertex list from p to q inclusive. Each level consumes the
    // outgoing edge of p toward q, then continues from u forward or — when
    // that edge crosses the segment qo of its frame — from q backward.
    std::function<std::vector<std::uint32_t>(std::uint32_t, std::uint32_t, bool)> walk =
        [&](std::uint32_t p, std::uint32_t q, bool inherit_cw) -> std::vector<std::uint32_t> {
        if (++steps > max_steps) {
            throw std::logic_error("internal error: constructive path exceeded the point budget");
        }
        const int cone = cone_index(six, ps[p], ps[q]);
        const auto next = out.target(p, cone);
        if (!next) throw std::logic_error("internal error: no outgoing edge in an occupied cone");
        const std::uint32_t u = *next;
        if (u == q) return {p, q};

        bool cw = inherit_cw;
        CanonicalPathFrame frame = canonical_path_frame(ps, p, q, cw);
        if (!frame.triangle_empty) {
            CanonicalPathFrame flipped = canonical_path_frame(ps, p, q, !cw);
            // If neither labeling is empty (degenerate numerics), keep the
            // inherited one; the top-level bound check vouches for the result.
            if (flipped.triangle_empty) {
                cw = !cw;
                frame = flipped;
            }
        }
        const Vec2 pv = to_vec(ps[p]);
        const Vec2 qv = to_vec(ps[q]);
        // o = p + s*(x - p) with qo parallel to py.
        const Vec2 px = frame.x - pv;
        const Vec2 py = frame.y - pv;
        const double denom = cross(px, py);
        const double s = denom == 0.0 ? 0.0 : cross(qv - pv, py) / denom;
        const Vec2 o = pv + s * px;

        std::vector<std::uint32_t> tail;
        if (segments_intersect(pv, to_vec(ps[u]), qv, o)) {
            tail = walk(q, u, cw);
            std::reverse(tail.begin(), tail.end());  // now runs u .. q
        } else {
            tail = walk(u, q, cw);
        }
        std::vector<std::uint32_t> result{p};
        result.insert(result.end(), tail.begin(), tail.end());
        return result;
    };

    Path path = make_path(ps, walk(a, b, top_cw));
    const CanonicalPathFrame top = canonical_path_frame(ps, a, b, top_cw);
    if (!bound_satisfied(path.total_length, top.length_bound) ||
        !bound_satisfied(path.max_edge_length, top.edge_bound)) {
        throw std::logic_error("internal error: constructive path exceeded its certified bound");
    }
    return path;
}

const char* to_string(WitnessTag tag) {
    switch (tag) {
        case WitnessTag::Base: return "base";
        case WitnessTag::InYaoYao: return "in-yy";
        case WitnessTag::Case1: return "case1";
        case WitnessTag::Case2: return "case2";
        case WitnessTag::Case3: return "case3";
        case WitnessTag::Case4: return "case4";
        case WitnessTag::CaseOther: return "case-other";
        case WitnessTag::SpecialAbInYao: return "special-ab-in-yao";
        case WitnessTag::SpecialAbPrimeInYaoYao: return "special-ab-prime-in-yy";
    }
    return "?";
}

const char* to_string(LemmaCheck check) {
    switch (check) {
        case LemmaCheck::Bb: return "bb";
        case LemmaCheck::Aa1: return "aa1";
        case LemmaCheck::Aa2: return "aa2";
        case LemmaCheck::Aa3: return "aa3";
    }
    return "?";
}

std::optional<LemmaCheck> lemma_check_from(std::string_view name) {
    if (name == "bb") return LemmaCheck::Bb;
    if (name == "aa1") return LemmaCheck::Aa1;
    if (name == "aa2") return LemmaCheck::Aa2;
    if (name == "aa3") return LemmaCheck::Aa3;
    return std::nullopt;
}

namespace {

// Everything both the extractor and the validators need for one (points, k)
// pair: the three graphs, reverse lookup tables, and cached shortest-path
// trees over the 6-cone graph.
struct GraphBundle {
    PointSet ps;
    int k;
    ConeSystem six;
    ConeSystem fine;
    GeometricDigraph theta6;
    GeometricDigraph yao;
    GeometricDigraph yy;
    OutEdgeIndex yao_out;
    std::vector<std::int64_t> yy_in;  // dst * cones + cone -> kept source, -1 absent
    UndirectedView theta_view;
    std::unordered_map<std::uint32_t, ShortestPathTree> trees;

    GraphBundle(const PointSet& points, int k_in)
        : ps(points),
          k(k_in),
          six(cone_system(6)),
          fine(cone_system(6 * k_in)),
          theta6(build_theta(ps, 6)),
          yao(build_yao(ps, 6 * k_in)),
          yy(build_yao_yao(ps, 6 * k_in)),
          yao_out(yao),
          yy_in(ps.size() * static_cast<std::size_t>(fine.cone_count), -1),
          theta_view(theta6) {
        for (const Edge& e : yy.edges) {
            const int cone = cone_index(fine, ps[e.dst], ps[e.src]);
            yy_in[e.dst * static_cast<std::size_t>(fine.cone_count) + cone] = e.src;
        }
    }

    const ShortestPathTree& tree_for(std::uint32_t src) {
        auto it = trees.find(src);
        if (it == trees.end()) it = trees.emplace(src, dijkstra(theta_view, src)).first;
        return it->second;
    }

    std::int64_t kept_source(std::uint32_t dst, int cone) const {
        return yy_in[dst * static_cast<std::size_t>(fine.cone_count) + cone];
    }
};

// Position of a_prime relative to the 6-cone of a holding ref, after the
// logical reflection that places ref on or below that cone's bisector.
WitnessTag case_tag(const GraphBundle& gb, std::uint32_t a, std::uint32_t ref,
                    std::uint32_t a_prime) {
    const int cone_ref = cone_index(gb.six, gb.ps[a], gb.ps[ref]);
    const int cone_ap = cone_index(gb.six, gb.ps[a], gb.ps[a_prime]);
    int rel = (cone_ap - cone_ref) % 6;
    if (rel < 0) rel += 6;
    if (angle_in_cone(gb.six, gb.ps[a], gb.ps[ref]) > kPi / 6.0) rel = (6 - rel) % 6;
    switch (rel) {
        case 1: return WitnessTag::Case1;
        case 2: return WitnessTag::Case2;
        case 4: return WitnessTag::Case3;
        case 5: return WitnessTag::Case4;
        default: return WitnessTag::CaseOther;
    }
}

void append_ids(std::vector<std::uint32_t>& ids, const std::vector<std::uint32_t>& add) {
    if (ids.empty()) {
        ids = add;
        return;
    }
    if (add.empty() || ids.back() != add.front()) {
        throw std::logic_error("internal error: path junction mismatch");
    }
    ids.insert(ids.end(), add.begin() + 1, add.end());
}

}  // namespace

struct WitnessExtractor::Impl {
    GraphBundle gb;
    double min_theta_edge = kInf;

    struct Expansion {
        Path path;
        TraceNode trace;
    };
    std::unordered_map<std::uint64_t, Expansion> memo;

    Impl(const PointSet& ps, int k) : gb(ps, k) {
        for (const Edge& e : gb.theta6.edges) {
            min_theta_edge = std::min(min_theta_edge, dist(gb.ps[e.src], gb.ps[e.dst]));
        }
    }

    // Expands the pieces of the shortest 6-cone path from s to t, appending the
    // resulting filtered-graph vertices to ids and the sub-traces to children.
    void append_expanded(std::uint32_t s, std::uint32_t t, double parent_len,
                         std::vector<std::uint32_t>& ids, std::vector<TraceNode>& children) {
        const std::vector<std::uint32_t> chain = tree_path(gb.tree_for(s), t);
        if (chain.empty()) {
            throw std::runtime_error("witness: endpoints disconnected in the 6-cone graph");
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const std::uint32_t u = chain[i];
            const std::uint32_t v = chain[i + 1];
            const double uv = dist(gb.ps[u], gb.ps[v]);
            if (!(uv < parent_len)) {
                throw std::runtime_error("descent violation: sub-edge " + std::to_string(u) +
                                         " -> " + std::to_string(v) +
                                         " is not strictly shorter than its parent edge");
            }
            if (gb.theta6.has_edge(u, v)) {
                const Expansion& sub = expand(u, v);
                children.push_back(sub.trace);
                append_ids(ids, sub.path.ids);
            } else if (gb.theta6.has_edge(v, u)) {
                const Expansion& sub = expand(v, u);
                children.push_back(sub.trace);
                const std::vector<std::uint32_t> rev(sub.path.ids.rbegin(), sub.path.ids.rend());
                append_ids(ids, rev);
            } else {
                throw std::logic_error(
                    "internal error: shortest-path edge missing from the 6-cone graph");
            }
        }
    }

    // Witness expansion of the directed 6-cone edge a -> b, memoized.
    const Expansion& expand(std::uint32_t a, std::uint32_t b) {
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (const auto it = memo.find(key); it != memo.end()) return it->second;

        const double ab_len = dist(gb.ps[a], gb.ps[b]);
        TraceNode node;
        node.a = a;
        node.b = b;
        std::vector<std::uint32_t> ids;

        if (gb.yy.has_undirected(a, b)) {
            node.tags.push_back(bound_satisfied(ab_len, min_theta_edge) ? WitnessTag::Base
                                                                        : WitnessTag::InYaoYao);
            ids = {a, b};
        } else {
            const int cone_ab = cone_index(gb.fine, gb.ps[a], gb.ps[b]);
            const auto target = gb.yao_out.target(a, cone_ab);
            if (!target) {
                throw std::logic_error("internal error: no nearest edge in an occupied cone");
            }
            const std::uint32_t b_prime = *target;
            if (b_prime == b) {
                // a -> b survived the first filtering but not the second: reach
                // the source kept at b in the cone holding a, then cross to b.
                node.tags.push_back(WitnessTag::SpecialAbInYao);
                const int cone_ba = cone_index(gb.fine, gb.ps[b], gb.ps[a]);
                const std::int64_t kept = gb.kept_source(b, cone_ba);
                if (kept < 0) {
                    throw std::logic_error(
                        "internal error: no kept incoming edge in a cone that filtered one");
                }
                const auto a_prime = static_cast<std::uint32_t>(kept);
                node.tags.push_back(case_tag(gb, a, b, a_prime));
                append_expanded(a, a_prime, ab_len, ids, node.children);
                append_ids(ids, {a_prime, b});
            } else if (gb.yy.has_undirected(a, b_prime)) {
                // The detour edge a ~ b' itself survived both filters.
                node.tags.push_back(WitnessTag::SpecialAbPrimeInYaoYao);
                ids = {a, b_prime};
                append_expanded(b_prime, b, ab_len, ids, node.children);
            } else {
                const int cone_bpa = cone_index(gb.fine, gb.ps[b_prime], gb.ps[a]);
                const std::int64_t kept = gb.kept_source(b_prime, cone_bpa);
                if (kept < 0) {
                    throw std::logic_error(
                        "internal error: no kept incoming edge in a cone that filtered one");
                }
                const auto a_prime = static_cast<std::uint32_t>(kept);
                node.tags.push_back(case_tag(gb, a, b, a_prime));
                append_expanded(a, a_prime, ab_len, ids, node.children);
                append_ids(ids, {a_prime, b_prime});
                append_expanded(b_prime, b, ab_len, ids, node.children);
            }
        }
        Expansion exp{make_path(gb.ps, std::move(ids)), std::move(node)};
        return memo.emplace(key, std::move(exp)).first->second;
    }
};

WitnessExtractor::WitnessExtractor(const PointSet& ps, int k) {
    if (k < 6) throw std::invalid_argument("witness: k must be at least 6");
    impl_ = std::make_unique<Impl>(ps, k);
}
WitnessExtractor::~WitnessExtractor() = default;
WitnessExtractor::WitnessExtractor(WitnessExtractor&&) noexcept = default;
WitnessExtractor& WitnessExtractor::operator=(WitnessExtractor&&) noexcept = default;

const PointSet& WitnessExtractor::points() const { return impl_->gb.ps; }
const GeometricDigraph& WitnessExtractor::theta6() const { return impl_->gb.theta6; }
const GeometricDigraph& WitnessExtractor::yao() const { return impl_->gb.yao; }
const GeometricDigraph& WitnessExtractor::yao_yao() const { return impl_->gb.yy; }

WitnessCertificate WitnessExtractor::extract(std::uint32_t a, std::uint32_t b) {
    const GraphBundle& gb = impl_->gb;
    if (a >= gb.ps.size() || b >= gb.ps.size() || !gb.theta6.has_edge(a, b)) {
        throw std::invalid_argument("witness: (a, b) must be a directed edge of the 6-cone graph");
    }
    const Impl::Expansion& exp = impl_->expand(a, b);
    WitnessCertificate cert;
    cert.a = a;
    cert.b = b;
    cert.yy_path = exp.path;
    cert.trace = exp.trace;
    const double ab_len = dist(gb.ps[a], gb.ps[b]);
    cert.bound = kWitnessStretch * ab_len;
    cert.ratio = exp.path.total_length / ab_len;
    cert.satisfied = bound_satisfied(exp.path.total_length, cert.bound);
    return cert;
}

WitnessCertificate extract_witness(const PointSet& ps, int k, std::uint32_t a, std::uint32_t b) {
    WitnessExtractor extractor(ps, k);
    return extractor.extract(a, b);
}

struct LemmaValidator::Impl {
    GraphBundle gb;
    Impl(const PointSet& ps, int k) : gb(ps, k) {}
};

LemmaValidator::LemmaValidator(const PointSet& ps, int k) {
    if (k < 2) throw std::invalid_argument("validator: k must be at least 2");
    impl_ = std::make_unique<Impl>(ps, k);
}
LemmaValidator::~LemmaValidator() = default;
LemmaValidator::LemmaValidator(LemmaValidator&&) noexcept = default;
LemmaValidator& LemmaValidator::operator=(LemmaValidator&&) noexcept = default;

const PointSet& LemmaValidator::points() const { return impl_->gb.ps; }
const GeometricDigraph& LemmaValidator::theta6() const { return impl_->gb.theta6; }
const GeometricDigraph& LemmaValidator::yao() const { return impl_->gb.yao; }
const GeometricDigraph& LemmaValidator::yao_yao() const { return impl_->gb.yy; }

namespace {

// Shortest 6-cone path between the bounded endpoints, with per-match stats.
void finish_match(GraphBundle& gb, LemmaMatch& m, std::uint32_t from, std::uint32_t to,
                  bool claims_short_edges, double ab_len) {
    const std::vector<std::uint32_t> chain = tree_path(gb.tree_for(from), to);
    if (chain.size() < 2) {
        m.path_length = kInf;
        m.max_edge_length = kInf;
        m.within = false;
        m.edges_short = false;
        return;
    }
    const Path p = make_path(gb.ps, chain);
    m.path_length = p.total_length;
    m.max_edge_length = p.max_edge_length;
    m.within = bound_satisfied(m.path_length, m.bound);
    m.edges_short =
        !claims_short_edges || p.max_edge_length <= ab_len * (1.0 + kBoundSlack);
}

}  // namespace

ValidationReport LemmaValidator::validate(LemmaCheck check) {
    GraphBundle& gb = impl_->gb;
    if (check == LemmaCheck::Aa3 && gb.k <= 2) {
        throw std::invalid_argument("validator: the below-line check needs k > 2");
    }
    ValidationReport r;
    r.check = check;
    r.min_slack = kInf;
    r.max_ratio = 0.0;
    const double alpha = gb.fine.alpha;

    const auto record = [&r](LemmaMatch m) {
        ++r.matches;
        if (!m.within || !m.edges_short) ++r.violations;
        r.min_slack = std::min(r.min_slack, m.bound - m.path_length);
        if (m.bound > 0.0 && m.path_length < kInf) {
            r.max_ratio = std::max(r.max_ratio, m.path_length / m.bound);
        }
        r.samples.push_back(std::move(m));
    };

    if (check == LemmaCheck::Aa1) {
        // One candidate per first-filter edge a -> b'; the kept source at b' in
        // the cone holding a must land in one of the two lateral cones of a.
        for (const Edge& e : gb.yao.edges) {
            ++r.candidates;
            const std::uint32_t a = e.src;
            const std::uint32_t b_prime = e.dst;
            const int cone_bpa = cone_index(gb.fine, gb.ps[b_prime], gb.ps[a]);
            const std::int64_t kept = gb.kept_source(b_prime, cone_bpa);
            if (kept < 0) continue;
            const auto a_prime = static_cast<std::uint32_t>(kept);
            if (a_prime == a) continue;
            const int cone_ab = cone_index(gb.six, gb.ps[a], gb.ps[b_prime]);
            const int cone_ap = cone_index(gb.six, gb.ps[a], gb.ps[a_prime]);
            int rel = (cone_ap - cone_ab) % 6;
            if (rel < 0) rel += 6;
            if (rel != 2 && rel != 4) continue;
            LemmaMatch m;
            m.a = a;
            m.a_prime = a_prime;
            m.b_prime = b_prime;
            m.bound = (4.0 / kSqrt3) * dist(gb.ps[a_prime], gb.ps[b_prime]) * std::sin(alpha);
            finish_match(gb, m, a, a_prime, false, 0.0);
            record(std::move(m));
        }
    } else {
        for (const Edge& e : gb.theta6.edges) {
            ++r.candidates;
            const std::uint32_t a = e.src;
            const std::uint32_t b = e.dst;
            const Vec2 av = to_vec(gb.ps[a]);
            const Vec2 ab = to_vec(gb.ps[b]) - av;
            const double ab_len = norm(ab);
            const Vec2 unit = (1.0 / ab_len) * ab;
            const bool reflected = angle_in_cone(gb.six, gb.ps[a], gb.ps[b]) > kPi / 6.0;

            const int cone_ab = cone_index(gb.fine, gb.ps[a], gb.ps[b]);
            const auto target = gb.yao_out.target(a, cone_ab);
            if (!target) continue;
            const std::uint32_t b_prime = *target;
            if (b_prime == b) continue;  // roles must be distinct

            if (check == LemmaCheck::Bb) {
                LemmaMatch m;
                m.a = a;
                m.b = b;
                m.b_prime = b_prime;
                m.reflected = reflected;
                const Vec2 abp = to_vec(gb.ps[b_prime]) - av;
                const double drop = std::abs(cross(unit, abp));  // |b'e|
                m.anchors.push_back({"e", av + dot(unit, abp) * unit});
                m.bound = kSqrt3 * drop;
                finish_match(gb, m, b_prime, b, true, ab_len);
                record(std::move(m));
                continue;
            }

            const int cone_bpa = cone_index(gb.fine, gb.ps[b_prime], gb.ps[a]);
            const std::int64_t kept = gb.kept_source(b_prime, cone_bpa);
            if (kept < 0) continue;
            const auto a_prime = static_cast<std::uint32_t>(kept);
            if (a_prime == a || a_prime == b) continue;

            const int cone6_ab = cone_index(gb.six, gb.ps[a], gb.ps[b]);
            const int cone6_ap = cone_index(gb.six, gb.ps[a], gb.ps[a_prime]);
            int rel = (cone6_ap - cone6_ab) % 6;
            if (rel < 0) rel += 6;
            const int logical = reflected ? (6 - rel) % 6 : rel;

            if (check == LemmaCheck::Aa2) {
                if (logical != 1) continue;
                LemmaMatch m;
                m.a = a;
                m.b = b;
                m.a_prime = a_prime;
                m.b_prime = b_prime;
                m.reflected = reflected;
                const double m_term =
                    std::max(std::numbers::sqrt2, 2.0 * std::sin(kPi / 6.0 + alpha) /
                                                      (kSqrt3 * std::tan(kPi / 6.0 - alpha)));
                m.bound =
                    dist(gb.ps[a_prime], gb.ps[b_prime]) * std::sin(alpha) * (1.0 + m_term);
                finish_match(gb, m, a_prime, a, true, ab_len);
                record(std::move(m));
            } else {  // Aa3
                if (logical != 5) continue;
                const double side =
                    cross(to_vec(gb.ps[b_prime]) - av, to_vec(gb.ps[a_prime]) - av);
                if (reflected ? !(side > 0.0) : !(side < 0.0)) continue;
                LemmaMatch m;
                m.a = a;
                m.b = b;
                m.a_prime = a_prime;
                m.b_prime = b_prime;
                m.reflected = reflected;
                const Vec2 aap = to_vec(gb.ps[a_prime]) - av;
                const double along = dot(unit, aap);
                const double ah = std::abs(along);
                const double aph = std::abs(cross(unit, aap));  // |a'h|
                m.anchors.push_back({"h", av + along * unit});
                m.bound = ah + (1.0 + 2.0 / kSqrt3) * aph;
                finish_match(gb, m, a_prime, a, true, ab_len);
                record(std::move(m));
            }
        }
    }

    if (r.matches == 0) {
        r.min_slack = 0.0;
        r.max_ratio = 0.0;
    }
    return r;
}

ValidationReport validate_lemma_bounds(const PointSet& ps, int k, LemmaCheck which) {
    LemmaValidator validator(ps, k);
    return validator.validate(which);
}

}  // namespace conespan
