#include "conespan/gen.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace conespan {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

const char* to_string(GenKind kind) {
    switch (kind) {
        case GenKind::Uniform: return "uniform";
        case GenKind::Grid: return "grid";
        case GenKind::GaussianClusters: return "gaussian-clusters";
        case GenKind::CircleWithCenter: return "circle-with-center";
    }
    return "?";
}

std::optional<GenKind> gen_kind_from(std::string_view name) {
    if (name == "uniform") return GenKind::Uniform;
    if (name == "grid") return GenKind::Grid;
    if (name == "gaussian-clusters") return GenKind::GaussianClusters;
    if (name == "circle-with-center") return GenKind::CircleWithCenter;
    return std::nullopt;
}

namespace {

constexpr int kMaxRedraws = 64;

// Draws one point via `draw`, redrawing while the coordinates collide with an
// earlier point. Every generator funnels through here so the redraw policy is
// uniform.
template <typename Draw>
void emit_unique(std::set<std::pair<double, double>>& seen,
                 std::vector<std::pair<double, double>>& coords, Draw&& draw) {
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const std::pair<double, double> p = draw();
        if (seen.insert(p).second) {
            coords.push_back(p);
            return;
        }
    }
    throw std::runtime_error("point generation: duplicate coordinates persisted after redraws");
}

// One standard-normal pair from two uniform draws (Box-Muller).
std::pair<double, double> normal_pair(SplitMix64& rng) {
    const double u1 = 1.0 - rng.next_unit();  // (0, 1]: keeps the log finite
    const double u2 = rng.next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
}

}  // namespace

PointSet generate(const GenConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("point generation: n must be >= 1");
    std::vector<std::pair<double, double>> coords;
    coords.reserve(cfg.n);
    std::set<std::pair<double, double>> seen;
    SplitMix64 rng(cfg.seed);

    switch (cfg.kind) {
        case GenKind::Uniform: {
            for (std::size_t i = 0; i < cfg.n; ++i) {
                emit_unique(seen, coords, [&] {
                    const double x = rng.next_unit();
                    const double y = rng.next_unit();
                    return std::pair<double, double>{x, y};
                });
            }
            break;
        }
        case GenKind::Grid: {
            if (cfg.jitter < 0.0) throw std::invalid_argument("point generation: jitter must be >= 0");
            std::size_t m = 1;
            while (m * m < cfg.n) ++m;
            const double cell = 1.0 / static_cast<double>(m);
            for (std::size_t i = 0; i < cfg.n; ++i) {
                const double cx = (static_cast<double>(i % m) + 0.5) * cell;
                const double cy = (static_cast<double>(i / m) + 0.5) * cell;
                emit_unique(seen, coords, [&] {
                    const double jx = (rng.next_unit() - 0.5) * cfg.jitter * cell;
                    const double jy = (rng.next_unit() - 0.5) * cfg.jitter * cell;
                    return std::pair<double, double>{cx + jx, cy + jy};
                });
            }
            break;
        }
        case GenKind::GaussianClusters: {
            if (cfg.clusters < 1) {
                throw std::invalid_argument("point generation: clusters must be >= 1");
            }
            if (cfg.sigma < 0.0) throw std::invalid_argument("point generation: sigma must be >= 0");
            std::vector<std::pair<double, double>> centers;
            centers.reserve(static_cast<std::size_t>(cfg.clusters));
            for (int i = 0; i < cfg.clusters; ++i) {
                const double x = rng.next_unit();
                const double y = rng.next_unit();
                centers.emplace_back(x, y);
            }
            for (std::size_t i = 0; i < cfg.n; ++i) {
                const auto& c = centers[i % centers.size()];
                emit_unique(seen, coords, [&] {
                    const auto [dx, dy] = normal_pair(rng);
                    return std::pair<double, double>{c.first + cfg.sigma * dx,
                                                     c.second + cfg.sigma * dy};
                });
            }
            break;
        }
        case GenKind::CircleWithCenter: {
            if (cfg.n < 2) {
                throw std::invalid_argument("point generation: circle-with-center needs n >= 2");
            }
            if (cfg.radius <= 0.0) {
                throw std::invalid_argument("point generation: radius must be > 0");
            }
            coords.emplace_back(0.0, 0.0);
            const std::size_t rim = cfg.n - 1;
            for (std::size_t j = 0; j < rim; ++j) {
                const double angle =
                    cfg.phase + kTwoPi * static_cast<double>(j) / static_cast<double>(rim);
                coords.emplace_back(cfg.radius * std::cos(angle), cfg.radius * std::sin(angle));
            }
            break;
        }
    }
    return make_point_set(coords);
}

}  // namespace conespan
