#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "conespan/geometry.hpp"

// Deterministic point-set generators: equal configurations always yield identical
// points, on every platform, because all randomness comes from SplitMix64.
namespace conespan {

// splitmix64 generator; passes through the reference output stream for a
// given seed, so generated instances are reproducible everywhere.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    double next_unit();  // uniform in [0, 1) with 53 random bits
};

enum class GenKind { Uniform, Grid, GaussianClusters, CircleWithCenter };

const char* to_string(GenKind kind);
std::optional<GenKind> gen_kind_from(std::string_view name);

struct GenConfig {
    GenKind kind = GenKind::Uniform;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    int clusters = 5;      // gaussian-clusters: number of cluster centers
    double sigma = 0.05;   // gaussian-clusters: per-axis standard deviation
    double radius = 1.0;   // circle-with-center: rim radius
    double jitter = 0.25;  // grid: per-axis displacement as a fraction of one cell
    double phase = 1e-3;   // circle-with-center: angle of the first rim point
};

// uniform:            n independent draws from the unit square.
// grid:               first n cells of a ceil(sqrt(n)) lattice, jittered.
// gaussian-clusters:  centers drawn uniformly, points assigned round-robin.
// circle-with-center: point 0 at the origin, n-1 evenly spaced rim points.
// Throws std::invalid_argument on invalid parameters and std::runtime_error
// if duplicate coordinates persist after redraws.
PointSet generate(const GenConfig& cfg);

}  // namespace conespan
