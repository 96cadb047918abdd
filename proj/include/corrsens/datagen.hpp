#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "corrsens/types.hpp"

namespace corrsens {

enum class DistKind : std::uint8_t {
    Uniform,       // each coordinate uniform on [-10, 10]
    Gaussian,      // zero-mean bivariate normal, covariance A^T A with
                   // A entries uniform on [0, 1]
    Dirichlet,     // first two components of a 3-part Dirichlet draw,
                   // alpha_i uniform on [0, 10]
    Contaminated,  // Gaussian with floor(0.1 n) points replaced by uniform
                   // draws on [-30, 30]^2
};

[[nodiscard]] std::string_view to_string(DistKind kind) noexcept;
[[nodiscard]] DistKind dist_kind_from_string(std::string_view name);

struct DistributionSpec {
    DistKind kind = DistKind::Uniform;
    std::uint32_t size = 0;
    std::uint64_t seed = 0;
};

// Deterministic function of the DistributionSpec; see rng.hpp for the
// portable sampler stack.
[[nodiscard]] std::vector<Point2> sample(const DistributionSpec& spec);

// Tight inclusive per-axis min/max. Throws InputError on empty input.
[[nodiscard]] FeasibleRegion bounding_box(std::span<const Point2> points);

struct BenchCell {
    DistKind kind = DistKind::Uniform;
    std::uint32_t size = 0;
    std::uint32_t trials = 0;
    std::uint32_t agree_count = 0;
    double agreement_rate = 0.0;
    double max_rel_gap = 0.0;
    std::uint32_t resamples = 0;  // degenerate-variance trials redrawn
};

struct BenchReport {
    std::uint32_t trials_per_cell = 0;
    std::uint32_t grid_resolution = 0;
    double rel_tol = 0.0;
    std::uint64_t seed = 0;
    std::vector<BenchCell> cells;
    std::uint64_t total_trials = 0;
    std::uint64_t total_agree = 0;
    double overall_agreement = 0.0;
    double max_rel_gap = 0.0;
    std::uint32_t total_resamples = 0;
};

// Agreement benchmark between the closed-form sensitivities and the grid
// oracle: for each of the four distribution kinds, each size and each trial,
// sample a dataset, take its bounding box as the region, and call the two
// computations in agreement when |engine - grid| / max(|engine|, 1e-30)
// <= rel_tol on delta_r. Deterministic given the seed; per-trial seeds are
// derived, so execution order cannot matter.
[[nodiscard]] BenchReport run_benchmark(std::uint32_t trials,
                                        std::span<const std::uint32_t> sizes,
                                        std::uint32_t grid_resolution,
                                        double rel_tol, std::uint64_t seed);

}  // namespace corrsens
