#pragma once

#include <cstdint>
#include <span>

#include "corrsens/moments.hpp"
#include "corrsens/types.hpp"

namespace corrsens {

// Brute-force lattice search next to the closed-form answer it validates.
// The grid can only undershoot the true optimum, so
// grid_delta_r <= engine_delta_r + 1e-9 always.
struct OracleReport {
    double grid_delta_r = 0.0;
    double grid_delta_p = 0.0;
    Point2 grid_witness;  // lattice point attaining grid_delta_r
    std::uint32_t grid_resolution = 0;
    double engine_delta_r = 0.0;
    double engine_delta_p = 0.0;
    // largest relative gap between the engine and grid values, i.e. the
    // tightest tolerance at which both pairs agree
    double agree_within = 0.0;
};

// Textbook two-pass PCC (means first, then deviation sums). Deliberately
// independent of the streaming accumulator it cross-checks.
[[nodiscard]] double pcc_two_pass(std::span<const Point2> points);

// Evaluate the augmented PCC and p-value on a resolution^2 equidistant
// lattice over f (inclusive of the corners), plus any extra points, and
// compare the lattice maxima of |delta r| / |delta p| with the engine's
// closed-form answers. The p side mirrors the engine's straddle handling.
[[nodiscard]] OracleReport grid_sensitivities(std::span<const Point2> points,
                                              const FeasibleRegion& f,
                                              std::uint32_t resolution,
                                              std::span<const Point2> extra = {});

struct PartialCheck {
    double analytic = 0.0;
    double numeric = 0.0;
    // |analytic - numeric| / max(|analytic|, |numeric|, 1); the floor keeps
    // the measure meaningful where the surface is flat and differencing
    // noise dominates
    double rel_err = 0.0;
};

struct GradientCheckReport {
    PartialCheck dr_dx;
    PartialCheck dr_dy;
    PartialCheck d2r_dx2;
    PartialCheck d2r_dy2;
    PartialCheck d2r_dxdy;
};

// Closed-form partials of the augmented PCC at p against central differences
// with per-axis step h * max(1, |coordinate|).
[[nodiscard]] GradientCheckReport gradient_check(const MomentSummary& s,
                                                 Point2 p, double h);

// det H of the augmented PCC at the mean point: (r^2 - 1) / (N^2 sx^2 sy^2)
// with N = count + 1. Negative whenever |r| < 1 (the mean is a saddle).
[[nodiscard]] double hessian_det_at_mean(const MomentSummary& s);

}  // namespace corrsens
