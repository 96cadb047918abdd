#pragma once

#include <cstdint>
#include <span>

#include "corrsens/types.hpp"

namespace corrsens {

// Streaming bivariate moments in Welford's sum form. m2_x, m2_y and c_xy are
// sums of squared/cross deviations, i.e. count times the biased (co)variance.
// Plain value type: updates return a new accumulator and never mutate the
// input, so accumulators can be copied, compared and sent across threads
// freely.
struct OnlineMoments {
    std::uint64_t count = 0;
    double mean_x = 0.0;
    double mean_y = 0.0;
    double m2_x = 0.0;
    double m2_y = 0.0;
    double c_xy = 0.0;
};

// Derived biased (divide-by-count) statistics of an accumulator.
struct MomentSummary {
    std::uint64_t count = 0;
    double mean_x = 0.0;
    double mean_y = 0.0;
    double sx = 0.0;   // biased standard deviation, > 0 once summarized
    double sy = 0.0;
    double sxy = 0.0;  // biased covariance
};

// Absorb one point. Throws InputError on non-finite coordinates.
[[nodiscard]] OnlineMoments update(const OnlineMoments& m, Point2 p);

// Single O(n) pass over a dataset with constant memory beyond the
// accumulator. Throws InputError naming the offending index on non-finite
// input.
[[nodiscard]] OnlineMoments from_dataset(std::span<const Point2> points);

// True when a deviation sum is numerically zero at the accumulator's scale.
// The floor is absolute but scale-aware: m2 <= 1e-24 * max(1, mean^2) * count.
[[nodiscard]] bool degenerate_axis(double m2, double mean,
                                   std::uint64_t count) noexcept;

// Requires count >= 2 and nondegenerate variances; throws InputError
// ("insufficient data") or DegenerateVarianceError otherwise.
[[nodiscard]] MomentSummary summarize(const OnlineMoments& m);

}  // namespace corrsens
