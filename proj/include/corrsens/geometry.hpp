#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "corrsens/moments.hpp"
#include "corrsens/types.hpp"

namespace corrsens {

// Least-squares lines for both regression directions:
//   y = alpha_x + beta_x * x   (y on x)
//   x = alpha_y + beta_y * y   (x on y)
// Both pass through (mean_x, mean_y).
struct BlueLines {
    double beta_x = 0.0;
    double alpha_x = 0.0;
    double beta_y = 0.0;
    double alpha_y = 0.0;
};

enum class CandidateLabel : std::uint8_t {
    CornerLL,
    CornerLU,
    CornerUL,
    CornerUU,
    IxLower,   // y-on-x line crossing the lower edge y = ly
    IxUpper,   // y-on-x line crossing the upper edge y = uy
    IyLeft,    // x-on-y line crossing the left edge x = lx
    IyRight,   // x-on-y line crossing the right edge x = ux
};

[[nodiscard]] std::string_view to_string(CandidateLabel label) noexcept;

struct Candidate {
    Point2 point;
    CandidateLabel label = CandidateLabel::CornerLL;
};

// The <= 8 boundary points (4 corners plus feasible regression-line/edge
// crossings) where extrema of the augmented PCC must lie. Deduplicated;
// degenerate regions can shrink the set down to a single point.
struct CandidateSet {
    std::vector<Candidate> points;
};

// The four region vertices, in the order (lx,ly), (lx,uy), (ux,ly), (ux,uy).
[[nodiscard]] std::array<Point2, 4> corner_points(const FeasibleRegion& f);

// beta_x = sxy/sx^2, alpha_x = mean_y - beta_x*mean_x, and symmetrically for
// the x-on-y direction.
[[nodiscard]] BlueLines blue_lines(const MomentSummary& s);

// Crossings of the two regression lines with the region edges, restricted to
// the region (inclusive). A slope below the parallel threshold omits the
// corresponding pair; crossings within 1e-12 of a bound (relative to the
// axis span) are snapped onto it before filtering.
[[nodiscard]] std::vector<Candidate> intersection_points(
    const BlueLines& b, const FeasibleRegion& f);

// Deduplicated union of corners and feasible intersections. Corners are
// inserted first so duplicate coordinates keep the corner label.
[[nodiscard]] CandidateSet candidate_set(const MomentSummary& s,
                                         const FeasibleRegion& f);

}  // namespace corrsens
