#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "corrsens/geometry.hpp"
#include "corrsens/moments.hpp"
#include "corrsens/types.hpp"

namespace corrsens {

struct CandidateEval {
    Point2 point;
    CandidateLabel label = CandidateLabel::CornerLL;
    double r_aug = 0.0;  // PCC of the dataset with this point appended
    double p_aug = std::numeric_limits<double>::quiet_NaN();
};

// Worst-case one-point sensitivities of a dataset within a feasible region,
// with the points attaining them.
struct SensitivityReport {
    double r_current = 0.0;
    double p_current = std::numeric_limits<double>::quiet_NaN();
    double delta_r = 0.0;
    double delta_p = std::numeric_limits<double>::quiet_NaN();
    CandidateEval witness_r;
    // When the candidate PCCs straddle zero and 1 - p_current dominates, the
    // worst p-value (exactly 1) is attained at an interior zero of the
    // augmented PCC whose coordinates are not constructed; witness_p is then
    // reported as "stationary" without a point.
    bool stationary_p_witness = false;
    CandidateEval witness_p;
    bool straddle = false;
    // False only in the reduced count == 2 mode, where p-values are
    // undefined and only the r side of the report is populated.
    bool p_defined = true;
    std::vector<CandidateEval> candidates;
};

// PCC of the dataset summarized by s with one extra point appended, via the
// closed form
//   (N*sxy + dx*dy) / sqrt((N*sx^2 + dx^2) * (N*sy^2 + dy^2)),  N = count + 1,
// where dx, dy are the point's deviations from the current means. Clamped
// to [-1,1].
[[nodiscard]] double augmented_pcc(const MomentSummary& s, Point2 p);

// Evaluate every candidate point and aggregate delta_r / delta_p with
// witnesses and the straddle flag. Candidate p-values are computed at
// cardinality count + 1 (df = count - 1). Requires count >= 3 unless
// allow_reduced is set, which admits count == 2 with the p side disabled.
[[nodiscard]] SensitivityReport primary_sensitivities(
    const MomentSummary& s, const FeasibleRegion& f,
    bool allow_reduced = false);

struct StreamRecord {
    // 0-based position of the absorbed point in the accumulated dataset
    std::uint64_t index = 0;
    SensitivityReport report_before;
    double observed_delta_r = 0.0;
    bool within_prediction = false;
    bool point_in_region = false;
};

// One step of online monitoring: report the sensitivities of the current
// state, then absorb p. The returned accumulator is the only state a caller
// needs to thread between steps.
[[nodiscard]] std::pair<StreamRecord, OnlineMoments> stream_step(
    const OnlineMoments& state, Point2 p, const FeasibleRegion& f);

}  // namespace corrsens
