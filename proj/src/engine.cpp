#include "corrsens/engine.hpp"

#include <algorithm>
#include <cmath>

#include "corrsens/stats.hpp"

namespace corrsens {

namespace {

// Candidates attaining a maximum within this slack resolve to the first one
// in label order, so witnesses are deterministic.
constexpr double kWitnessTie = 1e-12;

std::size_t first_attaining(const std::vector<double>& values, double best) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= best - kWitnessTie) return i;
    }
    return 0;
}

}  // namespace

double augmented_pcc(const MomentSummary& s, Point2 p) {
    if (!p.finite()) {
        throw InputError("non-finite candidate point");
    }
    if (s.count < 2 || !(s.sx > 0.0) || !(s.sy > 0.0)) {
        throw InputError("augmented_pcc requires a valid summary");
    }
    const double n1 = static_cast<double>(s.count + 1);
    const double dx = p.x - s.mean_x;
    const double dy = p.y - s.mean_y;
    const double num = n1 * s.sxy + dx * dy;
    const double den = std::sqrt((n1 * s.sx * s.sx + dx * dx) *
                                 (n1 * s.sy * s.sy + dy * dy));
    return clamp_unit_correlation(num / den);
}

SensitivityReport primary_sensitivities(const MomentSummary& s,
                                        const FeasibleRegion& f,
                                        bool allow_reduced) {
    f.require_valid();
    if (s.count < 2 || !(s.sx > 0.0) || !(s.sy > 0.0)) {
        throw InputError("primary_sensitivities requires a valid summary");
    }
    const bool reduced = s.count == 2;
    if (reduced && !allow_reduced) {
        throw InputError("p-value undefined: df < 1 (3 points required)");
    }

    SensitivityReport rep;
    rep.p_defined = !reduced;
    rep.r_current = pcc(s);
    if (!reduced) {
        rep.p_current = p_value(rep.r_current, s.count).p;
    }

    const CandidateSet cs = candidate_set(s, f);
    const std::uint64_t m_aug = s.count + 1;

    std::vector<double> dr_values;
    std::vector<double> dp_values;
    dr_values.reserve(cs.points.size());
    dp_values.reserve(cs.points.size());
    double r_max = -2.0;
    double r_min = 2.0;
    for (const auto& c : cs.points) {
        CandidateEval eval;
        eval.point = c.point;
        eval.label = c.label;
        eval.r_aug = augmented_pcc(s, c.point);
        if (!reduced) {
            eval.p_aug = p_value(eval.r_aug, m_aug).p;
        }
        r_max = std::max(r_max, eval.r_aug);
        r_min = std::min(r_min, eval.r_aug);
        dr_values.push_back(std::fabs(rep.r_current - eval.r_aug));
        if (!reduced) {
            dp_values.push_back(std::fabs(rep.p_current - eval.p_aug));
        }
        rep.candidates.push_back(eval);
    }

    rep.delta_r = *std::max_element(dr_values.begin(), dr_values.end());
    rep.witness_r = rep.candidates[first_attaining(dr_values, rep.delta_r)];
    rep.straddle = r_max >= 0.0 && 0.0 >= r_min;

    if (!reduced) {
        rep.delta_p = *std::max_element(dp_values.begin(), dp_values.end());
        rep.witness_p = rep.candidates[first_attaining(dp_values, rep.delta_p)];
        if (rep.straddle && 1.0 - rep.p_current > rep.delta_p) {
            // a zero crossing of the augmented PCC exists inside the region,
            // where the p-value reaches 1 exactly
            rep.delta_p = 1.0 - rep.p_current;
            rep.stationary_p_witness = true;
            rep.witness_p = CandidateEval{};
            rep.witness_p.p_aug = 1.0;
        }
    }
    return rep;
}

std::pair<StreamRecord, OnlineMoments> stream_step(const OnlineMoments& state,
                                                   Point2 p,
                                                   const FeasibleRegion& f) {
    StreamRecord rec;
    rec.index = state.count;
    rec.report_before = primary_sensitivities(summarize(state), f);
    const OnlineMoments next = update(state, p);
    const double r_after = pcc(summarize(next));
    rec.observed_delta_r = std::fabs(r_after - rec.report_before.r_current);
    rec.within_prediction =
        rec.observed_delta_r <= rec.report_before.delta_r + 1e-9;
    rec.point_in_region = f.contains(p);
    return {rec, next};
}

}  // namespace corrsens
