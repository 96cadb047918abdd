#include "corrsens/geometry.hpp"

#include <cmath>

namespace corrsens {

namespace {

// Slopes smaller than this are treated as parallel to the edge they would
// cross. Near-zero but nonzero slopes produce huge crossing coordinates that
// the feasibility filter rejects on its own.
constexpr double kParallelSlope = 1e-300;

double snap_to_bounds(double v, double lo, double hi) {
    const double slack = 1e-12 * (hi - lo);
    if (v < lo && v >= lo - slack) return lo;
    if (v > hi && v <= hi + slack) return hi;
    return v;
}

}  // namespace

std::string_view to_string(CandidateLabel label) noexcept {
    switch (label) {
        case CandidateLabel::CornerLL: return "corner-ll";
        case CandidateLabel::CornerLU: return "corner-lu";
        case CandidateLabel::CornerUL: return "corner-ul";
        case CandidateLabel::CornerUU: return "corner-uu";
        case CandidateLabel::IxLower: return "ix-lower";
        case CandidateLabel::IxUpper: return "ix-upper";
        case CandidateLabel::IyLeft: return "iy-left";
        case CandidateLabel::IyRight: return "iy-right";
    }
    return "unknown";
}

std::array<Point2, 4> corner_points(const FeasibleRegion& f) {
    f.require_valid();
    return {{{f.lx, f.ly}, {f.lx, f.uy}, {f.ux, f.ly}, {f.ux, f.uy}}};
}

BlueLines blue_lines(const MomentSummary& s) {
    if (!(s.sx > 0.0) || !(s.sy > 0.0)) {
        throw DegenerateVarianceError();
    }
    BlueLines b;
    b.beta_x = s.sxy / (s.sx * s.sx);
    b.alpha_x = s.mean_y - b.beta_x * s.mean_x;
    b.beta_y = s.sxy / (s.sy * s.sy);
    b.alpha_y = s.mean_x - b.beta_y * s.mean_y;
    return b;
}

std::vector<Candidate> intersection_points(const BlueLines& b,
                                           const FeasibleRegion& f) {
    f.require_valid();
    std::vector<Candidate> out;
    if (std::fabs(b.beta_x) >= kParallelSlope) {
        const struct {
            double edge_y;
            CandidateLabel label;
        } horizontal[] = {{f.ly, CandidateLabel::IxLower},
                          {f.uy, CandidateLabel::IxUpper}};
        for (const auto& edge : horizontal) {
            double x = (edge.edge_y - b.alpha_x) / b.beta_x;
            x = snap_to_bounds(x, f.lx, f.ux);
            if (x >= f.lx && x <= f.ux) {
                out.push_back({{x, edge.edge_y}, edge.label});
            }
        }
    }
    if (std::fabs(b.beta_y) >= kParallelSlope) {
        const struct {
            double edge_x;
            CandidateLabel label;
        } vertical[] = {{f.lx, CandidateLabel::IyLeft},
                        {f.ux, CandidateLabel::IyRight}};
        for (const auto& edge : vertical) {
            double y = (edge.edge_x - b.alpha_y) / b.beta_y;
            y = snap_to_bounds(y, f.ly, f.uy);
            if (y >= f.ly && y <= f.uy) {
                out.push_back({{edge.edge_x, y}, edge.label});
            }
        }
    }
    return out;
}

CandidateSet candidate_set(const MomentSummary& s, const FeasibleRegion& f) {
    const auto corners = corner_points(f);
    const auto crossings = intersection_points(blue_lines(s), f);
    const double tol = 1e-12 * std::max(f.span_x(), f.span_y());

    CandidateSet cs;
    cs.points.reserve(8);
    auto push_unique = [&](const Candidate& c) {
        for (const auto& kept : cs.points) {
            if (std::fabs(kept.point.x - c.point.x) <= tol &&
                std::fabs(kept.point.y - c.point.y) <= tol) {
                return;  // first label (corners before intersections) wins
            }
        }
        cs.points.push_back(c);
    };

    constexpr CandidateLabel corner_labels[] = {
        CandidateLabel::CornerLL, CandidateLabel::CornerLU,
        CandidateLabel::CornerUL, CandidateLabel::CornerUU};
    for (std::size_t i = 0; i < corners.size(); ++i) {
        push_unique({corners[i], corner_labels[i]});
    }
    for (const auto& c : crossings) {
        push_unique(c);
    }
    return cs;
}

}  // namespace corrsens
