#include "corrsens/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "corrsens/engine.hpp"
#include "corrsens/stats.hpp"

namespace corrsens {

namespace {

double relative_gap(double engine, double grid) {
    return std::fabs(engine - grid) / std::max(std::fabs(engine), 1e-30);
}

double check_rel_err(double analytic, double numeric) {
    return std::fabs(analytic - numeric) /
           std::max({std::fabs(analytic), std::fabs(numeric), 1.0});
}

}  // namespace

double pcc_two_pass(std::span<const Point2> points) {
    const std::size_t n = points.size();
    if (n < 2) {
        throw InputError("insufficient data: at least 2 points required");
    }
    double sum_x = 0.0;
    double sum_y = 0.0;
    for (const Point2& p : points) {
        if (!p.finite()) {
            throw InputError("non-finite coordinate");
        }
        sum_x += p.x;
        sum_y += p.y;
    }
    const double mean_x = sum_x / static_cast<double>(n);
    const double mean_y = sum_y / static_cast<double>(n);
    double dxx = 0.0;
    double dyy = 0.0;
    double dxy = 0.0;
    for (const Point2& p : points) {
        const double dx = p.x - mean_x;
        const double dy = p.y - mean_y;
        dxx += dx * dx;
        dyy += dy * dy;
        dxy += dx * dy;
    }
    if (degenerate_axis(dxx, mean_x, n) || degenerate_axis(dyy, mean_y, n)) {
        throw DegenerateVarianceError();
    }
    return clamp_unit_correlation(dxy / std::sqrt(dxx * dyy));
}

OracleReport grid_sensitivities(std::span<const Point2> points,
                                const FeasibleRegion& f,
                                std::uint32_t resolution,
                                std::span<const Point2> extra) {
    f.require_valid();
    if (resolution < 2) {
        throw InputError("grid resolution must be >= 2");
    }
    if (points.size() < 3) {
        throw InputError("grid oracle requires at least 3 points");
    }

    const std::size_t m = points.size();
    const double r_base = pcc_two_pass(points);
    const double p_base = p_value(r_base, m).p;

    std::vector<Point2> augmented(points.begin(), points.end());
    augmented.push_back(Point2{});

    OracleReport rep;
    rep.grid_resolution = resolution;
    double best_dr = -1.0;
    double best_dp = -1.0;
    double r_max = -2.0;
    double r_min = 2.0;
    // strict > keeps the first point (in evaluation order) attaining a
    // maximum, so the report is independent of any parallel evaluation
    auto visit = [&](Point2 g) {
        augmented.back() = g;
        const double r_g = pcc_two_pass(augmented);
        const double p_g = p_value(r_g, m + 1).p;
        r_max = std::max(r_max, r_g);
        r_min = std::min(r_min, r_g);
        const double dr = std::fabs(r_base - r_g);
        if (dr > best_dr) {
            best_dr = dr;
            rep.grid_witness = g;
        }
        best_dp = std::max(best_dp, std::fabs(p_base - p_g));
    };

    const double step_x = f.span_x() / static_cast<double>(resolution - 1);
    const double step_y = f.span_y() / static_cast<double>(resolution - 1);
    for (std::uint32_t i = 0; i < resolution; ++i) {
        const double x =
            i + 1 == resolution ? f.ux : f.lx + step_x * static_cast<double>(i);
        for (std::uint32_t j = 0; j < resolution; ++j) {
            const double y = j + 1 == resolution
                                 ? f.uy
                                 : f.ly + step_y * static_cast<double>(j);
            visit({x, y});
        }
    }
    for (const Point2& g : extra) {
        visit(g);
    }

    if (r_max >= 0.0 && 0.0 >= r_min) {
        best_dp = std::max(best_dp, 1.0 - p_base);
    }
    rep.grid_delta_r = best_dr;
    rep.grid_delta_p = best_dp;

    const SensitivityReport engine =
        primary_sensitivities(summarize(from_dataset(points)), f);
    rep.engine_delta_r = engine.delta_r;
    rep.engine_delta_p = engine.delta_p;
    rep.agree_within =
        std::max(relative_gap(rep.engine_delta_r, rep.grid_delta_r),
                 relative_gap(rep.engine_delta_p, rep.grid_delta_p));
    return rep;
}

GradientCheckReport gradient_check(const MomentSummary& s, Point2 p,
                                   double h) {
    if (!(h > 0.0)) {
        throw InputError("finite-difference step must be positive");
    }
    if (!p.finite()) {
        throw InputError("non-finite evaluation point");
    }
    const double n1 = static_cast<double>(s.count + 1);
    const double r = pcc(s);
    const double sx = s.sx;
    const double sy = s.sy;
    const double dx = p.x - s.mean_x;
    const double dy = p.y - s.mean_y;
    const double a = n1 * sx * sx + dx * dx;
    const double b = n1 * sy * sy + dy * dy;

    GradientCheckReport rep;
    rep.dr_dx.analytic =
        n1 * sx * (sx * dy - r * sy * dx) / (std::pow(a, 1.5) * std::sqrt(b));
    rep.dr_dy.analytic =
        n1 * sy * (sy * dx - r * sx * dy) / (std::sqrt(a) * std::pow(b, 1.5));
    rep.d2r_dx2.analytic =
        n1 * sx * (2.0 * r * sy * dx * dx - n1 * r * sx * sx * sy - 3.0 * sx * dx * dy) /
        (std::pow(a, 2.5) * std::sqrt(b));
    rep.d2r_dy2.analytic =
        n1 * sy * (2.0 * r * sx * dy * dy - n1 * r * sx * sy * sy - 3.0 * sy * dx * dy) /
        (std::sqrt(a) * std::pow(b, 2.5));
    rep.d2r_dxdy.analytic = n1 * sx * sy * (n1 * sx * sy + r * dx * dy) /
                            (std::pow(a, 1.5) * std::pow(b, 1.5));

    const double hx = h * std::max(1.0, std::fabs(p.x));
    const double hy = h * std::max(1.0, std::fabs(p.y));
    auto value = [&](double x, double y) {
        return augmented_pcc(s, {x, y});
    };
    const double f00 = value(p.x, p.y);
    rep.dr_dx.numeric =
        (value(p.x + hx, p.y) - value(p.x - hx, p.y)) / (2.0 * hx);
    rep.dr_dy.numeric =
        (value(p.x, p.y + hy) - value(p.x, p.y - hy)) / (2.0 * hy);
    rep.d2r_dx2.numeric =
        (value(p.x + hx, p.y) - 2.0 * f00 + value(p.x - hx, p.y)) / (hx * hx);
    rep.d2r_dy2.numeric =
        (value(p.x, p.y + hy) - 2.0 * f00 + value(p.x, p.y - hy)) / (hy * hy);
    rep.d2r_dxdy.numeric =
        (value(p.x + hx, p.y + hy) - value(p.x + hx, p.y - hy) -
         value(p.x - hx, p.y + hy) + value(p.x - hx, p.y - hy)) /
        (4.0 * hx * hy);

    for (PartialCheck* c : {&rep.dr_dx, &rep.dr_dy, &rep.d2r_dx2,
                            &rep.d2r_dy2, &rep.d2r_dxdy}) {
        c->rel_err = check_rel_err(c->analytic, c->numeric);
    }
    return rep;
}

double hessian_det_at_mean(const MomentSummary& s) {
    if (!(s.sx > 0.0) || !(s.sy > 0.0)) {
        throw DegenerateVarianceError();
    }
    const double r = pcc(s);
    const double n1 = static_cast<double>(s.count + 1);
    return (r * r - 1.0) / (n1 * n1 * s.sx * s.sx * s.sy * s.sy);
}

}  // namespace corrsens
