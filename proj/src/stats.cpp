#include "corrsens/stats.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace corrsens {

namespace {

constexpr double kCfTolerance = 1e-15;
constexpr int kCfMaxIterations = 300;
constexpr double kLentzTiny = 1e-300;
constexpr double kClampSlack = 1e-9;

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Modified Lentz evaluation of the standard incomplete-beta continued
// fraction; each pass applies one even and one odd term.
double beta_cf(double x, double a, double b) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kLentzTiny) d = kLentzTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kCfMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kLentzTiny) d = kLentzTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kLentzTiny) c = kLentzTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kLentzTiny) d = kLentzTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kLentzTiny) c = kLentzTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kCfTolerance) return h;
    }
    throw InternalError(
        "incomplete beta: continued fraction did not converge within " +
        std::to_string(kCfMaxIterations) + " iterations");
}

}  // namespace

double clamp_unit_correlation(double r) {
    if (std::isnan(r)) {
        throw InternalError("correlation is NaN");
    }
    if (std::fabs(r) <= 1.0) return r;
    if (std::fabs(r) > 1.0 + kClampSlack) {
        throw InternalError("correlation " + std::to_string(r) +
                            " exceeds [-1,1] beyond tolerance");
    }
    return r < 0.0 ? -1.0 : 1.0;
}

double pcc(const MomentSummary& s) {
    if (!(s.sx > 0.0) || !(s.sy > 0.0)) {
        throw DegenerateVarianceError();
    }
    return clamp_unit_correlation(s.sxy / (s.sx * s.sy));
}

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw InputError("incomplete beta requires a > 0 and b > 0");
    }
    if (std::isnan(x)) {
        throw InputError("incomplete beta: x is NaN");
    }
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front =
        std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        // the prefactor underflowing means the tail is below double resolution
        if (front == 0.0) return 0.0;
        return front * beta_cf(x, a, b) / a;
    }
    if (front == 0.0) return 1.0;
    return 1.0 - front * beta_cf(1.0 - x, b, a) / b;
}

double t_cdf(double t, std::uint64_t df) {
    if (df < 1) {
        throw InputError("t_cdf requires df >= 1");
    }
    if (!std::isfinite(t)) {
        throw InputError("t_cdf requires finite t");
    }
    const double v = static_cast<double>(df);
    const double x = v / (v + t * t);
    const double ib = regularized_incomplete_beta(x, 0.5 * v, 0.5);
    return t >= 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
}

TTestResult p_value(double r, std::uint64_t m) {
    if (m < 3) {
        throw InputError("p-value undefined: df < 1");
    }
    if (std::isnan(r) || std::fabs(r) > 1.0 + kClampSlack) {
        throw InputError("correlation outside [-1,1]");
    }
    r = clamp_unit_correlation(r);
    TTestResult out;
    out.df = m - 2;
    if (std::fabs(r) == 1.0) {
        out.t = std::copysign(std::numeric_limits<double>::infinity(), r);
        out.p = 0.0;
        return out;
    }
    const double v = static_cast<double>(out.df);
    out.t = r * std::sqrt(v / (1.0 - r * r));
    // 2*(1 - F(|t|)) = I_x(df/2, 1/2) with x = df/(df + t^2); the direct
    // form keeps tiny tail masses that the subtraction from 1 would cancel
    const double x = v / (v + out.t * out.t);
    out.p = regularized_incomplete_beta(x, 0.5 * v, 0.5);
    out.p = std::min(1.0, std::max(0.0, out.p));
    return out;
}

}  // namespace corrsens
