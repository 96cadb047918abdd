#pragma once

#include <cstdint>

#include "corrsens/moments.hpp"
#include "corrsens/types.hpp"

namespace corrsens {

struct TTestResult {
    double t = 0.0;         // +-infinity when |r| = 1
    std::uint64_t df = 0;   // dataset cardinality minus 2
    double p = 1.0;         // two-sided, in [0,1]
};

// Pearson correlation sxy / (sx * sy), clamped to [-1,1]. An excess beyond
// 1e-9 is an invariant violation and raises InternalError.
[[nodiscard]] double pcc(const MomentSummary& s);

// Clamp a nominal correlation onto [-1,1]; excess beyond 1e-9 raises
// InternalError.
[[nodiscard]] double clamp_unit_correlation(double r);

// Regularized incomplete beta I_x(a,b), evaluated with a modified Lentz
// continued fraction (tolerance 1e-15, iteration cap 300). Cap overflow is
// an InternalError, never a silent wrong answer.
[[nodiscard]] double regularized_incomplete_beta(double x, double a, double b);

// CDF of Student's t-distribution via I_x(df/2, 1/2) with x = df/(df + t^2).
[[nodiscard]] double t_cdf(double t, std::uint64_t df);

// Two-sided significance of a correlation r observed on a dataset of
// cardinality m: t = r * sqrt(df / (1 - r^2)), df = m - 2,
// p = 2 * (1 - F_t(|t|, df)). |r| = 1 maps to p = 0 directly.
[[nodiscard]] TTestResult p_value(double r, std::uint64_t m);

}  // namespace corrsens
