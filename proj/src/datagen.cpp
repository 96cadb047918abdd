#include "corrsens/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "corrsens/oracle.hpp"
#include "corrsens/rng.hpp"

namespace corrsens {

namespace {

constexpr DistKind kAllKinds[] = {DistKind::Uniform, DistKind::Gaussian,
                                  DistKind::Dirichlet, DistKind::Contaminated};

std::vector<Point2> sample_gaussian(PortableRng& rng, std::uint32_t size) {
    // covariance A^T A; redraw A while it is numerically singular
    double a00 = 0.0;
    double a01 = 0.0;
    double a10 = 0.0;
    double a11 = 0.0;
    bool ok = false;
    for (int attempt = 0; attempt < 100; ++attempt) {
        a00 = rng.uniform01();
        a01 = rng.uniform01();
        a10 = rng.uniform01();
        a11 = rng.uniform01();
        const double det = a00 * a11 - a01 * a10;
        if (det * det >= 1e-12) {
            ok = true;
            break;
        }
    }
    if (!ok) {
        throw InputError(
            "gaussian sampling: covariance stayed near-singular after 100 "
            "draws of A");
    }
    std::vector<Point2> pts;
    pts.reserve(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        const auto [z1, z2] = rng.normal_pair();
        // (x, y) = A^T z has covariance A^T A
        pts.push_back({a00 * z1 + a10 * z2, a01 * z1 + a11 * z2});
    }
    return pts;
}

std::vector<Point2> sample_dirichlet(PortableRng& rng, std::uint32_t size) {
    double alpha[3];
    for (double& a : alpha) {
        a = rng.uniform(0.0, 10.0);
        while (a == 0.0) a = rng.uniform(0.0, 10.0);
    }
    std::vector<Point2> pts;
    pts.reserve(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        double g[3];
        double sum = 0.0;
        int attempts = 0;
        do {
            sum = 0.0;
            for (int k = 0; k < 3; ++k) {
                g[k] = rng.gamma(alpha[k]);
                sum += g[k];
            }
            if (++attempts > 100) {
                throw InternalError("dirichlet sampling: gamma draws underflowed");
            }
        } while (!(sum > 0.0) || !std::isfinite(sum));
        pts.push_back({g[0] / sum, g[1] / sum});
    }
    return pts;
}

std::vector<Point2> sample_contaminated(PortableRng& rng, std::uint32_t size) {
    std::vector<Point2> pts = sample_gaussian(rng, size);
    const std::uint32_t replaced = size / 10;
    if (replaced == 0) return pts;
    // partial Fisher-Yates gives `replaced` distinct indices
    std::vector<std::uint32_t> order(size);
    std::iota(order.begin(), order.end(), 0U);
    for (std::uint32_t i = 0; i < replaced; ++i) {
        const std::uint64_t j = i + rng.below(size - i);
        std::swap(order[i], order[j]);
    }
    for (std::uint32_t i = 0; i < replaced; ++i) {
        pts[order[i]] = {rng.uniform(-30.0, 30.0), rng.uniform(-30.0, 30.0)};
    }
    return pts;
}

}  // namespace

std::string_view to_string(DistKind kind) noexcept {
    switch (kind) {
        case DistKind::Uniform: return "uniform";
        case DistKind::Gaussian: return "gaussian";
        case DistKind::Dirichlet: return "dirichlet";
        case DistKind::Contaminated: return "contaminated";
    }
    return "unknown";
}

DistKind dist_kind_from_string(std::string_view name) {
    for (DistKind kind : kAllKinds) {
        if (name == to_string(kind)) return kind;
    }
    throw InputError("unknown distribution kind: " + std::string(name));
}

std::vector<Point2> sample(const DistributionSpec& spec) {
    if (spec.size == 0) {
        throw InputError("sample size must be positive");
    }
    PortableRng rng(spec.seed);
    switch (spec.kind) {
        case DistKind::Uniform: {
            std::vector<Point2> pts;
            pts.reserve(spec.size);
            for (std::uint32_t i = 0; i < spec.size; ++i) {
                const double x = rng.uniform(-10.0, 10.0);
                const double y = rng.uniform(-10.0, 10.0);
                pts.push_back({x, y});
            }
            return pts;
        }
        case DistKind::Gaussian:
            return sample_gaussian(rng, spec.size);
        case DistKind::Dirichlet:
            return sample_dirichlet(rng, spec.size);
        case DistKind::Contaminated:
            return sample_contaminated(rng, spec.size);
    }
    throw InputError("unknown distribution kind");
}

FeasibleRegion bounding_box(std::span<const Point2> points) {
    if (points.empty()) {
        throw InputError("bounding box of an empty dataset");
    }
    FeasibleRegion f{points[0].x, points[0].x, points[0].y, points[0].y};
    for (const Point2& p : points) {
        if (!p.finite()) {
            throw InputError("non-finite coordinate");
        }
        f.lx = std::min(f.lx, p.x);
        f.ux = std::max(f.ux, p.x);
        f.ly = std::min(f.ly, p.y);
        f.uy = std::max(f.uy, p.y);
    }
    return f;
}

BenchReport run_benchmark(std::uint32_t trials,
                          std::span<const std::uint32_t> sizes,
                          std::uint32_t grid_resolution, double rel_tol,
                          std::uint64_t seed) {
    if (trials == 0) {
        throw InputError("benchmark requires at least one trial");
    }
    if (sizes.empty()) {
        throw InputError("benchmark requires at least one size");
    }
    for (std::uint32_t n : sizes) {
        if (n < 3) {
            throw InputError("benchmark sizes must be >= 3");
        }
    }
    if (!(rel_tol > 0.0)) {
        throw InputError("relative tolerance must be positive");
    }

    BenchReport rep;
    rep.trials_per_cell = trials;
    rep.grid_resolution = grid_resolution;
    rep.rel_tol = rel_tol;
    rep.seed = seed;

    for (DistKind kind : kAllKinds) {
        for (std::uint32_t size : sizes) {
            BenchCell cell;
            cell.kind = kind;
            cell.size = size;
            cell.trials = trials;
            for (std::uint32_t trial = 0; trial < trials; ++trial) {
                std::uint64_t trial_seed = derive_seed(
                    seed, static_cast<std::uint64_t>(kind), size, trial);
                OracleReport oracle;
                for (std::uint32_t attempt = 0;; ++attempt) {
                    if (attempt > 100) {
                        throw InternalError(
                            "benchmark trial kept sampling degenerate data");
                    }
                    const std::vector<Point2> pts =
                        sample({kind, size, trial_seed});
                    try {
                        oracle = grid_sensitivities(pts, bounding_box(pts),
                                                    grid_resolution);
                        break;
                    } catch (const DegenerateVarianceError&) {
                        trial_seed = derive_seed(trial_seed, 1, attempt);
                        ++cell.resamples;
                    }
                }
                const double gap = std::fabs(oracle.engine_delta_r -
                                             oracle.grid_delta_r) /
                                   std::max(std::fabs(oracle.engine_delta_r),
                                            1e-30);
                if (gap <= rel_tol) {
                    ++cell.agree_count;
                }
                cell.max_rel_gap = std::max(cell.max_rel_gap, gap);
            }
            cell.agreement_rate = static_cast<double>(cell.agree_count) /
                                  static_cast<double>(cell.trials);
            rep.total_trials += cell.trials;
            rep.total_agree += cell.agree_count;
            rep.max_rel_gap = std::max(rep.max_rel_gap, cell.max_rel_gap);
            rep.total_resamples += cell.resamples;
            rep.cells.push_back(cell);
        }
    }
    rep.overall_agreement = static_cast<double>(rep.total_agree) /
                            static_cast<double>(rep.total_trials);
    return rep;
}

}  // namespace corrsens
