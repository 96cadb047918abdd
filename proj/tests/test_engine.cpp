#include <cmath>
#include <vector>

#include "doctest.h"

#include "corrsens/engine.hpp"
#include "corrsens/oracle.hpp"
#include "corrsens/rng.hpp"
#include "corrsens/stats.hpp"

using namespace corrsens;

namespace {

const std::vector<Point2> kFixture = {{0, 0}, {1, 1}, {2, 0}};
constexpr double kInvSqrt11 = 0.30151134457776362;

MomentSummary summary_of(const std::vector<Point2>& pts) {
    return summarize(from_dataset(pts));
}

std::vector<Point2> random_points(PortableRng& rng, std::size_t n) {
    std::vector<Point2> pts(n);
    for (auto& p : pts) {
        p.x = rng.uniform(-10.0, 10.0);
        p.y = rng.uniform(-10.0, 10.0);
    }
    return pts;
}

FeasibleRegion random_region(PortableRng& rng) {
    return {rng.uniform(-14.0, -2.0), rng.uniform(2.0, 14.0),
            rng.uniform(-14.0, -2.0), rng.uniform(2.0, 14.0)};
}

}  // namespace

TEST_CASE("augmented_pcc fixtures") {
    const MomentSummary s = summary_of(kFixture);
    SUBCASE("the mean point leaves the correlation unchanged") {
        CHECK(augmented_pcc(s, {s.mean_x, s.mean_y}) ==
              doctest::Approx(pcc(s)).epsilon(1e-15));
    }
    SUBCASE("corner values are +-1/sqrt(11)") {
        CHECK(augmented_pcc(s, {2, 1}) ==
              doctest::Approx(kInvSqrt11).epsilon(1e-13));
        CHECK(augmented_pcc(s, {0, 1}) ==
              doctest::Approx(-kInvSqrt11).epsilon(1e-13));
    }
    SUBCASE("rejects non-finite points") {
        CHECK_THROWS_AS(
            static_cast<void>(augmented_pcc(s, {std::nan(""), 0.0})),
            InputError);
    }
}

TEST_CASE("augmented_pcc equals the two-pass PCC of the grown dataset") {
    PortableRng rng(606);
    for (int round = 0; round < 200; ++round) {
        const auto pts = random_points(rng, 3 + round % 40);
        const MomentSummary s = summary_of(pts);
        const Point2 q{rng.uniform(-20, 20), rng.uniform(-20, 20)};
        std::vector<Point2> grown = pts;
        grown.push_back(q);
        const double direct = pcc_two_pass(grown);
        const double closed = augmented_pcc(s, q);
        CHECK(std::fabs(direct - closed) <=
              1e-12 * std::max(1.0, std::fabs(direct)));
    }
}

TEST_CASE("mean-point neutrality over 500 random summaries") {
    PortableRng rng(17);
    double worst = 0.0;
    for (int round = 0; round < 500; ++round) {
        const auto pts = random_points(rng, 3 + round % 60);
        const MomentSummary s = summary_of(pts);
        const double r = pcc(s);
        worst = std::max(worst,
                         std::fabs(augmented_pcc(s, {s.mean_x, s.mean_y}) - r));
    }
    CHECK(worst <= 1e-15);
}

TEST_CASE("primary sensitivities on the worked fixture") {
    const MomentSummary s = summary_of(kFixture);
    const SensitivityReport rep = primary_sensitivities(s, {0, 2, 0, 1});
    CHECK(rep.r_current == doctest::Approx(0.0));
    CHECK(rep.p_current == 1.0);
    CHECK(std::fabs(rep.delta_r - kInvSqrt11) <= 1e-12);
    CHECK(rep.witness_r.label == CandidateLabel::CornerLU);
    CHECK(rep.witness_r.point.x == 0.0);
    CHECK(rep.witness_r.point.y == 1.0);
    CHECK(rep.straddle);
    // p(1/sqrt(11), m=4) = 0.69848865542223637, so delta_p = 1/sqrt(11)
    CHECK(std::fabs(rep.delta_p - kInvSqrt11) <= 1e-12);
    CHECK(!rep.stationary_p_witness);  // 1 - p_current = 0 never dominates
    CHECK(rep.candidates.size() == 4);
}

TEST_CASE("degenerate region at the mean changes nothing") {
    const MomentSummary s = summary_of(kFixture);
    const FeasibleRegion f{s.mean_x, s.mean_x, s.mean_y, s.mean_y};
    const SensitivityReport rep = primary_sensitivities(s, f);
    CHECK(rep.delta_r == 0.0);
    CHECK(rep.delta_p == 0.0);
    CHECK(rep.straddle);  // the only candidate keeps r at exactly 0
}

TEST_CASE("reduced mode for two-point datasets") {
    const MomentSummary s = summary_of({{0, 0}, {1, 2}});
    CHECK_THROWS_AS(
        static_cast<void>(primary_sensitivities(s, {0, 1, 0, 2})), InputError);
    const SensitivityReport rep =
        primary_sensitivities(s, {0, 1, 0, 2}, /*allow_reduced=*/true);
    CHECK(!rep.p_defined);
    CHECK(rep.r_current == 1.0);
    CHECK(rep.delta_r >= 0.0);
    CHECK(std::isnan(rep.p_current));
}

TEST_CASE("witness tightness: re-evaluating the witness reproduces r_aug") {
    PortableRng rng(909);
    for (int round = 0; round < 100; ++round) {
        const auto pts = random_points(rng, 8 + round % 30);
        const MomentSummary s = summary_of(pts);
        const SensitivityReport rep =
            primary_sensitivities(s, random_region(rng));
        CHECK(augmented_pcc(s, rep.witness_r.point) == rep.witness_r.r_aug);
        // the witness is the first candidate within the 1e-12 tie window
        const double attained = std::fabs(rep.r_current - rep.witness_r.r_aug);
        CHECK(attained <= rep.delta_r);
        CHECK(attained >= rep.delta_r - 1e-12);
    }
}

TEST_CASE("soundness: no grid point beats the reported bounds") {
    PortableRng rng(112233);
    const int lattice = 101;
    int dr_violations = 0;
    int dp_violations = 0;
    for (int round = 0; round < 500; ++round) {
        const auto pts = random_points(rng, 5 + round % 25);
        const MomentSummary s = summary_of(pts);
        const FeasibleRegion f = random_region(rng);
        const SensitivityReport rep = primary_sensitivities(s, f);
        for (int i = 0; i < lattice; ++i) {
            for (int j = 0; j < lattice; ++j) {
                const Point2 g{f.lx + f.span_x() * i / (lattice - 1.0),
                               f.ly + f.span_y() * j / (lattice - 1.0)};
                const double r_g = augmented_pcc(s, g);
                if (std::fabs(rep.r_current - r_g) > rep.delta_r + 1e-9) {
                    ++dr_violations;
                }
                const double p_g = p_value(r_g, s.count + 1).p;
                if (std::fabs(rep.p_current - p_g) > rep.delta_p + 1e-9) {
                    ++dp_violations;
                }
            }
        }
    }
    CHECK(dr_violations == 0);
    CHECK(dp_violations == 0);
}

TEST_CASE("affine equivariance of the report") {
    PortableRng rng(321);
    for (int round = 0; round < 500; ++round) {
        const auto pts = random_points(rng, 6 + round % 20);
        const FeasibleRegion f = random_region(rng);
        const double a = rng.uniform(0.1, 5.0);
        const double b = rng.uniform(-40.0, 40.0);
        const double c = rng.uniform(0.1, 5.0);
        const double d = rng.uniform(-40.0, 40.0);

        std::vector<Point2> mapped = pts;
        for (auto& p : mapped) {
            p = {a * p.x + b, c * p.y + d};
        }
        const FeasibleRegion fm{a * f.lx + b, a * f.ux + b, c * f.ly + d,
                                c * f.uy + d};

        const SensitivityReport r1 =
            primary_sensitivities(summary_of(pts), f);
        const SensitivityReport r2 =
            primary_sensitivities(summary_of(mapped), fm);

        CHECK(std::fabs(r1.r_current - r2.r_current) <= 1e-9);
        CHECK(std::fabs(r1.delta_r - r2.delta_r) <= 1e-9);
        CHECK(std::fabs(r1.delta_p - r2.delta_p) <= 1e-9);
        REQUIRE(r1.candidates.size() == r2.candidates.size());
        for (std::size_t k = 0; k < r1.candidates.size(); ++k) {
            CHECK(std::fabs(r1.candidates[k].r_aug - r2.candidates[k].r_aug) <=
                  1e-9);
        }
        // the r witness maps under the same transform
        const double scale_x = std::max(1.0, std::fabs(a * f.ux + b));
        const double scale_y = std::max(1.0, std::fabs(c * f.uy + d));
        CHECK(std::fabs(a * r1.witness_r.point.x + b - r2.witness_r.point.x) <=
              1e-9 * scale_x);
        CHECK(std::fabs(c * r1.witness_r.point.y + d - r2.witness_r.point.y) <=
              1e-9 * scale_y);
    }
}

TEST_CASE("a regression-line crossing can beat every corner") {
    // near-collinear data with a thin region straddling the y-on-x line far
    // from the cloud: reinforcing the correlation at the line/edge crossing
    // is the worst case, not any corner
    const std::vector<Point2> pts = {{0.0, 0.05}, {0.25, 0.2}, {0.5, 0.55},
                                     {0.75, 0.7}, {1.0, 1.02}};
    const MomentSummary s = summary_of(pts);
    const BlueLines lines = blue_lines(s);
    const double y_mid = lines.alpha_x + lines.beta_x * 5.0;
    const FeasibleRegion f{4.0, 6.0, y_mid - 0.4, y_mid + 0.4};
    const SensitivityReport rep = primary_sensitivities(s, f);
    CHECK(rep.witness_r.label == CandidateLabel::IxUpper);
    // fine grid confirms the closed form from below
    const OracleReport orc = grid_sensitivities(pts, f, 1001);
    CHECK(orc.grid_delta_r <= rep.delta_r + 1e-9);
    CHECK(rep.delta_r - orc.grid_delta_r <= 1e-6);
}

TEST_CASE("straddle consistency") {
    PortableRng rng(654);
    int straddles_seen = 0;
    for (int round = 0; round < 300; ++round) {
        const auto pts = random_points(rng, 5 + round % 15);
        const MomentSummary s = summary_of(pts);
        const SensitivityReport rep =
            primary_sensitivities(s, random_region(rng));
        double r_max = -2.0;
        double r_min = 2.0;
        double cand_dp = 0.0;
        for (const auto& cdt : rep.candidates) {
            r_max = std::max(r_max, cdt.r_aug);
            r_min = std::min(r_min, cdt.r_aug);
            cand_dp = std::max(cand_dp, std::fabs(rep.p_current - cdt.p_aug));
        }
        CHECK(rep.straddle == (r_max >= 0.0 && 0.0 >= r_min));
        if (rep.straddle) {
            ++straddles_seen;
            CHECK(rep.delta_p ==
                  doctest::Approx(std::max(cand_dp, 1.0 - rep.p_current))
                      .epsilon(1e-15));
            CHECK(rep.delta_p >= 1.0 - rep.p_current);
        }
    }
    CHECK(straddles_seen > 0);  // the sweep must actually exercise the branch
}

TEST_CASE("stream_step") {
    const OnlineMoments state = from_dataset(kFixture);
    const FeasibleRegion f{0, 2, 0, 1};
    SUBCASE("absorbing the mean changes nothing") {
        const auto [rec, next] =
            stream_step(state, {state.mean_x, state.mean_y}, f);
        CHECK(rec.index == 3);
        CHECK(rec.observed_delta_r == 0.0);
        CHECK(rec.within_prediction);
        CHECK(next.count == 4);
        CHECK(state.count == 3);  // input state untouched
    }
    SUBCASE("absorbing the witness attains the bound") {
        const SensitivityReport rep =
            primary_sensitivities(summarize(state), f);
        const auto [rec, next] = stream_step(state, rep.witness_r.point, f);
        CHECK(std::fabs(rec.observed_delta_r - rep.delta_r) <= 1e-12);
        CHECK(rec.within_prediction);
        CHECK(rec.point_in_region);
    }
    SUBCASE("points outside the region are flagged") {
        const auto [rec, next] = stream_step(state, {5.0, 5.0}, f);
        CHECK(!rec.point_in_region);
    }
    SUBCASE("a long stream stays within predictions for in-region points") {
        PortableRng rng(42);
        OnlineMoments acc = state;
        for (int i = 0; i < 200; ++i) {
            const Point2 p{rng.uniform(0.0, 2.0), rng.uniform(0.0, 1.0)};
            const auto [rec, next] = stream_step(acc, p, f);
            CHECK(rec.point_in_region);
            CHECK(rec.within_prediction);
            acc = next;
        }
    }
}
