#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "corrsens/datagen.hpp"
#include "corrsens/oracle.hpp"
#include "corrsens/serialize.hpp"

using namespace corrsens;

TEST_CASE("identical specs give identical samples") {
    for (DistKind kind : {DistKind::Uniform, DistKind::Gaussian,
                          DistKind::Dirichlet, DistKind::Contaminated}) {
        const DistributionSpec spec{kind, 64, 99};
        const auto a = sample(spec);
        const auto b = sample(spec);
        REQUIRE(a.size() == 64);
        REQUIRE(b.size() == 64);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].x == b[i].x);  // bit-exact
            CHECK(a[i].y == b[i].y);
        }
    }
}

TEST_CASE("uniform samples stay in the [-10,10] box") {
    const auto pts = sample({DistKind::Uniform, 500, 7});
    for (const auto& p : pts) {
        CHECK(p.x >= -10.0);
        CHECK(p.x < 10.0);
        CHECK(p.y >= -10.0);
        CHECK(p.y < 10.0);
    }
}

TEST_CASE("dirichlet samples live in the open simplex triangle") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const auto pts = sample({DistKind::Dirichlet, 100, seed});
        for (const auto& p : pts) {
            CHECK(p.x > 0.0);
            CHECK(p.y > 0.0);
            CHECK(p.x + p.y < 1.0);
        }
    }
}

TEST_CASE("contaminated replaces exactly floor(0.1 n) points") {
    const std::uint32_t n = 50;
    const std::uint64_t seed = 1234;
    const auto clean = sample({DistKind::Gaussian, n, seed});
    const auto dirty = sample({DistKind::Contaminated, n, seed});
    REQUIRE(clean.size() == dirty.size());
    // the gaussian prefix of the stream is identical, so the replaced
    // points are exactly the positions that differ
    std::size_t replaced = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (clean[i].x != dirty[i].x || clean[i].y != dirty[i].y) {
            ++replaced;
            CHECK(dirty[i].x >= -30.0);
            CHECK(dirty[i].x <= 30.0);
            CHECK(dirty[i].y >= -30.0);
            CHECK(dirty[i].y <= 30.0);
        }
    }
    CHECK(replaced == n / 10);
}

TEST_CASE("gaussian samples have finite coordinates and varying spread") {
    const auto pts = sample({DistKind::Gaussian, 200, 5});
    for (const auto& p : pts) {
        CHECK(p.finite());
    }
    // the covariance comes from A^T A with A entries in [0,1]
    CHECK_NOTHROW(static_cast<void>(pcc_two_pass(pts)));
}

TEST_CASE("bounding box") {
    const std::vector<Point2> pts = {{0, 0}, {2, 1}};
    const FeasibleRegion f = bounding_box(pts);
    CHECK(f.lx == 0.0);
    CHECK(f.ux == 2.0);
    CHECK(f.ly == 0.0);
    CHECK(f.uy == 1.0);

    const FeasibleRegion single = bounding_box(std::vector<Point2>{{3, 4}});
    CHECK(single.lx == 3.0);
    CHECK(single.ux == 3.0);
    CHECK(single.span_y() == 0.0);

    CHECK_THROWS_AS(static_cast<void>(bounding_box(std::vector<Point2>{})),
                    InputError);

    const auto sample_pts = sample({DistKind::Uniform, 100, 11});
    const FeasibleRegion box = bounding_box(sample_pts);
    for (const auto& p : sample_pts) {
        CHECK(box.contains(p));
    }
}

TEST_CASE("a small benchmark run is deterministic and self-consistent") {
    const std::vector<std::uint32_t> sizes = {10};
    const BenchReport a = run_benchmark(3, sizes, 10, 1e-5, 77);
    const BenchReport b = run_benchmark(3, sizes, 10, 1e-5, 77);
    CHECK(to_json(a).dump() == to_json(b).dump());

    CHECK(a.cells.size() == 4);  // four kinds x one size
    CHECK(a.total_trials == 12);
    for (const auto& cell : a.cells) {
        CHECK(cell.agree_count <= cell.trials);
        CHECK(cell.agreement_rate ==
              doctest::Approx(static_cast<double>(cell.agree_count) /
                              cell.trials));
    }
    CHECK(a.overall_agreement >= 0.0);
    CHECK(a.overall_agreement <= 1.0);
}

TEST_CASE("benchmark rejects bad parameters") {
    const std::vector<std::uint32_t> sizes = {10};
    const std::vector<std::uint32_t> tiny = {2};
    CHECK_THROWS_AS(
        static_cast<void>(run_benchmark(0, sizes, 10, 1e-5, 1)), InputError);
    CHECK_THROWS_AS(
        static_cast<void>(run_benchmark(1, tiny, 10, 1e-5, 1)), InputError);
    CHECK_THROWS_AS(
        static_cast<void>(run_benchmark(1, sizes, 10, 0.0, 1)), InputError);
}
