#include "hetmean/errors.hpp"
#include "hetmean/simulation.hpp"

#include <doctest.h>

#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace hetmean;

TEST_CASE("results do not depend on the thread count") {
    ScenarioSpec scn;
    scn.dgp = DGPSpec::garch11_process();
    scn.mean = MeanKind::A4;
    scn.variance = VarianceKind::s2;
    scn.n = 300;
    TestConfig cfg;
    cfg.psi_mc_reps = 200;
    const auto one = simulate_statistics(scn, cfg, 40, 123, 2, 1);
    const auto four = simulate_statistics(scn, cfg, 40, 123, 2, 4);
    REQUIRE(one.statistics.size() == 40);
    for (std::size_t r = 0; r < 40; ++r) {
        CHECK(std::bit_cast<std::uint64_t>(one.statistics[r]) ==
              std::bit_cast<std::uint64_t>(four.statistics[r]));
    }
    CHECK(one.rejections == four.rejections);

    const auto other = simulate_statistics(scn, cfg, 40, 124, 2, 1);
    CHECK(other.statistics != one.statistics);
}

TEST_CASE("tables are reproducible") {
    std::vector<ScenarioSpec> scns(2);
    scns[0].n = 200;
    scns[1].n = 200;
    scns[1].mean = MeanKind::A3p;
    TestConfig cfg;
    cfg.psi_mc_reps = 100;
    const auto a = rejection_rate_table(scns, cfg, 30, 5);
    const auto b = rejection_rate_table(scns, cfg, 30, 5, 3);
    REQUIRE(a.size() == 2);
    CHECK(a[0].rejections == b[0].rejections);
    CHECK(a[1].rejections == b[1].rejections);
    CHECK(a[1].rate > a[0].rate);
    CHECK(a[0].rate == static_cast<double>(a[0].rejections) / 30.0);

    const auto l1 = lrv_bias_rmse(scns, cfg, 30, 5);
    const auto l2 = lrv_bias_rmse(scns, cfg, 30, 5, 2);
    CHECK(l1[0].bias == l2[0].bias);
    CHECK(l1[1].rmse == l2[1].rmse);
    CHECK(l1[0].rmse >= std::abs(l1[0].bias));

    CHECK_THROWS_AS((void)rejection_rate_table(scns, cfg, 0, 5), ConfigError);
}

TEST_CASE("size-corrected power") {
    std::vector<double> h(200);
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] = static_cast<double>((i * 37) % 200) / 10.0;
    }
    CHECK(std::abs(size_corrected_power(h, h, 0.05) - 0.05) <= 1.0 / 200.0);
    std::vector<double> above(50, 100.0);
    CHECK(size_corrected_power(h, above, 0.05) == 1.0);
    std::vector<double> below(50, -1.0);
    CHECK(size_corrected_power(h, below, 0.05) == 0.0);
    CHECK_THROWS_AS((void)size_corrected_power({}, above, 0.05), InputError);
    CHECK_THROWS_AS((void)size_corrected_power(h, {}, 0.05), InputError);
    CHECK_THROWS_AS((void)size_corrected_power(h, h, 1.5), ConfigError);
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) {
        CHECK(h.load() == 1);
    }
    CHECK_THROWS_AS(parallel_for(100, 3,
                                 [](std::size_t i) {
                                     if (i == 57) {
                                         throw std::runtime_error("boom");
                                     }
                                 }),
                    std::runtime_error);
}
