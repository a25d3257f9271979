#include "hetmean/changepoint.hpp"
#include "hetmean/errors.hpp"
#include "hetmean/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

using namespace hetmean;

namespace {

std::vector<double> step_series(std::size_t n, std::size_t at, double height, double sd,
                                std::uint64_t seed) {
    auto eng = make_engine(seed);
    std::normal_distribution<double> normal(0.0, sd);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = (i >= at ? height : 0.0) + normal(eng);
    }
    return x;
}

}  // namespace

TEST_CASE("dominant change on an exact step") {
    const std::vector<double> x{0, 0, 0, 0, 1, 1, 1, 1};
    CHECK(locate_dominant_change(x, BlockScheme::with_length(8, 2), 0.125) == 4);
}

TEST_CASE("dominant change tie-break and errors") {
    const std::vector<double> flat(12, 3.0);
    const auto sch = BlockScheme::with_length(12, 3);
    // all gaps tie: first block pair, first admissible candidate
    CHECK(locate_dominant_change(flat, sch, 0.0) == 1);
    CHECK(locate_dominant_change(flat, sch, 0.2) == 3);
    CHECK_THROWS_AS((void)locate_dominant_change(flat, sch, 0.5), ConfigError);
    CHECK_THROWS_AS((void)locate_dominant_change(flat, sch, -0.1), ConfigError);
    const std::vector<double> small{0, 0, 1, 1};
    CHECK_THROWS_AS((void)locate_dominant_change(small, BlockScheme::with_length(4, 2), 0.49),
                    InputError);
}

TEST_CASE("dominant change is invariant to affine maps") {
    auto eng = make_engine(51);
    std::uniform_real_distribution<double> shift(-50.0, 50.0);
    std::uniform_real_distribution<double> log_scale(-4.0, 4.0);
    std::uniform_int_distribution<std::size_t> len(100, 1500);
    for (std::uint64_t rep = 0; rep < 200; ++rep) {
        const std::size_t n = len(eng);
        const auto x = step_series(n, n / 3 + rep % 50, 1.0, 0.8, rep);
        const auto sch = make_block_scheme(n, 0.7);
        const std::size_t t = locate_dominant_change(x, sch, 0.1);
        auto y = x;
        const double a = std::exp(log_scale(eng));
        const double d = shift(eng);
        for (double& v : y) {
            v = a * v + d;
        }
        CHECK(locate_dominant_change(y, sch, 0.1) == t);
    }
}

TEST_CASE("segmentation of a clean step") {
    const auto x = step_series(1000, 500, 1.0, 0.2, 3);
    TestConfig cfg;
    cfg.seed = 1;
    const auto cps = segment_recursively(TimeSeries(x), cfg);
    REQUIRE(cps.break_indices.size() == 1);
    CHECK(std::abs(static_cast<double>(cps.break_indices[0]) - 500.0) <= 125.0);
    REQUIRE(cps.segment_means.size() == 2);
    CHECK(cps.segment_means[0] == doctest::Approx(0.0).scale(1.0).epsilon(0.05));
    CHECK(cps.segment_means[1] == doctest::Approx(1.0).epsilon(0.05));
    REQUIRE(cps.splits.size() == 1);
    CHECK(cps.splits[0].outcome.reject);

    const auto again = segment_recursively(TimeSeries(x), cfg);
    CHECK(again.break_indices == cps.break_indices);
    CHECK(again.segment_means == cps.segment_means);
}

TEST_CASE("segmentation of a constant series") {
    const std::vector<double> flat(300, 2.5);
    const auto cps = segment_recursively(TimeSeries(flat), TestConfig{});
    CHECK(cps.break_indices.empty());
    REQUIRE(cps.segment_means.size() == 1);
    CHECK(cps.segment_means[0] == 2.5);
}

TEST_CASE("segmentation respects the minimum segment length") {
    // several level shifts of varying size
    auto eng = make_engine(61);
    std::normal_distribution<double> normal(0.0, 0.3);
    std::vector<double> x(1200);
    const double levels[] = {0.0, 2.0, -1.0, 1.5, 0.5};
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = levels[i * 5 / x.size()] + normal(eng);
    }
    SegmentationOptions opts;
    opts.min_segment = 80;
    TestConfig cfg;
    cfg.seed = 9;
    const auto cps = segment_recursively(TimeSeries(x), cfg, opts);
    CHECK(cps.break_indices.size() >= 2);
    std::size_t prev = 0;
    for (std::size_t b : cps.break_indices) {
        CHECK(b > prev);
        CHECK(b - prev >= opts.min_segment);
        prev = b;
    }
    CHECK(x.size() - prev >= opts.min_segment);
    CHECK(cps.segment_means.size() == cps.break_indices.size() + 1);
    for (const auto& s : cps.splits) {
        CHECK(s.outcome.reject);
    }

    SegmentationOptions tiny;
    tiny.min_segment = 3;
    CHECK_THROWS_AS((void)segment_recursively(TimeSeries(x), cfg, tiny), ConfigError);
}

TEST_CASE("no spurious breaks under the null") {
    TestConfig cfg;
    cfg.psi_mc_reps = 1000;
    int clean = 0;
    const int reps = 200;
    for (int r = 0; r < reps; ++r) {
        const auto x = step_series(2000, 2000, 0.0, 1.0, 900 + static_cast<std::uint64_t>(r));
        cfg.seed = static_cast<std::uint64_t>(r);
        clean += segment_recursively(TimeSeries(x), cfg).break_indices.empty() ? 1 : 0;
    }
    // about one minus the size of the test (0.92 reported)
    CHECK(static_cast<double>(clean) / reps >= 0.86);
}

TEST_CASE("piecewise mean") {
    const std::vector<double> a{0, 0, 2, 2};
    const std::vector<std::size_t> b2{2};
    CHECK(piecewise_mean(a, b2) == std::vector<double>{0, 0, 2, 2});
    const std::vector<double> c{1, 3, 10, 14};
    CHECK(piecewise_mean(c, b2) == std::vector<double>{2, 2, 12, 12});
    CHECK(piecewise_mean(c, {}) == std::vector<double>{7, 7, 7, 7});
    const std::vector<std::size_t> bad{3, 2};
    CHECK_THROWS_AS((void)piecewise_mean(c, bad), InputError);
    const std::vector<std::size_t> edge{4};
    CHECK_THROWS_AS((void)piecewise_mean(c, edge), InputError);

    const auto x = step_series(500, 200, 1.0, 1.0, 4);
    const std::vector<std::size_t> breaks{120, 200, 377};
    const auto fit = piecewise_mean(x, breaks);
    std::size_t begin = 0;
    for (std::size_t k = 0; k <= breaks.size(); ++k) {
        const std::size_t end = k < breaks.size() ? breaks[k] : x.size();
        double resid = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            resid += x[i] - fit[i];
        }
        CHECK(std::abs(resid) <= 1e-10 * static_cast<double>(x.size()));
        begin = end;
    }
}

TEST_CASE("polynomial trend") {
    const std::size_t n = 200;
    std::vector<double> lin(n);
    for (std::size_t i = 0; i < n; ++i) {
        lin[i] = 2.0 + 3.0 * static_cast<double>(i + 1) / static_cast<double>(n);
    }
    const auto f1 = fit_polynomial_trend(lin, 1);
    CHECK(f1.coefficients[0] == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(f1.coefficients[1] == doctest::Approx(3.0).epsilon(1e-8));
    CHECK_FALSE(f1.residual_test.has_value());  // exact fit: residuals are degenerate
    CHECK_FALSE(f1.residual_test_error.empty());

    const auto x = step_series(n, 100, 0.4, 1.0, 5);
    const auto f0 = fit_polynomial_trend(x, 0);
    CHECK(f0.coefficients[0] == doctest::Approx(std::accumulate(x.begin(), x.end(), 0.0) / n));
    CHECK(f0.residual_test.has_value());

    const auto f3 = fit_polynomial_trend(x, 3);
    for (std::size_t d = 0; d <= 3; ++d) {
        double dot = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double basis = std::pow(static_cast<double>(i + 1) / static_cast<double>(n), static_cast<double>(d));
            dot += basis * f3.residuals[i];
            norm += std::abs(basis * x[i]);
        }
        CHECK(std::abs(dot) <= 1e-6 * norm);
    }
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(f3.residuals[i] == doctest::Approx(x[i] - f3.fitted[i]));
    }

    CHECK_THROWS_AS((void)fit_polynomial_trend(x, 11), InputError);
    CHECK_THROWS_AS((void)fit_polynomial_trend(std::vector<double>{1, 2, 3}, 3), InputError);
}

TEST_CASE("cubic residuals of a cubic trend are accepted") {
    const std::size_t n = 362;
    TestConfig cfg;
    cfg.psi_mc_reps = 1000;
    int accepted = 0;
    const int reps = 200;
    for (int r = 0; r < reps; ++r) {
        auto eng = make_engine(3000 + static_cast<std::uint64_t>(r));
        std::normal_distribution<double> normal(0.0, 0.6);
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i + 1) / static_cast<double>(n);
            x[i] = 8.67 + 3.7 * t - 9.2 * t * t + 7.2 * t * t * t + normal(eng);
        }
        cfg.seed = static_cast<std::uint64_t>(r);
        const auto fit = fit_polynomial_trend(x, 3, cfg);
        REQUIRE(fit.residual_test.has_value());
        accepted += fit.residual_test->reject ? 0 : 1;
    }
    CHECK(static_cast<double>(accepted) / reps >= 0.9);
}

TEST_CASE("seasonal difference") {
    const TimeSeries x({1, 2, 3, 4});
    const auto d = seasonal_difference(x, 2);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 2.0);
    CHECK(d[1] == 2.0);

    std::vector<double> monthly(60);
    std::vector<std::string> labels(60);
    for (std::size_t i = 0; i < monthly.size(); ++i) {
        monthly[i] = std::sin(2.0 * 3.141592653589793 * static_cast<double>(i % 12) / 12.0) + 4.0;
        labels[i] = "m" + std::to_string(i + 1);
    }
    const auto z = seasonal_difference(TimeSeries(monthly, labels), 12);
    REQUIRE(z.size() == 48);
    for (std::size_t i = 0; i < z.size(); ++i) {
        CHECK(z[i] == 0.0);
    }
    CHECK(z.label(0) == "m13");

    CHECK_THROWS_AS((void)seasonal_difference(x, 0), ConfigError);
    CHECK_THROWS_AS((void)seasonal_difference(x, 4), InputError);
}
