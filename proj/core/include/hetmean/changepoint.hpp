#pragma once

#include "hetmean/blocks.hpp"
#include "hetmean/mean_test.hpp"
#include "hetmean/time_series.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hetmean {

// Break convention: a break t (1 <= t < n) splits a series after its t-th
// observation, i.e. into the 0-based ranges [0, t) and [t, n). The same number
// is the 1-based index of the last observation of the left part.

/// One accepted split of the recursive procedure.
struct Split {
    std::size_t segment_begin = 0;  ///< 0-based, inclusive
    std::size_t segment_end = 0;    ///< 0-based, exclusive
    std::size_t break_index = 0;    ///< global break t
    TestOutcome outcome;            ///< the rejecting test on [segment_begin, segment_end)
};

struct ChangePointSet {
    std::vector<std::size_t> break_indices;  ///< strictly increasing
    std::vector<double> segment_means;       ///< break_indices.size() + 1 entries
    std::vector<Split> splits;               ///< in depth-first (pre-order) order
};

/**
 * @brief Position of the dominant mean change.
 *
 * Picks the first pair of adjacent blocks (j, j+1) with the largest gap between
 * block means, then the split t inside those two blocks maximising the gap
 * between the sample means left and right of t. The first and last
 * ceil(exclusion_fraction * 2l) candidate positions are skipped, as is any t
 * that leaves the right part empty. Ties go to the smallest index.
 *
 * Returns the global break t. InputError when no candidate remains,
 * ConfigError when exclusion_fraction is outside [0, 0.5).
 */
[[nodiscard]] std::size_t locate_dominant_change(std::span<const double> x,
                                                 const BlockScheme& scheme,
                                                 double exclusion_fraction);

struct SegmentationOptions {
    std::size_t min_segment = 50;
    double exclusion_fraction = 0.1;
};

/**
 * @brief Recursive binary splitting driven by the mean test.
 *
 * Each segment of at least min_segment observations is tested with its own
 * block schemes and a seed derived from (cfg.seed, segment bounds). On
 * rejection the dominant change is located; if both parts keep at least
 * min_segment observations the break is recorded and both parts are processed,
 * left first. Segments too short for the test, and constant segments, are
 * accepted without a split.
 */
[[nodiscard]] ChangePointSet segment_recursively(const TimeSeries& x, const TestConfig& cfg,
                                                 const SegmentationOptions& opts = {});

/// Step function holding each segment's sample mean. InputError for breaks
/// that are not strictly increasing inside [1, n-1].
[[nodiscard]] std::vector<double> piecewise_mean(std::span<const double> x,
                                                 std::span<const std::size_t> breaks);

/// Polynomial mean function fitted by least squares on the basis (i/n)^d, i = 1..n.
struct TrendFit {
    std::size_t degree = 0;
    std::vector<double> coefficients;  ///< constant term first
    std::vector<double> fitted;
    std::vector<double> residuals;
    std::optional<TestOutcome> residual_test;
    std::string residual_test_error;   ///< why residual_test is absent, if it is
};

/**
 * @brief Least-squares polynomial trend and the mean test on its residuals.
 *
 * Solved with a column-pivoted Householder QR. Requires degree <= 10 and
 * degree + 1 <= n (InputError). A residual series on which the test is
 * undefined (too short, or degenerate such as an exact fit) leaves
 * residual_test empty and records the reason.
 */
[[nodiscard]] TrendFit fit_polynomial_trend(std::span<const double> x, std::size_t degree,
                                            const TestConfig& cfg = {});

/// Lag differences z_i = x_{i+lag} - x_i, i = 1..n-lag. Labels follow the later
/// observation. ConfigError for lag 0, InputError when n <= lag.
[[nodiscard]] TimeSeries seasonal_difference(const TimeSeries& x, std::size_t lag);

}  // namespace hetmean
