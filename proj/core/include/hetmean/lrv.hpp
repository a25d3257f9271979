#pragma once

#include "hetmean/blocks.hpp"

#include <cstddef>
#include <span>

namespace hetmean {

/**
 * @brief Short subsampling blocks used for long run variance estimation.
 *
 * sub_length = floor(n^q), sub_count = floor(n / sub_length). c0 is the radius,
 * measured in subsampling blocks, of the window used to centre each block.
 */
struct SubsamplingScheme {
    std::size_t n = 0;
    double q = 0.0;
    std::size_t sub_length = 0;
    std::size_t sub_count = 0;
    double c0 = 0.0;
};

/// Throws ConfigError for q outside (0,1) or c0 < 1, InputError when the series
/// yields fewer than two subsampling blocks or c0 >= sub_count.
[[nodiscard]] SubsamplingScheme make_subsampling_scheme(std::size_t n, double q, double c0);

/**
 * @brief Mean-robust subsampling estimate of the long run standard deviation,
 * scaled by the average of the variance function.
 *
 * Block j's sum is centred by sub_length times the mean of the observations
 * within c0 * sub_length positions to either side of the block. Positions
 * outside 1..n are absent and the mean is taken over what is available, so
 * edge blocks are centred by a one-sided window. For fractional c0 the
 * outermost observation on each side enters with its fractional weight.
 *
 * Returns sqrt(2c0/(1+2c0)) * sqrt(pi/2) * (1/b) * sum_j |S_j| / sqrt(sub_length).
 */
[[nodiscard]] double kappa_tilde_x(std::span<const double> x, const SubsamplingScheme& sub);

/// kappa_tilde_x divided by the average local block standard deviation of the
/// main scheme. Throws DegenerateDataError when every block is constant.
[[nodiscard]] double kappa_hat(std::span<const double> x, const SubsamplingScheme& sub,
                               const BlockScheme& scheme);

/// kappa_hat when kappa_tilde_x is already known.
[[nodiscard]] double kappa_hat_from(double kappa_tilde, std::span<const double> x,
                                    const BlockScheme& scheme);

}  // namespace hetmean
