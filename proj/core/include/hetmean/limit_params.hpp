#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace hetmean {

/// Standard normal distribution function.
[[nodiscard]] double normal_cdf(double x) noexcept;

/// Inverse of normal_cdf on (0, 1); ConfigError outside that interval.
[[nodiscard]] double normal_quantile(double p);

/**
 * @brief E|a z - b Z'| for fixed z and Z' ~ N(0, 1).
 *
 * Closed form of the folded normal mean with location c = a z and scale b:
 * b sqrt(2/pi) exp(-c^2 / (2 b^2)) + c (2 Phi(c / b) - 1), and |c| when b = 0.
 */
[[nodiscard]] double folded_conditional_mean(double a, double b, double z) noexcept;

/// sqrt(2/pi) / (b(b-1)) * sum_{j != k} sqrt(sigma_j^2 + sigma_k^2).
/// The mean of the scaled statistic under a constant mean.
[[nodiscard]] double pair_centring_term(std::span<const double> sigma_hats);

struct PsiEstimate {
    double value = 0.0;
    std::size_t mc_reps = 0;
    std::uint64_t seed = 0;
};

/**
 * @brief Monte Carlo estimate of the limit variance psi^2 from block standard
 * deviations.
 *
 * For each of mc_reps standard normal draws z and each block j,
 *   A_j(z) = 1/(b-1) sum_{k != j} [ E(|s_j Z - s_k Z'| | Z = z) - E|s_j Z - s_k Z'| ],
 * where the conditional expectation is folded_conditional_mean and the
 * unconditional one is sqrt(s_j^2 + s_k^2) sqrt(2/pi). The result is
 * 4 * mean_j mean_z A_j(z)^2. Only the outer expectation is simulated.
 *
 * Bit-reproducible for fixed (sigma_hats, mc_reps, seed). Throws InputError for
 * b < 2, ConfigError for mc_reps == 0 and DegenerateDataError when every
 * sigma is zero.
 */
[[nodiscard]] PsiEstimate psi_hat_sq(std::span<const double> sigma_hats, std::size_t mc_reps,
                                     std::uint64_t seed);

/// sigma^2 (4/3 + 8/pi (sqrt 3 - 2)): psi^2 for a constant variance function.
[[nodiscard]] double psi_sq_constant(double sigma) noexcept;

}  // namespace hetmean
