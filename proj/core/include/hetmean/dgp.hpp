#pragma once

#include "hetmean/time_series.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hetmean {

enum class DGPKind { iid_normal, iid_exp, ar1, arma22, garch11, nonlinear_ar1 };

/**
 * @brief Stationary noise process Y_i with mean zero, standardised to long run
 * variance one.
 *
 * All recursions use standard normal innovations:
 *   ar1:           Y_i = a Y_{i-1} + e_i
 *   arma22:        Y_i = a1 Y_{i-1} + a2 Y_{i-2} + e_i + b1 e_{i-1} + b2 e_{i-2}
 *   garch11:       Y_i = s_i e_i,  s_i^2 = w + g Y_{i-1}^2 + h s_{i-1}^2
 *   nonlinear_ar1: Y_i = lambda Y_{i-1} cos(Y_{i-1}) + e_i
 * iid_exp draws Exp(1) - 1.
 */
struct DGPSpec {
    DGPKind kind = DGPKind::iid_normal;
    double ar = 0.4;                         ///< ar1 coefficient
    double arma_ar1 = 0.8, arma_ar2 = -0.4;  ///< arma22 AR part
    double arma_ma1 = 0.5, arma_ma2 = 0.34;  ///< arma22 MA part
    double garch_omega = 0.1, garch_alpha = 0.1, garch_beta = 0.8;
    double nonlinear_lambda = 0.5;
    std::size_t burn_in = 1000;

    [[nodiscard]] static DGPSpec normal();
    [[nodiscard]] static DGPSpec exponential();
    [[nodiscard]] static DGPSpec ar1_process(double a);
    [[nodiscard]] static DGPSpec arma22_process();
    [[nodiscard]] static DGPSpec garch11_process();
    [[nodiscard]] static DGPSpec nonlinear_ar1_process(double lambda = 0.5);

    /// ConfigError on non-stationary parameters.
    void validate() const;
    /// Short display name, e.g. "AR(1), 0.7".
    [[nodiscard]] std::string name() const;
};

/// Parses "normal", "exp", "ar1", "arma22", "garch11", "nonlinear_ar1".
[[nodiscard]] DGPKind parse_dgp_kind(std::string_view name);
[[nodiscard]] std::string_view to_string(DGPKind kind) noexcept;

/**
 * @brief Long run variance of the unstandardised process.
 *
 * iid: 1; ar1: 1/(1-a)^2; arma22: ((1+b1+b2)/(1-a1-a2))^2; garch11: w/(1-g-h).
 * nonlinear_ar1 has no closed form: the autocovariance sum up to lag 60 is
 * estimated once per lambda from a fixed-seed path of 4e6 observations and cached.
 */
[[nodiscard]] double lrv_theoretical(const DGPSpec& spec);

/// n standardised noise values; burn_in initial values are discarded.
[[nodiscard]] std::vector<double> generate_noise(const DGPSpec& spec, std::size_t n,
                                                 std::uint64_t seed);

// -- mean and variance profiles -------------------------------------------

/// H: constant zero mean. A1..A5 are local alternatives with magnitude
/// 0.3 sqrt(1000/n) (A2: 0.15 sqrt(1000/n)); A1p..A5p are the fixed versions with
/// sqrt(1000/n) replaced by sqrt(2).
enum class MeanKind { H, A1, A2, A3, A4, A5, A1p, A2p, A3p, A4p, A5p };
enum class VarianceKind { constant, s1, s2, s3 };

[[nodiscard]] MeanKind parse_mean_kind(std::string_view name);
[[nodiscard]] std::string_view to_string(MeanKind kind) noexcept;
[[nodiscard]] VarianceKind parse_variance_kind(std::string_view name);
[[nodiscard]] std::string_view to_string(VarianceKind kind) noexcept;

/// Magnitude used when none is given explicitly.
[[nodiscard]] double default_theta_mu(MeanKind kind, std::size_t n);
/// 0.3 sqrt(1000/n): variance changes of the same size as the local mean changes.
[[nodiscard]] double default_theta_sigma(std::size_t n);

/**
 * @brief mu(i/n), i = 1..n.
 *
 *   A1: theta x          A2: theta sin(4 pi x)       A3: theta 1{1/2 <= x}
 *   A4: theta 1{1/3 <= x < 2/3}    A5: theta (1{1/5 <= x < 2/5} + 1{3/5 <= x < 4/5})
 */
[[nodiscard]] std::vector<double> mean_profile(MeanKind kind, std::optional<double> theta,
                                               std::size_t n);

/**
 * @brief sigma(i/n), i = 1..n, each integrating to one over [0, 1].
 *
 *   s1: (1 - theta/2) + theta x     s2: 1 + theta/2 sin(4 pi x)
 *   s3: 1 - theta/2 for x < 1/2, 1 + theta/2 otherwise
 * ConfigError when |theta| >= 2 (the profile would not stay positive).
 */
[[nodiscard]] std::vector<double> variance_profile(VarianceKind kind, double theta, std::size_t n);

/// Noise process combined with mean and variance profiles.
struct ScenarioSpec {
    DGPSpec dgp;
    MeanKind mean = MeanKind::H;
    VarianceKind variance = VarianceKind::constant;
    std::optional<double> theta_mu;     ///< default_theta_mu when empty
    std::optional<double> theta_sigma;  ///< default_theta_sigma when empty
    std::size_t n = 500;

    [[nodiscard]] double resolved_theta_mu() const;
    [[nodiscard]] double resolved_theta_sigma() const;
    [[nodiscard]] std::string label() const;
};

/// X_i = mu(i/n) + sigma(i/n) Y_i with Y from generate_noise(dgp, n, seed).
[[nodiscard]] TimeSeries synthesize(const ScenarioSpec& scn, std::uint64_t seed);
/// Same composition with caller-supplied noise (length n).
[[nodiscard]] TimeSeries synthesize_with_noise(const ScenarioSpec& scn,
                                               std::span<const double> noise);

}  // namespace hetmean
