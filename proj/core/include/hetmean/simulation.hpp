#pragma once

#include "hetmean/dgp.hpp"
#include "hetmean/mean_test.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hetmean {

// Seeding: replication r of scenario i uses sub = derive_seed(master, {i, r});
// the data come from derive_seed(sub, {0}) and the psi draws from
// derive_seed(sub, {1}). Results never depend on the number of threads.

/// Runs body(i) for i in [0, count) on up to `threads` workers (0: hardware
/// concurrency). body must only write to slots owned by i.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Per-replication test results of one scenario.
struct ReplicationResults {
    std::vector<double> statistics;  ///< NaN where the test was undefined
    std::vector<char> rejections;
    std::size_t failures = 0;        ///< replications that raised InputError/DegenerateDataError
};

[[nodiscard]] ReplicationResults simulate_statistics(const ScenarioSpec& scn, const TestConfig& cfg,
                                                     std::size_t replications,
                                                     std::uint64_t master_seed,
                                                     std::size_t scenario_id = 0,
                                                     unsigned threads = 0);

struct RejectionRate {
    ScenarioSpec scenario;
    std::size_t replications = 0;
    std::size_t rejections = 0;
    std::size_t failures = 0;  ///< counted as non-rejections
    double rate = 0.0;
};

/// Rejection frequency of one scenario with the given id.
[[nodiscard]] RejectionRate rejection_rate(const ScenarioSpec& scn, const TestConfig& cfg,
                                           std::size_t replications, std::uint64_t master_seed,
                                           std::size_t scenario_id = 0, unsigned threads = 0);

/// Empirical rejection frequency per scenario; scenario i gets id i.
[[nodiscard]] std::vector<RejectionRate> rejection_rate_table(std::span<const ScenarioSpec> scenarios,
                                                              const TestConfig& cfg,
                                                              std::size_t replications,
                                                              std::uint64_t master_seed,
                                                              unsigned threads = 0);

struct LrvAccuracy {
    ScenarioSpec scenario;
    std::size_t replications = 0;
    double bias = 0.0;  ///< mean(kappa_tilde) - 1
    double rmse = 0.0;  ///< sqrt(mean((kappa_tilde - 1)^2))
};

/// Bias and RMSE of kappa_tilde for one scenario with the given id.
[[nodiscard]] LrvAccuracy lrv_accuracy(const ScenarioSpec& scn, const TestConfig& cfg,
                                       std::size_t replications, std::uint64_t master_seed,
                                       std::size_t scenario_id = 0, unsigned threads = 0);

/// Accuracy of the subsampling estimator against the true long run standard
/// deviation one (scenarios are expected to use a constant variance profile).
/// Uses cfg.q and cfg.c0.
[[nodiscard]] std::vector<LrvAccuracy> lrv_bias_rmse(std::span<const ScenarioSpec> scenarios,
                                                     const TestConfig& cfg,
                                                     std::size_t replications,
                                                     std::uint64_t master_seed,
                                                     unsigned threads = 0);

/**
 * @brief Power at the empirical null critical value.
 *
 * The critical value is the (1 - alpha) empirical quantile of stats_under_h,
 * i.e. its ceil((1 - alpha) m)-th order statistic; the result is the fraction
 * of stats_under_a strictly above it. NaN entries are dropped first.
 * InputError when either sample is empty, ConfigError for alpha outside (0, 1).
 */
[[nodiscard]] double size_corrected_power(std::span<const double> stats_under_h,
                                          std::span<const double> stats_under_a, double alpha);

}  // namespace hetmean
