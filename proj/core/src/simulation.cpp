#include "hetmean/simulation.hpp"

#include "hetmean/errors.hpp"
#include "hetmean/lrv.hpp"
#include "hetmean/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace hetmean {

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        const std::lock_guard lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                        next = count;
                    }
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

ReplicationResults simulate_statistics(const ScenarioSpec& scn, const TestConfig& cfg,
                                       std::size_t replications, std::uint64_t master_seed,
                                       std::size_t scenario_id, unsigned threads) {
    cfg.validate();
    scn.dgp.validate();
    if (replications == 0) {
        throw ConfigError("replications must be >= 1");
    }
    // Surface configuration problems (e.g. n too small) once, before the loop.
    (void)make_block_scheme(scn.n, cfg.s);
    (void)make_subsampling_scheme(scn.n, cfg.q, cfg.c0);
    (void)variance_profile(scn.variance, scn.resolved_theta_sigma(), scn.n);

    ReplicationResults out;
    out.statistics.assign(replications, std::numeric_limits<double>::quiet_NaN());
    out.rejections.assign(replications, 0);
    std::vector<char> failed(replications, 0);

    parallel_for(replications, threads, [&](std::size_t r) {
        const std::uint64_t sub = derive_seed(master_seed, {scenario_id, r});
        const auto series = synthesize(scn, derive_seed(sub, {0}));
        TestConfig rep_cfg = cfg;
        rep_cfg.seed = derive_seed(sub, {1});
        try {
            const auto outcome = test_mean_constancy(series.values(), rep_cfg);
            out.statistics[r] = outcome.statistic;
            out.rejections[r] = outcome.reject ? 1 : 0;
        } catch (const InputError&) {
            failed[r] = 1;
        } catch (const DegenerateDataError&) {
            failed[r] = 1;
        }
    });
    out.failures = static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
    return out;
}

RejectionRate rejection_rate(const ScenarioSpec& scn, const TestConfig& cfg,
                             std::size_t replications, std::uint64_t master_seed,
                             std::size_t scenario_id, unsigned threads) {
    const auto reps = simulate_statistics(scn, cfg, replications, master_seed, scenario_id, threads);
    RejectionRate row;
    row.scenario = scn;
    row.replications = replications;
    row.rejections =
        static_cast<std::size_t>(std::count(reps.rejections.begin(), reps.rejections.end(), 1));
    row.failures = reps.failures;
    row.rate = static_cast<double>(row.rejections) / static_cast<double>(replications);
    return row;
}

std::vector<RejectionRate> rejection_rate_table(std::span<const ScenarioSpec> scenarios,
                                                const TestConfig& cfg, std::size_t replications,
                                                std::uint64_t master_seed, unsigned threads) {
    std::vector<RejectionRate> table;
    table.reserve(scenarios.size());
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        table.push_back(rejection_rate(scenarios[i], cfg, replications, master_seed, i, threads));
    }
    return table;
}

LrvAccuracy lrv_accuracy(const ScenarioSpec& scn, const TestConfig& cfg, std::size_t replications,
                         std::uint64_t master_seed, std::size_t scenario_id, unsigned threads) {
    cfg.validate();
    scn.dgp.validate();
    if (replications == 0) {
        throw ConfigError("replications must be >= 1");
    }
    const auto sub_scheme = make_subsampling_scheme(scn.n, cfg.q, cfg.c0);
    std::vector<double> estimates(replications);
    parallel_for(replications, threads, [&](std::size_t r) {
        const std::uint64_t sub = derive_seed(master_seed, {scenario_id, r});
        const auto series = synthesize(scn, derive_seed(sub, {0}));
        estimates[r] = kappa_tilde_x(series.values(), sub_scheme);
    });
    double err = 0.0;
    double err_sq = 0.0;
    for (double k : estimates) {
        err += k - 1.0;
        err_sq += (k - 1.0) * (k - 1.0);
    }
    const auto m = static_cast<double>(replications);
    return LrvAccuracy{scn, replications, err / m, std::sqrt(err_sq / m)};
}

std::vector<LrvAccuracy> lrv_bias_rmse(std::span<const ScenarioSpec> scenarios,
                                       const TestConfig& cfg, std::size_t replications,
                                       std::uint64_t master_seed, unsigned threads) {
    std::vector<LrvAccuracy> table;
    table.reserve(scenarios.size());
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        table.push_back(lrv_accuracy(scenarios[i], cfg, replications, master_seed, i, threads));
    }
    return table;
}

double size_corrected_power(std::span<const double> stats_under_h,
                            std::span<const double> stats_under_a, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("alpha must lie in (0, 1)");
    }
    std::vector<double> h;
    h.reserve(stats_under_h.size());
    for (double v : stats_under_h) {
        if (!std::isnan(v)) {
            h.push_back(v);
        }
    }
    std::size_t a_count = 0;
    for (double v : stats_under_a) {
        a_count += std::isnan(v) ? 0 : 1;
    }
    if (h.empty() || a_count == 0) {
        throw InputError("size-corrected power needs non-empty samples under both hypotheses");
    }
    std::sort(h.begin(), h.end());
    const auto m = static_cast<double>(h.size());
    auto rank = static_cast<std::size_t>(std::ceil((1.0 - alpha) * m - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, h.size());
    const double critical = h[rank - 1];
    std::size_t above = 0;
    for (double v : stats_under_a) {
        above += (!std::isnan(v) && v > critical) ? 1 : 0;
    }
    return static_cast<double>(above) / static_cast<double>(a_count);
}

}  // namespace hetmean
