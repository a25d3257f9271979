#include "hetmean/mean_test.hpp"

#include "hetmean/errors.hpp"
#include "hetmean/limit_params.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hetmean {

std::string_view to_string(TestVariant v) noexcept {
    return v == TestVariant::full ? "full" : "simplified";
}

TestVariant parse_variant(std::string_view name) {
    if (name == "full") {
        return TestVariant::full;
    }
    if (name == "simplified") {
        return TestVariant::simplified;
    }
    throw ConfigError("unknown test variant '" + std::string(name) +
                      "' (expected full or simplified)");
}

void TestConfig::validate() const {
    if (!(s > 0.5 && s < 1.0)) {
        throw ConfigError("s must lie in (0.5, 1), got " + std::to_string(s));
    }
    if (!(q > 0.0 && q < s)) {
        throw ConfigError("q must lie in (0, s), got " + std::to_string(q));
    }
    if (!(c0 >= 1.0) || !std::isfinite(c0)) {
        throw ConfigError("c0 must be >= 1, got " + std::to_string(c0));
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
    if (psi_mc_reps == 0) {
        throw ConfigError("psi Monte Carlo replications must be >= 1");
    }
}

TestOutcome test_mean_constancy(const TimeSeries& x, const TestConfig& cfg) {
    return test_mean_constancy(x.values(), cfg);
}

TestOutcome test_mean_constancy(std::span<const double> x, const TestConfig& cfg) {
    cfg.validate();

    TestOutcome out;
    out.variant = cfg.variant;
    out.alpha = cfg.alpha;
    out.seed = cfg.seed;
    out.blocks = make_block_scheme(x.size(), cfg.s);
    out.subsampling = make_subsampling_scheme(x.size(), cfg.q, cfg.c0);

    out.u_value = u_statistic(x, out.blocks);
    out.block_means = local_block_means(x, out.blocks);
    out.block_sds = local_block_variances(x, out.blocks);
    for (double& v : out.block_sds) {
        v = std::sqrt(v);
    }

    out.kappa_tilde = kappa_tilde_x(x, out.subsampling);
    if (!(out.kappa_tilde > 0.0)) {
        throw DegenerateDataError("long run variance estimate is zero (constant series?)");
    }

    const double sqrt_b = std::sqrt(static_cast<double>(out.blocks.block_count));
    const double sqrt_l = std::sqrt(static_cast<double>(out.blocks.block_length));

    if (cfg.variant == TestVariant::full) {
        double sd_sum = 0.0;
        for (double sd : out.block_sds) {
            sd_sum += sd;
        }
        const double mean_sd = sd_sum / static_cast<double>(out.block_sds.size());
        if (!(mean_sd > 0.0)) {
            throw DegenerateDataError("every block is constant; kappa cannot be normalised");
        }
        const double kappa = out.kappa_tilde / mean_sd;
        out.kappa_hat = kappa;
        out.centring = pair_centring_term(out.block_sds);
        const auto psi = psi_hat_sq(out.block_sds, cfg.psi_mc_reps, cfg.seed);
        if (!(psi.value > 0.0)) {
            throw DegenerateDataError("estimated limit variance psi^2 is zero");
        }
        out.psi_sq = psi.value;
        out.psi_mc_reps = psi.mc_reps;
        out.statistic = sqrt_b * (sqrt_l * out.u_value / kappa - out.centring) / std::sqrt(psi.value);
    } else {
        out.centring = 2.0 / std::sqrt(std::numbers::pi);
        out.psi_sq = psi_sq_constant(1.0);
        out.psi_mc_reps = 0;
        out.statistic = sqrt_b * (sqrt_l * out.u_value / out.kappa_tilde - out.centring) /
                        std::sqrt(out.psi_sq);
    }

    out.critical_value = normal_quantile(1.0 - cfg.alpha);
    out.p_value = normal_cdf(-out.statistic);  // 1 - Phi(T) without cancellation
    out.reject = out.p_value < cfg.alpha;
    return out;
}

TestOutcome test_mean_constancy_simplified(std::span<const double> x, const TestConfig& cfg) {
    TestConfig forced = cfg;
    forced.variant = TestVariant::simplified;
    return test_mean_constancy(x, forced);
}

}  // namespace hetmean
