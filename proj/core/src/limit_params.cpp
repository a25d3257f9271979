#include "hetmean/limit_params.hpp"

#include "hetmean/errors.hpp"
#include "hetmean/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace hetmean {

namespace {

constexpr double kSqrt2OverPi = 0.79788456080286535588;  // sqrt(2/pi)

// Acklam's rational approximation to the normal quantile, |rel err| < 1.2e-9.
double acklam_quantile(double p) {
    constexpr std::array<double, 6> a{-3.969683028665376e+01, 2.209460984245205e+02,
                                      -2.759285104469687e+02, 1.383577518672690e+02,
                                      -3.066479806614716e+01, 2.506628277459239e+00};
    constexpr std::array<double, 5> b{-5.447609879822406e+01, 1.615858368580409e+02,
                                      -1.556989798598866e+02, 6.680131188771972e+01,
                                      -1.328068155288572e+01};
    constexpr std::array<double, 6> c{-7.784894002430293e-03, -3.223964580411365e-01,
                                      -2.400758277161838e+00, -2.549732539343734e+00,
                                      4.374664141464968e+00,  2.938163982698783e+00};
    constexpr std::array<double, 4> d{7.784695709041462e-03, 3.224671290700398e-01,
                                      2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_cdf(double x) noexcept {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw ConfigError("normal quantile requires p in (0, 1), got " + std::to_string(p));
    }
    double x = acklam_quantile(p);
    // One Halley step against the erfc-based cdf brings the error to machine level.
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

double folded_conditional_mean(double a, double b, double z) noexcept {
    const double c = a * z;
    if (b == 0.0) {
        return std::abs(c);
    }
    const double t = c / b;
    // 2 Phi(t) - 1 == erf(t / sqrt 2)
    return b * kSqrt2OverPi * std::exp(-0.5 * t * t) + c * std::erf(t / std::numbers::sqrt2);
}

double pair_centring_term(std::span<const double> sigma_hats) {
    const std::size_t b = sigma_hats.size();
    if (b < 2) {
        throw InputError("centring term needs at least two blocks");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < b; ++j) {
        for (std::size_t k = j + 1; k < b; ++k) {
            sum += std::sqrt(sigma_hats[j] * sigma_hats[j] + sigma_hats[k] * sigma_hats[k]);
        }
    }
    const double bd = static_cast<double>(b);
    return kSqrt2OverPi * 2.0 * sum / (bd * (bd - 1.0));
}

PsiEstimate psi_hat_sq(std::span<const double> sigma_hats, std::size_t mc_reps,
                       std::uint64_t seed) {
    const std::size_t b = sigma_hats.size();
    if (b < 2) {
        throw InputError("psi estimation needs at least two blocks");
    }
    if (mc_reps == 0) {
        throw ConfigError("psi Monte Carlo replications must be >= 1");
    }
    bool all_zero = true;
    for (double s : sigma_hats) {
        if (s < 0.0 || !std::isfinite(s)) {
            throw InputError("block standard deviations must be finite and non-negative");
        }
        all_zero = all_zero && s == 0.0;
    }
    if (all_zero) {
        throw DegenerateDataError("all block standard deviations are zero; psi would vanish");
    }

    // A_j depends on sigma_j and the multiset of the others only, so work on
    // distinct values with multiplicities: O(reps * u^2) instead of O(reps * b^2).
    std::vector<double> values(sigma_hats.begin(), sigma_hats.end());
    std::sort(values.begin(), values.end());
    std::vector<double> uniq;
    std::vector<double> count;
    for (double v : values) {
        if (uniq.empty() || v != uniq.back()) {
            uniq.push_back(v);
            count.push_back(0.0);
        }
        count.back() += 1.0;
    }
    const std::size_t u = uniq.size();
    std::vector<double> unconditional(u * u, 0.0);
    for (std::size_t a = 0; a < u; ++a) {
        for (std::size_t c = 0; c < u; ++c) {
            unconditional[a * u + c] = std::sqrt(uniq[a] * uniq[a] + uniq[c] * uniq[c]) * kSqrt2OverPi;
        }
    }

    auto engine = make_engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> sum_sq(u, 0.0);
    const double inv_bm1 = 1.0 / static_cast<double>(b - 1);
    for (std::size_t r = 0; r < mc_reps; ++r) {
        const double z = normal(engine);
        for (std::size_t a = 0; a < u; ++a) {
            double acc = 0.0;
            double self = 0.0;
            for (std::size_t c = 0; c < u; ++c) {
                const double term =
                    folded_conditional_mean(uniq[a], uniq[c], z) - unconditional[a * u + c];
                acc += count[c] * term;
                if (c == a) {
                    self = term;
                }
            }
            const double a_j = (acc - self) * inv_bm1;
            sum_sq[a] += a_j * a_j;
        }
    }
    double total = 0.0;
    for (std::size_t a = 0; a < u; ++a) {
        total += count[a] * sum_sq[a] / static_cast<double>(mc_reps);
    }
    return PsiEstimate{4.0 * total / static_cast<double>(b), mc_reps, seed};
}

double psi_sq_constant(double sigma) noexcept {
    return sigma * sigma * (4.0 / 3.0 + 8.0 / std::numbers::pi * (std::numbers::sqrt3 - 2.0));
}

}  // namespace hetmean
