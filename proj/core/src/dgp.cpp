#include "hetmean/dgp.hpp"

#include "hetmean/errors.hpp"
#include "hetmean/rng.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

namespace hetmean {

namespace {

constexpr std::size_t kNonlinearCalibrationLength = 4'000'000;
constexpr std::size_t kNonlinearCalibrationLags = 60;

// Unstandardised path of the process, burn-in removed.
std::vector<double> raw_path(const DGPSpec& spec, std::size_t n, std::uint64_t seed) {
    auto engine = make_engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::size_t total = n + spec.burn_in;
    std::vector<double> out;
    out.reserve(n);
    const auto keep = [&](std::size_t i, double v) {
        if (i >= spec.burn_in) {
            out.push_back(v);
        }
    };

    switch (spec.kind) {
        case DGPKind::iid_normal:
            for (std::size_t i = 0; i < total; ++i) {
                keep(i, normal(engine));
            }
            break;
        case DGPKind::iid_exp: {
            std::exponential_distribution<double> expo(1.0);
            for (std::size_t i = 0; i < total; ++i) {
                keep(i, expo(engine) - 1.0);
            }
            break;
        }
        case DGPKind::ar1: {
            double y = 0.0;
            for (std::size_t i = 0; i < total; ++i) {
                y = spec.ar * y + normal(engine);
                keep(i, y);
            }
            break;
        }
        case DGPKind::arma22: {
            double y1 = 0.0, y2 = 0.0, e1 = 0.0, e2 = 0.0;
            for (std::size_t i = 0; i < total; ++i) {
                const double e = normal(engine);
                const double y = spec.arma_ar1 * y1 + spec.arma_ar2 * y2 + e + spec.arma_ma1 * e1 +
                                 spec.arma_ma2 * e2;
                y2 = y1;
                y1 = y;
                e2 = e1;
                e1 = e;
                keep(i, y);
            }
            break;
        }
        case DGPKind::garch11: {
            double var = spec.garch_omega / (1.0 - spec.garch_alpha - spec.garch_beta);
            double y_prev_sq = var;
            for (std::size_t i = 0; i < total; ++i) {
                var = spec.garch_omega + spec.garch_alpha * y_prev_sq + spec.garch_beta * var;
                const double y = std::sqrt(var) * normal(engine);
                y_prev_sq = y * y;
                keep(i, y);
            }
            break;
        }
        case DGPKind::nonlinear_ar1: {
            double y = 0.0;
            for (std::size_t i = 0; i < total; ++i) {
                y = spec.nonlinear_lambda * y * std::cos(y) + normal(engine);
                keep(i, y);
            }
            break;
        }
    }
    return out;
}

double estimate_nonlinear_lrv(const DGPSpec& spec) {
    const auto path = raw_path(spec, kNonlinearCalibrationLength,
                               derive_seed(0x4e4c4152ULL, {std::bit_cast<std::uint64_t>(
                                                              spec.nonlinear_lambda)}));
    const auto n = static_cast<double>(path.size());
    double mean = 0.0;
    for (double v : path) {
        mean += v;
    }
    mean /= n;
    double lrv = 0.0;
    for (std::size_t k = 0; k <= kNonlinearCalibrationLags; ++k) {
        double acc = 0.0;
        for (std::size_t i = k; i < path.size(); ++i) {
            acc += (path[i] - mean) * (path[i - k] - mean);
        }
        lrv += (k == 0 ? 1.0 : 2.0) * acc / n;
    }
    return lrv;
}

bool near(double x, double target) { return std::abs(x - target) < 1e-9; }

}  // namespace

DGPSpec DGPSpec::normal() { return DGPSpec{}; }

DGPSpec DGPSpec::exponential() {
    DGPSpec s;
    s.kind = DGPKind::iid_exp;
    return s;
}

DGPSpec DGPSpec::ar1_process(double a) {
    DGPSpec s;
    s.kind = DGPKind::ar1;
    s.ar = a;
    return s;
}

DGPSpec DGPSpec::arma22_process() {
    DGPSpec s;
    s.kind = DGPKind::arma22;
    return s;
}

DGPSpec DGPSpec::garch11_process() {
    DGPSpec s;
    s.kind = DGPKind::garch11;
    return s;
}

DGPSpec DGPSpec::nonlinear_ar1_process(double lambda) {
    DGPSpec s;
    s.kind = DGPKind::nonlinear_ar1;
    s.nonlinear_lambda = lambda;
    return s;
}

void DGPSpec::validate() const {
    switch (kind) {
        case DGPKind::ar1:
            if (!(std::abs(ar) < 1.0)) {
                throw ConfigError("AR(1) coefficient must satisfy |a| < 1");
            }
            break;
        case DGPKind::arma22: {
            // Causality: both roots of 1 - a1 z - a2 z^2 outside the unit circle,
            // i.e. both roots of z^2 - a1 z - a2 inside it.
            const std::complex<double> disc =
                std::sqrt(std::complex<double>(arma_ar1 * arma_ar1 + 4.0 * arma_ar2, 0.0));
            const auto r1 = (arma_ar1 + disc) / 2.0;
            const auto r2 = (arma_ar1 - disc) / 2.0;
            if (!(std::abs(r1) < 1.0 && std::abs(r2) < 1.0)) {
                throw ConfigError("ARMA(2,2) AR polynomial is not causal");
            }
            if (near(1.0 + arma_ma1 + arma_ma2, 0.0)) {
                throw ConfigError("ARMA(2,2) MA polynomial vanishes at one; zero long run variance");
            }
            break;
        }
        case DGPKind::garch11:
            if (!(garch_omega > 0.0 && garch_alpha >= 0.0 && garch_beta >= 0.0 &&
                  garch_alpha + garch_beta < 1.0)) {
                throw ConfigError("GARCH(1,1) requires omega > 0, alpha, beta >= 0, alpha + beta < 1");
            }
            break;
        case DGPKind::nonlinear_ar1:
            if (!(nonlinear_lambda >= 0.0 && nonlinear_lambda < 1.0)) {
                throw ConfigError("non-linear AR(1) requires 0 <= lambda < 1");
            }
            break;
        case DGPKind::iid_normal:
        case DGPKind::iid_exp:
            break;
    }
}

std::string DGPSpec::name() const {
    std::ostringstream os;
    switch (kind) {
        case DGPKind::iid_normal: return "N(0,1)";
        case DGPKind::iid_exp: return "Exp(1)";
        case DGPKind::ar1: os << "AR(1), " << ar; return os.str();
        case DGPKind::arma22: return "ARMA(2,2)";
        case DGPKind::garch11: return "GARCH(1,1)";
        case DGPKind::nonlinear_ar1: os << "NLAR(1), " << nonlinear_lambda; return os.str();
    }
    return "?";
}

DGPKind parse_dgp_kind(std::string_view name) {
    if (name == "normal" || name == "iid_normal") return DGPKind::iid_normal;
    if (name == "exp" || name == "iid_exp") return DGPKind::iid_exp;
    if (name == "ar1") return DGPKind::ar1;
    if (name == "arma22") return DGPKind::arma22;
    if (name == "garch11") return DGPKind::garch11;
    if (name == "nonlinear_ar1") return DGPKind::nonlinear_ar1;
    throw ConfigError("unknown data-generating process '" + std::string(name) + "'");
}

std::string_view to_string(DGPKind kind) noexcept {
    switch (kind) {
        case DGPKind::iid_normal: return "normal";
        case DGPKind::iid_exp: return "exp";
        case DGPKind::ar1: return "ar1";
        case DGPKind::arma22: return "arma22";
        case DGPKind::garch11: return "garch11";
        case DGPKind::nonlinear_ar1: return "nonlinear_ar1";
    }
    return "?";
}

double lrv_theoretical(const DGPSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case DGPKind::iid_normal:
        case DGPKind::iid_exp:
            return 1.0;
        case DGPKind::ar1:
            return 1.0 / ((1.0 - spec.ar) * (1.0 - spec.ar));
        case DGPKind::arma22: {
            const double r = (1.0 + spec.arma_ma1 + spec.arma_ma2) /
                             (1.0 - spec.arma_ar1 - spec.arma_ar2);
            return r * r;
        }
        case DGPKind::garch11:
            return spec.garch_omega / (1.0 - spec.garch_alpha - spec.garch_beta);
        case DGPKind::nonlinear_ar1: {
            static std::mutex mutex;
            static std::map<double, double> cache;
            const std::lock_guard lock(mutex);
            auto it = cache.find(spec.nonlinear_lambda);
            if (it == cache.end()) {
                DGPSpec calib = spec;
                calib.burn_in = 1000;
                it = cache.emplace(spec.nonlinear_lambda, estimate_nonlinear_lrv(calib)).first;
            }
            return it->second;
        }
    }
    return 1.0;
}

std::vector<double> generate_noise(const DGPSpec& spec, std::size_t n, std::uint64_t seed) {
    const double scale = 1.0 / std::sqrt(lrv_theoretical(spec));
    auto path = raw_path(spec, n, seed);
    for (double& v : path) {
        v *= scale;
    }
    return path;
}

// -- profiles ----------------------------------------------------------------

MeanKind parse_mean_kind(std::string_view name) {
    static constexpr std::pair<std::string_view, MeanKind> table[] = {
        {"H", MeanKind::H},     {"A1", MeanKind::A1},   {"A2", MeanKind::A2},
        {"A3", MeanKind::A3},   {"A4", MeanKind::A4},   {"A5", MeanKind::A5},
        {"A1'", MeanKind::A1p}, {"A2'", MeanKind::A2p}, {"A3'", MeanKind::A3p},
        {"A4'", MeanKind::A4p}, {"A5'", MeanKind::A5p}, {"A1p", MeanKind::A1p},
        {"A2p", MeanKind::A2p}, {"A3p", MeanKind::A3p}, {"A4p", MeanKind::A4p},
        {"A5p", MeanKind::A5p}};
    for (const auto& [key, kind] : table) {
        if (key == name) {
            return kind;
        }
    }
    throw ConfigError("unknown mean profile '" + std::string(name) + "'");
}

std::string_view to_string(MeanKind kind) noexcept {
    switch (kind) {
        case MeanKind::H: return "H";
        case MeanKind::A1: return "A1";
        case MeanKind::A2: return "A2";
        case MeanKind::A3: return "A3";
        case MeanKind::A4: return "A4";
        case MeanKind::A5: return "A5";
        case MeanKind::A1p: return "A1'";
        case MeanKind::A2p: return "A2'";
        case MeanKind::A3p: return "A3'";
        case MeanKind::A4p: return "A4'";
        case MeanKind::A5p: return "A5'";
    }
    return "?";
}

VarianceKind parse_variance_kind(std::string_view name) {
    if (name == "const" || name == "constant") return VarianceKind::constant;
    if (name == "s1") return VarianceKind::s1;
    if (name == "s2") return VarianceKind::s2;
    if (name == "s3") return VarianceKind::s3;
    throw ConfigError("unknown variance profile '" + std::string(name) + "'");
}

std::string_view to_string(VarianceKind kind) noexcept {
    switch (kind) {
        case VarianceKind::constant: return "const";
        case VarianceKind::s1: return "s1";
        case VarianceKind::s2: return "s2";
        case VarianceKind::s3: return "s3";
    }
    return "?";
}

double default_theta_mu(MeanKind kind, std::size_t n) {
    const double local = std::sqrt(1000.0 / static_cast<double>(n));
    const double fixed = std::numbers::sqrt2;
    switch (kind) {
        case MeanKind::H: return 0.0;
        case MeanKind::A2: return 0.15 * local;
        case MeanKind::A1:
        case MeanKind::A3:
        case MeanKind::A4:
        case MeanKind::A5: return 0.3 * local;
        case MeanKind::A2p: return 0.15 * fixed;
        case MeanKind::A1p:
        case MeanKind::A3p:
        case MeanKind::A4p:
        case MeanKind::A5p: return 0.3 * fixed;
    }
    return 0.0;
}

double default_theta_sigma(std::size_t n) {
    return 0.3 * std::sqrt(1000.0 / static_cast<double>(n));
}

std::vector<double> mean_profile(MeanKind kind, std::optional<double> theta, std::size_t n) {
    const double th = theta.value_or(default_theta_mu(kind, n));
    std::vector<double> mu(n, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(n);
        double v = 0.0;
        switch (kind) {
            case MeanKind::H: v = 0.0; break;
            case MeanKind::A1:
            case MeanKind::A1p: v = th * x; break;
            case MeanKind::A2:
            case MeanKind::A2p: v = th * std::sin(4.0 * std::numbers::pi * x); break;
            case MeanKind::A3:
            case MeanKind::A3p: v = 2 * i >= n ? th : 0.0; break;
            case MeanKind::A4:
            case MeanKind::A4p: v = (3 * i >= n && 3 * i < 2 * n) ? th : 0.0; break;
            case MeanKind::A5:
            case MeanKind::A5p:
                v = ((5 * i >= n && 5 * i < 2 * n) || (5 * i >= 3 * n && 5 * i < 4 * n)) ? th : 0.0;
                break;
        }
        mu[i - 1] = v;
    }
    return mu;
}

std::vector<double> variance_profile(VarianceKind kind, double theta, std::size_t n) {
    if (kind != VarianceKind::constant && !(std::abs(theta) < 2.0)) {
        throw ConfigError("variance profile magnitude must satisfy |theta| < 2");
    }
    std::vector<double> sigma(n, 1.0);
    for (std::size_t i = 1; i <= n; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(n);
        double v = 1.0;
        switch (kind) {
            case VarianceKind::constant: v = 1.0; break;
            case VarianceKind::s1: v = (1.0 - theta / 2.0) + theta * x; break;
            case VarianceKind::s2: v = 1.0 + theta / 2.0 * std::sin(4.0 * std::numbers::pi * x); break;
            case VarianceKind::s3: v = 2 * i < n ? 1.0 - theta / 2.0 : 1.0 + theta / 2.0; break;
        }
        sigma[i - 1] = v;
    }
    return sigma;
}

double ScenarioSpec::resolved_theta_mu() const {
    return theta_mu.value_or(default_theta_mu(mean, n));
}

double ScenarioSpec::resolved_theta_sigma() const {
    return theta_sigma.value_or(default_theta_sigma(n));
}

std::string ScenarioSpec::label() const {
    std::ostringstream os;
    os << dgp.name() << " | " << to_string(mean) << " | " << to_string(variance) << " | n=" << n;
    return os.str();
}

TimeSeries synthesize_with_noise(const ScenarioSpec& scn, std::span<const double> noise) {
    if (noise.size() != scn.n) {
        throw std::invalid_argument("noise length does not match scenario length");
    }
    const auto mu = mean_profile(scn.mean, scn.theta_mu, scn.n);
    const auto sigma = variance_profile(scn.variance, scn.resolved_theta_sigma(), scn.n);
    std::vector<double> x(scn.n);
    for (std::size_t i = 0; i < scn.n; ++i) {
        x[i] = mu[i] + sigma[i] * noise[i];
    }
    return TimeSeries(std::move(x));
}

TimeSeries synthesize(const ScenarioSpec& scn, std::uint64_t seed) {
    if (scn.n == 0) {
        throw ConfigError("scenario length must be positive");
    }
    const auto noise = generate_noise(scn.dgp, scn.n, seed);
    return synthesize_with_noise(scn, noise);
}

}  // namespace hetmean
