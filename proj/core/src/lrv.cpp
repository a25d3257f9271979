#include "hetmean/lrv.hpp"

#include "hetmean/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetmean {

SubsamplingScheme make_subsampling_scheme(std::size_t n, double q, double c0) {
    if (!(q > 0.0 && q < 1.0)) {
        throw ConfigError("subsampling exponent q must lie in (0, 1), got " + std::to_string(q));
    }
    if (!(c0 >= 1.0) || !std::isfinite(c0)) {
        throw ConfigError("neighbour radius c0 must be >= 1, got " + std::to_string(c0));
    }
    if (n < 2) {
        throw InputError("series too short for subsampling");
    }
    const double raw = std::pow(static_cast<double>(n), q);
    const auto len = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(raw * (1.0 + 1e-12))));
    SubsamplingScheme sub;
    sub.n = n;
    sub.q = q;
    sub.sub_length = len;
    sub.sub_count = n / len;
    sub.c0 = c0;
    if (sub.sub_count < 2) {
        throw InputError("series of length " + std::to_string(n) +
                         " yields fewer than two subsampling blocks");
    }
    if (c0 >= static_cast<double>(sub.sub_count)) {
        throw InputError("c0 = " + std::to_string(c0) + " requires more than " +
                         std::to_string(sub.sub_count) + " subsampling blocks; series of length " +
                         std::to_string(n) + " is too short");
    }
    return sub;
}

double kappa_tilde_x(std::span<const double> x, const SubsamplingScheme& sub) {
    if (x.size() != sub.n) {
        throw std::invalid_argument("subsampling scheme does not match series length");
    }
    if (sub.sub_count < 2 || sub.c0 >= static_cast<double>(sub.sub_count)) {
        throw InputError("invalid subsampling scheme for kappa estimation");
    }
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    const auto len = static_cast<std::ptrdiff_t>(sub.sub_length);

    // Prefix sums of x - x[0]; every S_j is invariant to the reference value.
    const double ref = x[0];
    std::vector<double> prefix(x.size() + 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        prefix[i + 1] = prefix[i] + (x[i] - ref);
    }
    const auto range_sum = [&](std::ptrdiff_t lo, std::ptrdiff_t hi) {
        return prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo)];
    };

    const double width = sub.c0 * static_cast<double>(sub.sub_length);
    auto full = static_cast<std::ptrdiff_t>(std::floor(width + 1e-9));
    double frac = width - static_cast<double>(full);
    if (frac < 1e-9) {
        frac = 0.0;
    }

    double total = 0.0;
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(sub.sub_count); ++j) {
        const std::ptrdiff_t a = j * len;
        const std::ptrdiff_t e = a + len;

        const std::ptrdiff_t left_lo = std::max<std::ptrdiff_t>(0, a - full);
        const std::ptrdiff_t right_hi = std::min<std::ptrdiff_t>(n, e + full);
        double nb_sum = range_sum(left_lo, a) + range_sum(e, right_hi);
        double nb_count = static_cast<double>((a - left_lo) + (right_hi - e));
        if (frac > 0.0) {
            const std::ptrdiff_t left_edge = a - full - 1;
            const std::ptrdiff_t right_edge = e + full;
            if (left_edge >= 0) {
                nb_sum += frac * (x[static_cast<std::size_t>(left_edge)] - ref);
                nb_count += frac;
            }
            if (right_edge < n) {
                nb_sum += frac * (x[static_cast<std::size_t>(right_edge)] - ref);
                nb_count += frac;
            }
        }
        const double centred = range_sum(a, e) - static_cast<double>(len) * nb_sum / nb_count;
        total += std::abs(centred);
    }

    const double c0 = sub.c0;
    const double norm = std::sqrt(2.0 * c0 / (1.0 + 2.0 * c0)) * std::sqrt(std::numbers::pi / 2.0);
    return norm * total /
           (static_cast<double>(sub.sub_count) * std::sqrt(static_cast<double>(sub.sub_length)));
}

double kappa_hat_from(double kappa_tilde, std::span<const double> x, const BlockScheme& scheme) {
    const auto variances = local_block_variances(x, scheme);
    double sd_sum = 0.0;
    for (double v : variances) {
        sd_sum += std::sqrt(v);
    }
    const double mean_sd = sd_sum / static_cast<double>(variances.size());
    if (!(mean_sd > 0.0)) {
        throw DegenerateDataError(
            "every block is constant; the variance normalisation of kappa is zero");
    }
    return kappa_tilde / mean_sd;
}

double kappa_hat(std::span<const double> x, const SubsamplingScheme& sub,
                 const BlockScheme& scheme) {
    return kappa_hat_from(kappa_tilde_x(x, sub), x, scheme);
}

}  // namespace hetmean
