#include "hetmean/blocks.hpp"

#include "hetmean/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hetmean {

namespace {

void check_scheme(std::span<const double> x, const BlockScheme& scheme) {
    if (x.size() != scheme.n) {
        throw std::invalid_argument("block scheme built for n=" + std::to_string(scheme.n) +
                                    " applied to a series of length " +
                                    std::to_string(x.size()));
    }
}

}  // namespace

BlockScheme BlockScheme::with_length(std::size_t n, std::size_t block_length) {
    if (block_length == 0 || n / block_length < 2) {
        throw InputError("need at least two blocks of length " + std::to_string(block_length) +
                         " but the series has " + std::to_string(n) + " observations");
    }
    BlockScheme scheme;
    scheme.n = n;
    scheme.s = std::log(static_cast<double>(block_length)) / std::log(static_cast<double>(n));
    scheme.block_length = block_length;
    scheme.block_count = n / block_length;
    scheme.discarded_tail = n - scheme.block_count * block_length;
    return scheme;
}

BlockScheme make_block_scheme(std::size_t n, double s) {
    if (!(s > 0.5 && s < 1.0)) {
        throw ConfigError("block exponent s must lie in (0.5, 1), got " + std::to_string(s));
    }
    if (n < 4) {
        throw InputError("at least 4 observations are required, got " + std::to_string(n));
    }
    // Relative guard so exact powers such as 1000^(2/3) are not floored to 99.
    const double raw = std::pow(static_cast<double>(n), s);
    const auto block_length = static_cast<std::size_t>(std::floor(raw * (1.0 + 1e-12)));
    auto scheme = BlockScheme::with_length(n, std::max<std::size_t>(block_length, 1));
    scheme.s = s;
    return scheme;
}

std::vector<double> local_block_means(std::span<const double> x, const BlockScheme& scheme) {
    check_scheme(x, scheme);
    const std::size_t l = scheme.block_length;
    std::vector<double> means(scheme.block_count);
    for (std::size_t j = 0; j < scheme.block_count; ++j) {
        double sum = 0.0;
        for (std::size_t i = j * l; i < (j + 1) * l; ++i) {
            sum += x[i];
        }
        means[j] = sum / static_cast<double>(l);
    }
    return means;
}

std::vector<double> local_block_variances(std::span<const double> x, const BlockScheme& scheme) {
    const auto means = local_block_means(x, scheme);
    const std::size_t l = scheme.block_length;
    std::vector<double> variances(scheme.block_count);
    for (std::size_t j = 0; j < scheme.block_count; ++j) {
        double ss = 0.0;
        for (std::size_t i = j * l; i < (j + 1) * l; ++i) {
            const double d = x[i] - means[j];
            ss += d * d;
        }
        variances[j] = ss / static_cast<double>(l);
    }
    return variances;
}

double gini_mean_difference(std::span<const double> v) {
    const std::size_t m = v.size();
    if (m < 2) {
        throw InputError("Gini's mean difference needs at least two values");
    }
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        // 1-based weight 2i - 1 - m with i -> i + 1
        const double weight = 2.0 * static_cast<double>(i) + 1.0 - static_cast<double>(m);
        acc += weight * sorted[i];
    }
    const double md = static_cast<double>(m);
    return std::max(0.0, 2.0 * acc / (md * (md - 1.0)));
}

double u_statistic(std::span<const double> x, const BlockScheme& scheme) {
    check_scheme(x, scheme);
    // Means are taken relative to x[0]; the pairwise differences are unchanged
    // and a large common offset no longer accumulates rounding error.
    const double ref = x[0];
    const std::size_t l = scheme.block_length;
    std::vector<double> means(scheme.block_count);
    for (std::size_t j = 0; j < scheme.block_count; ++j) {
        double sum = 0.0;
        for (std::size_t i = j * l; i < (j + 1) * l; ++i) {
            sum += x[i] - ref;
        }
        means[j] = sum / static_cast<double>(l);
    }
    return gini_mean_difference(means);
}

}  // namespace hetmean
