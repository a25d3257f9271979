#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hetmean {

/**
 * @brief Partition of n observations into b equal blocks of length l.
 *
 * Blocks are numbered 1..b in documentation; block j covers the 1-based
 * observation indices (j-1)l+1 .. jl, i.e. the 0-based range [(j-1)l, jl).
 * The trailing n - b*l observations are not used by any block statistic.
 */
struct BlockScheme {
    std::size_t n = 0;
    double s = 0.0;
    std::size_t block_length = 0;
    std::size_t block_count = 0;
    std::size_t discarded_tail = 0;

    /// Scheme with an explicit block length; s is recorded as log(l)/log(n).
    [[nodiscard]] static BlockScheme with_length(std::size_t n, std::size_t block_length);
};

/// l = floor(n^s), b = floor(n/l). Requires n >= 4 and 0.5 < s < 1 (ConfigError),
/// and b >= 2 (InputError: the series is too short for two blocks).
[[nodiscard]] BlockScheme make_block_scheme(std::size_t n, double s);

/// Arithmetic mean of every block.
[[nodiscard]] std::vector<double> local_block_means(std::span<const double> x,
                                                    const BlockScheme& scheme);

/// Centered second moment of every block, normalized by 1/l (no l-1 correction).
[[nodiscard]] std::vector<double> local_block_variances(std::span<const double> x,
                                                        const BlockScheme& scheme);

/**
 * @brief Gini's mean difference (1/(m(m-1))) sum_{j != k} |v_j - v_k|.
 *
 * Evaluated in O(m log m) through the order statistics:
 * sum_{j<k} (v_(k) - v_(j)) = sum_i (2i - 1 - m) v_(i).
 * Throws InputError for m < 2.
 */
[[nodiscard]] double gini_mean_difference(std::span<const double> v);

/// Gini's mean difference of the local block means.
[[nodiscard]] double u_statistic(std::span<const double> x, const BlockScheme& scheme);

}  // namespace hetmean
