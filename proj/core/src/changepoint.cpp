#include "hetmean/changepoint.hpp"

#include "hetmean/errors.hpp"
#include "hetmean/rng.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hetmean {

std::size_t locate_dominant_change(std::span<const double> x, const BlockScheme& scheme,
                                   double exclusion_fraction) {
    if (!(exclusion_fraction >= 0.0 && exclusion_fraction < 0.5)) {
        throw ConfigError("exclusion fraction must lie in [0, 0.5), got " +
                          std::to_string(exclusion_fraction));
    }
    const auto means = local_block_means(x, scheme);
    std::size_t best_block = 0;
    double best_gap = -1.0;
    for (std::size_t j = 0; j + 1 < means.size(); ++j) {
        const double gap = std::abs(means[j] - means[j + 1]);
        if (gap > best_gap) {
            best_gap = gap;
            best_block = j;
        }
    }

    const std::size_t l = scheme.block_length;
    const std::size_t window_begin = best_block * l;
    const std::size_t window_end = window_begin + 2 * l;
    const auto excluded = static_cast<std::size_t>(
        std::ceil(exclusion_fraction * static_cast<double>(2 * l) - 1e-9));

    // Candidates t are global breaks in [window_begin + 1, window_end].
    const std::size_t first = window_begin + 1 + excluded;
    const std::size_t last = std::min(window_end - excluded, window_end - 1);
    if (first > last) {
        throw InputError("no admissible change-point candidate after boundary exclusion");
    }

    const double ref = x[window_begin];
    std::vector<double> prefix(2 * l + 1, 0.0);
    for (std::size_t i = 0; i < 2 * l; ++i) {
        prefix[i + 1] = prefix[i] + (x[window_begin + i] - ref);
    }
    std::size_t best_t = first;
    double best_diff = -1.0;
    for (std::size_t t = first; t <= last; ++t) {
        const std::size_t left_n = t - window_begin;
        const std::size_t right_n = window_end - t;
        const double left = prefix[left_n] / static_cast<double>(left_n);
        const double right = (prefix[2 * l] - prefix[left_n]) / static_cast<double>(right_n);
        const double diff = std::abs(left - right);
        if (diff > best_diff) {
            best_diff = diff;
            best_t = t;
        }
    }
    return best_t;
}

namespace {

struct Segmenter {
    const TimeSeries& x;
    const TestConfig& cfg;
    const SegmentationOptions& opts;
    ChangePointSet result;

    void run(std::size_t begin, std::size_t end) {
        const std::size_t len = end - begin;
        if (len < opts.min_segment) {
            return;
        }
        TestConfig node_cfg = cfg;
        node_cfg.seed = derive_seed(cfg.seed, {begin, end});
        const auto segment = x.values().subspan(begin, len);

        TestOutcome outcome;
        try {
            outcome = test_mean_constancy(segment, node_cfg);
        } catch (const InputError&) {
            return;  // too short for the block schemes
        } catch (const DegenerateDataError&) {
            return;  // constant segment
        }
        if (!outcome.reject) {
            return;
        }

        std::size_t local_break = 0;
        try {
            local_break = locate_dominant_change(segment, outcome.blocks, opts.exclusion_fraction);
        } catch (const InputError&) {
            return;
        }
        if (local_break < opts.min_segment || len - local_break < opts.min_segment) {
            return;
        }
        const std::size_t global_break = begin + local_break;
        result.splits.push_back(Split{begin, end, global_break, std::move(outcome)});
        result.break_indices.push_back(global_break);
        run(begin, global_break);
        run(global_break, end);
    }
};

}  // namespace

ChangePointSet segment_recursively(const TimeSeries& x, const TestConfig& cfg,
                                   const SegmentationOptions& opts) {
    cfg.validate();
    if (opts.min_segment < 4) {
        throw ConfigError("minimum segment length must be at least 4");
    }
    if (!(opts.exclusion_fraction >= 0.0 && opts.exclusion_fraction < 0.5)) {
        throw ConfigError("exclusion fraction must lie in [0, 0.5)");
    }
    Segmenter seg{x, cfg, opts, {}};
    seg.run(0, x.size());

    auto result = std::move(seg.result);
    std::sort(result.break_indices.begin(), result.break_indices.end());
    std::size_t begin = 0;
    for (std::size_t k = 0; k <= result.break_indices.size(); ++k) {
        const std::size_t end = k < result.break_indices.size() ? result.break_indices[k] : x.size();
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            sum += x[i];
        }
        result.segment_means.push_back(sum / static_cast<double>(end - begin));
        begin = end;
    }
    return result;
}

std::vector<double> piecewise_mean(std::span<const double> x, std::span<const std::size_t> breaks) {
    const std::size_t n = x.size();
    std::size_t prev = 0;
    for (std::size_t b : breaks) {
        if (b <= prev || b >= n) {
            throw InputError("breaks must be strictly increasing within [1, n-1]");
        }
        prev = b;
    }
    std::vector<double> out(n);
    std::size_t begin = 0;
    for (std::size_t k = 0; k <= breaks.size(); ++k) {
        const std::size_t end = k < breaks.size() ? breaks[k] : n;
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            sum += x[i];
        }
        const double mean = sum / static_cast<double>(end - begin);
        std::fill(out.begin() + static_cast<std::ptrdiff_t>(begin),
                  out.begin() + static_cast<std::ptrdiff_t>(end), mean);
        begin = end;
    }
    return out;
}

TimeSeries seasonal_difference(const TimeSeries& x, std::size_t lag) {
    if (lag == 0) {
        throw ConfigError("difference lag must be >= 1");
    }
    if (x.size() <= lag) {
        throw InputError("series of length " + std::to_string(x.size()) +
                         " is too short for lag " + std::to_string(lag));
    }
    const std::size_t m = x.size() - lag;
    std::vector<double> z(m);
    for (std::size_t i = 0; i < m; ++i) {
        z[i] = x[i + lag] - x[i];
    }
    if (!x.has_labels()) {
        return TimeSeries(std::move(z));
    }
    std::vector<std::string> labels(x.labels().begin() + static_cast<std::ptrdiff_t>(lag),
                                    x.labels().end());
    return TimeSeries(std::move(z), std::move(labels));
}

}  // namespace hetmean
