#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hetmean {

/**
 * @brief Ordered, finite real observations with optional per-observation labels.
 *
 * Construction validates that the series is non-empty and that every value is
 * finite; InputError is thrown otherwise. Labels, when present, have the same
 * length as the values (e.g. years of an annual record).
 */
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values);
    TimeSeries(std::vector<double> values, std::vector<std::string> labels);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

    [[nodiscard]] bool has_labels() const noexcept { return !labels_.empty(); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Label of observation i (0-based), or its 1-based position when unlabelled.
    [[nodiscard]] std::string label(std::size_t i) const;

    /// Contiguous sub-series [first, first + count), labels carried along.
    [[nodiscard]] TimeSeries slice(std::size_t first, std::size_t count) const;

private:
    std::vector<double> values_;
    std::vector<std::string> labels_;
};

}  // namespace hetmean
