#include "hetmean/time_series.hpp"

#include "hetmean/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace hetmean {

namespace {

void validate_values(const std::vector<double>& values) {
    if (values.empty()) {
        throw InputError("time series must contain at least one observation");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw InputError("time series value at position " + std::to_string(i + 1) +
                             " is not finite");
        }
    }
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    validate_values(values_);
}

TimeSeries::TimeSeries(std::vector<double> values, std::vector<std::string> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
    validate_values(values_);
    if (!labels_.empty() && labels_.size() != values_.size()) {
        throw InputError("label count does not match observation count");
    }
}

std::string TimeSeries::label(std::size_t i) const {
    if (i >= values_.size()) {
        throw std::out_of_range("TimeSeries::label index out of range");
    }
    return labels_.empty() ? std::to_string(i + 1) : labels_[i];
}

TimeSeries TimeSeries::slice(std::size_t first, std::size_t count) const {
    if (first + count > values_.size() || count == 0) {
        throw std::out_of_range("TimeSeries::slice range out of bounds");
    }
    std::vector<double> v(values_.begin() + static_cast<std::ptrdiff_t>(first),
                          values_.begin() + static_cast<std::ptrdiff_t>(first + count));
    if (labels_.empty()) {
        return TimeSeries(std::move(v));
    }
    std::vector<std::string> l(labels_.begin() + static_cast<std::ptrdiff_t>(first),
                               labels_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return TimeSeries(std::move(v), std::move(l));
}

}  // namespace hetmean
