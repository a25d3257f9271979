#pragma once

#include "hetmean/time_series.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

namespace hetmean::io {

/**
 * @brief Reads one numeric column of a delimited text file.
 *
 * The delimiter is ',' unless the first line has none and contains ';' or a
 * tab. `column` is a header name, a 1-based column number, or empty for the
 * last column. The first row is a header when its cell in the chosen column
 * is not numeric. When the chosen column is not the first one, the first
 * column supplies observation labels (e.g. years). Blank lines are skipped.
 *
 * InputError for a missing file or column, a non-numeric or missing cell
 * (the message names the file row), or fewer than 4 observations.
 */
[[nodiscard]] TimeSeries read_series_csv(const std::filesystem::path& path,
                                         std::string_view column = {});

/// Same, from a stream; `source` only appears in error messages.
[[nodiscard]] TimeSeries parse_series_csv(std::istream& in, std::string_view column,
                                          std::string_view source = "<stream>");

}  // namespace hetmean::io
