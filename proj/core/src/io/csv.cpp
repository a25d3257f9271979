#include "hetmean/io/csv.hpp"

#include "hetmean/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <vector>

namespace hetmean::io {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\v\f";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    s = s.substr(first, last - first + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

std::vector<std::string> split(std::string_view line, char delim) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(delim, start);
        cells.emplace_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return cells;
}

std::optional<double> parse_number(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return std::nullopt;
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::optional<std::size_t> parse_index(std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

struct Row {
    std::size_t line_no;
    std::vector<std::string> cells;
};

}  // namespace

TimeSeries parse_series_csv(std::istream& in, std::string_view column, std::string_view source) {
    const std::string where(source);
    std::vector<Row> rows;
    std::optional<char> delim;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
            line.erase(0, 3);  // UTF-8 byte order mark
        }
        if (trim(line).empty()) {
            continue;
        }
        if (!delim) {
            delim = ',';
            if (line.find(',') == std::string::npos) {
                if (line.find(';') != std::string::npos) {
                    delim = ';';
                } else if (line.find('\t') != std::string::npos) {
                    delim = '\t';
                }
            }
        }
        rows.push_back(Row{line_no, split(line, *delim)});
    }
    if (rows.empty()) {
        throw InputError(where + ": no data rows");
    }

    const std::size_t width = rows.front().cells.size();
    column = trim(column);
    std::size_t col = width - 1;
    bool by_name = false;
    if (!column.empty()) {
        if (const auto idx = parse_index(column)) {
            if (*idx == 0 || *idx > width) {
                throw InputError(where + ": column " + std::string(column) + " does not exist (" +
                                 std::to_string(width) + " columns)");
            }
            col = *idx - 1;
        } else {
            by_name = true;
        }
    }

    bool header = false;
    if (by_name) {
        const auto& names = rows.front().cells;
        const auto it = std::find(names.begin(), names.end(), column);
        if (it == names.end()) {
            throw InputError(where + ": no column named '" + std::string(column) + "'");
        }
        col = static_cast<std::size_t>(it - names.begin());
        header = true;
    } else {
        header = !parse_number(rows.front().cells[col]).has_value();
    }

    const bool with_labels = col != 0;
    std::vector<double> values;
    std::vector<std::string> labels;
    for (std::size_t r = header ? 1 : 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::string at = where + ": row " + std::to_string(row.line_no);
        if (row.cells.size() <= col) {
            throw InputError(at + " has no value in column " + std::to_string(col + 1));
        }
        const auto v = parse_number(row.cells[col]);
        if (!v) {
            throw InputError(at + ": cannot parse '" + row.cells[col] + "' as a finite number");
        }
        values.push_back(*v);
        if (with_labels) {
            labels.push_back(row.cells[0]);
        }
    }
    if (values.size() < 4) {
        throw InputError(where + ": need at least 4 observations, found " +
                         std::to_string(values.size()));
    }
    if (with_labels) {
        return TimeSeries(std::move(values), std::move(labels));
    }
    return TimeSeries(std::move(values));
}

TimeSeries read_series_csv(const std::filesystem::path& path, std::string_view column) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open input file '" + path.string() + "'");
    }
    return parse_series_csv(in, column, path.string());
}

}  // namespace hetmean::io
