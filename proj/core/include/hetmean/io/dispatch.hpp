#pragma once

#include "hetmean/changepoint.hpp"
#include "hetmean/mean_test.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace hetmean::io {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Command { test, segment, simulate, lrv };

[[nodiscard]] Command parse_command(std::string_view name);
[[nodiscard]] std::string_view to_string(Command c) noexcept;

/// One invocation of the tool.
struct RunRequest {
    Command command = Command::test;
    std::string input;     ///< CSV path (test, segment, lrv)
    std::string column;    ///< see read_series_csv
    std::string scenario;  ///< scenario file (simulate)
    TestConfig config;
    bool seed_given = false;  ///< an explicit --seed overrides the scenario file
    std::optional<std::size_t> diff_lag;
    std::optional<std::size_t> detrend_degree;
    SegmentationOptions segmentation;
    unsigned threads = 0;  ///< simulate only; 0 = hardware concurrency
};

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_input = 2,
    exit_degenerate = 3,
    exit_config = 4,
};

struct RunResult {
    int exit_code = exit_ok;
    std::string json;   ///< the result document; empty on failure
    std::string error;  ///< message on failure
};

/**
 * @brief Validates the request, runs the command and renders its JSON document.
 *
 * Preprocessing (test, segment, lrv) applies lag differencing first and then
 * replaces the series by polynomial trend residuals. Errors are mapped to exit
 * codes rather than thrown. Every document carries the tool version, the seed
 * and the resolved configuration.
 */
[[nodiscard]] RunResult dispatch(const RunRequest& req);

/// Writes `text` to `path` through a temporary file and a rename, so a
/// failed write never leaves a partial document behind. InputError on failure.
void write_atomically(const std::filesystem::path& path, std::string_view text);

}  // namespace hetmean::io
