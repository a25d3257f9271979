#pragma once

#include "hetmean/dgp.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hetmean::io {

enum class SimulationTask { rejection, lrv };

struct ScenarioEntry {
    ScenarioSpec spec;
    std::size_t replications = 0;
};

/// Parsed simulation request; see README for the schema.
struct ScenarioFile {
    SimulationTask task = SimulationTask::rejection;
    std::optional<std::uint64_t> seed;  ///< used unless --seed is given
    std::vector<ScenarioEntry> scenarios;
};

/// ConfigError for malformed documents, unknown keys or invalid values.
[[nodiscard]] ScenarioFile parse_scenario_json(std::string_view text);
/// InputError when the file cannot be read.
[[nodiscard]] ScenarioFile read_scenario_file(const std::filesystem::path& path);

[[nodiscard]] std::string_view to_string(SimulationTask task) noexcept;

}  // namespace hetmean::io
