#pragma once

// JSON rendering of library results. Internal to the io layer.

#include "hetmean/changepoint.hpp"
#include "hetmean/io/dispatch.hpp"
#include "hetmean/simulation.hpp"

#include <json.hpp>

namespace hetmean::io {

[[nodiscard]] nlohmann::ordered_json to_json(const BlockScheme& s);
[[nodiscard]] nlohmann::ordered_json to_json(const SubsamplingScheme& s);
[[nodiscard]] nlohmann::ordered_json to_json(const TestConfig& cfg);
[[nodiscard]] nlohmann::ordered_json to_json(const TestOutcome& out);
[[nodiscard]] nlohmann::ordered_json to_json(const ScenarioSpec& scn);
[[nodiscard]] nlohmann::ordered_json to_json(const ChangePointSet& cps, const TimeSeries& x);
[[nodiscard]] nlohmann::ordered_json to_json(const RejectionRate& row);
[[nodiscard]] nlohmann::ordered_json to_json(const LrvAccuracy& row);

/// Resolved request: every tuning value actually used.
[[nodiscard]] nlohmann::ordered_json request_json(const RunRequest& req, std::uint64_t seed);

/// Two-space indented document with a trailing newline. Doubles are printed
/// in their shortest round-trip form.
[[nodiscard]] std::string render(const nlohmann::ordered_json& doc);

}  // namespace hetmean::io
