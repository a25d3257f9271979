#include "hetmean/io/scenario.hpp"

#include "hetmean/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace hetmean::io {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }
}

template <typename T>
T get_as(const json& obj, const char* key, const std::string& where) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + ": '" + key + "' is missing or has the wrong type");
    }
}

std::size_t get_count(const json& obj, const char* key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ConfigError(where + ": '" + key + "' must be a positive integer");
    }
    return v.get<std::size_t>();
}

DGPSpec parse_dgp(const json& entry, const std::string& where) {
    DGPSpec dgp;
    dgp.kind = parse_dgp_kind(get_as<std::string>(entry, "dgp", where));
    if (entry.contains("ar")) {
        dgp.ar = get_as<double>(entry, "ar", where);
    }
    if (entry.contains("lambda")) {
        dgp.nonlinear_lambda = get_as<double>(entry, "lambda", where);
    }
    if (entry.contains("burn_in")) {
        const auto& v = entry.at("burn_in");
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw ConfigError(where + ": 'burn_in' must be a non-negative integer");
        }
        dgp.burn_in = v.get<std::size_t>();
    }
    dgp.validate();
    return dgp;
}

}  // namespace

std::string_view to_string(SimulationTask task) noexcept {
    return task == SimulationTask::rejection ? "rejection" : "lrv";
}

ScenarioFile parse_scenario_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("scenario file must hold a JSON object");
    }
    reject_unknown_keys(doc, {"task", "seed", "replications", "scenarios"}, "scenario file");

    ScenarioFile file;
    if (doc.contains("task")) {
        const auto task = get_as<std::string>(doc, "task", "scenario file");
        if (task == "rejection") {
            file.task = SimulationTask::rejection;
        } else if (task == "lrv") {
            file.task = SimulationTask::lrv;
        } else {
            throw ConfigError("scenario file: task must be 'rejection' or 'lrv'");
        }
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) {
            throw ConfigError("scenario file: 'seed' must be a non-negative integer");
        }
        file.seed = doc["seed"].get<std::uint64_t>();
    }
    std::optional<std::size_t> default_reps;
    if (doc.contains("replications")) {
        default_reps = get_count(doc, "replications", "scenario file");
    }
    if (!doc.contains("scenarios") || !doc["scenarios"].is_array() || doc["scenarios"].empty()) {
        throw ConfigError("scenario file: 'scenarios' must be a non-empty array");
    }

    std::size_t index = 0;
    for (const auto& entry : doc["scenarios"]) {
        const std::string where = "scenario " + std::to_string(index++);
        if (!entry.is_object()) {
            throw ConfigError(where + ": must be an object");
        }
        reject_unknown_keys(entry,
                            {"dgp", "ar", "lambda", "burn_in", "mean", "variance", "theta_mu",
                             "theta_sigma", "n", "replications"},
                            where);
        ScenarioEntry out;
        out.spec.dgp = parse_dgp(entry, where);
        out.spec.mean = entry.contains("mean") ? parse_mean_kind(get_as<std::string>(entry, "mean", where))
                                               : MeanKind::H;
        out.spec.variance = entry.contains("variance")
                                ? parse_variance_kind(get_as<std::string>(entry, "variance", where))
                                : VarianceKind::constant;
        if (entry.contains("theta_mu")) {
            out.spec.theta_mu = get_as<double>(entry, "theta_mu", where);
        }
        if (entry.contains("theta_sigma")) {
            out.spec.theta_sigma = get_as<double>(entry, "theta_sigma", where);
        }
        out.spec.n = get_count(entry, "n", where);
        if (entry.contains("replications")) {
            out.replications = get_count(entry, "replications", where);
        } else if (default_reps) {
            out.replications = *default_reps;
        } else {
            throw ConfigError(where + ": no replication count (set it here or at the top level)");
        }
        file.scenarios.push_back(out);
    }
    return file;
}

ScenarioFile read_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open scenario file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_json(buf.str());
}

}  // namespace hetmean::io
