#include "hetmean/io/dispatch.hpp"

#include "hetmean/errors.hpp"
#include "hetmean/io/csv.hpp"
#include "hetmean/io/scenario.hpp"
#include "hetmean/lrv.hpp"
#include "hetmean/simulation.hpp"
#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

namespace hetmean::io {

using nlohmann::ordered_json;

Command parse_command(std::string_view name) {
    if (name == "test") return Command::test;
    if (name == "segment") return Command::segment;
    if (name == "simulate") return Command::simulate;
    if (name == "lrv") return Command::lrv;
    throw ConfigError("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command c) noexcept {
    switch (c) {
        case Command::test: return "test";
        case Command::segment: return "segment";
        case Command::simulate: return "simulate";
        case Command::lrv: return "lrv";
    }
    return "?";
}

namespace {

struct Prepared {
    TimeSeries series;
    ordered_json info;
};

Prepared load_and_preprocess(const RunRequest& req) {
    if (req.input.empty()) {
        throw InputError("no input file given");
    }
    TimeSeries x = read_series_csv(req.input, req.column);
    ordered_json info{{"n_read", x.size()}};
    if (req.diff_lag) {
        x = seasonal_difference(x, *req.diff_lag);
        info["n_after_differencing"] = x.size();
    }
    if (req.detrend_degree) {
        // The trend fit also tests its residuals; only the residuals are needed here.
        TestConfig cheap = req.config;
        cheap.psi_mc_reps = 1;
        const auto fit = fit_polynomial_trend(x.values(), *req.detrend_degree, cheap);
        info["trend_coefficients"] = fit.coefficients;
        x = x.has_labels() ? TimeSeries(fit.residuals, x.labels()) : TimeSeries(fit.residuals);
    }
    info["n"] = x.size();
    info["first_label"] = x.label(0);
    info["last_label"] = x.label(x.size() - 1);
    return {std::move(x), std::move(info)};
}

ordered_json run_test(const RunRequest& req) {
    const auto data = load_and_preprocess(req);
    return {{"series", data.info}, {"result", to_json(test_mean_constancy(data.series, req.config))}};
}

ordered_json run_segment(const RunRequest& req) {
    const auto data = load_and_preprocess(req);
    const auto cps = segment_recursively(data.series, req.config, req.segmentation);
    return {{"series", data.info}, {"result", to_json(cps, data.series)}};
}

ordered_json run_lrv(const RunRequest& req) {
    const auto data = load_and_preprocess(req);
    const auto& x = data.series;
    const auto blocks = make_block_scheme(x.size(), req.config.s);
    const auto sub = make_subsampling_scheme(x.size(), req.config.q, req.config.c0);
    const double kt = kappa_tilde_x(x.values(), sub);
    ordered_json result{{"kappa_tilde", kt}};
    try {
        result["kappa_hat"] = kappa_hat_from(kt, x.values(), blocks);
    } catch (const DegenerateDataError&) {
        result["kappa_hat"] = nullptr;
    }
    result["blocks"] = to_json(blocks);
    result["subsampling"] = to_json(sub);
    return {{"series", data.info}, {"result", result}};
}

ordered_json run_simulate(const RunRequest& req, std::uint64_t seed) {
    if (req.scenario.empty()) {
        throw InputError("simulate needs --scenario");
    }
    const auto file = read_scenario_file(req.scenario);
    auto rows = ordered_json::array();
    for (std::size_t i = 0; i < file.scenarios.size(); ++i) {
        const auto& entry = file.scenarios[i];
        if (file.task == SimulationTask::rejection) {
            rows.push_back(to_json(rejection_rate(entry.spec, req.config, entry.replications, seed,
                                                  i, req.threads)));
        } else {
            rows.push_back(to_json(lrv_accuracy(entry.spec, req.config, entry.replications, seed, i,
                                                req.threads)));
        }
    }
    return {{"task", std::string(to_string(file.task))}, {"rows", rows}};
}

std::uint64_t resolve_seed(const RunRequest& req) {
    if (req.command == Command::simulate && !req.seed_given && !req.scenario.empty()) {
        try {
            if (const auto s = read_scenario_file(req.scenario).seed) {
                return *s;
            }
        } catch (const Error&) {
            // reported by run_simulate
        }
    }
    return req.config.seed;
}

}  // namespace

RunResult dispatch(const RunRequest& req) {
    RunResult res;
    try {
        req.config.validate();
        if (req.segmentation.min_segment < 4) {
            throw ConfigError("--min-segment must be at least 4");
        }
        if (!(req.segmentation.exclusion_fraction >= 0.0 &&
              req.segmentation.exclusion_fraction < 0.5)) {
            throw ConfigError("--exclusion must lie in [0, 0.5)");
        }
        if (req.diff_lag && *req.diff_lag == 0) {
            throw ConfigError("--diff-lag must be >= 1");
        }
        if (req.detrend_degree && *req.detrend_degree > 10) {
            throw ConfigError("--detrend-degree must be at most 10");
        }

        const std::uint64_t seed = resolve_seed(req);
        RunRequest resolved = req;
        resolved.config.seed = seed;

        ordered_json doc;
        doc["version"] = std::string(kVersion);
        doc["command"] = std::string(to_string(req.command));
        doc["seed"] = seed;
        doc["config"] = request_json(resolved, seed);
        switch (req.command) {
            case Command::test: doc.update(run_test(resolved)); break;
            case Command::segment: doc.update(run_segment(resolved)); break;
            case Command::lrv: doc.update(run_lrv(resolved)); break;
            case Command::simulate: doc.update(run_simulate(resolved, seed)); break;
        }
        res.json = render(doc);
    } catch (const InputError& e) {
        res = {exit_input, {}, e.what()};
    } catch (const DegenerateDataError& e) {
        res = {exit_degenerate, {}, e.what()};
    } catch (const ConfigError& e) {
        res = {exit_config, {}, e.what()};
    } catch (const std::exception& e) {
        res = {exit_failure, {}, e.what()};
    }
    return res;
}

void write_atomically(const std::filesystem::path& path, std::string_view text) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InputError("cannot write '" + tmp.string() + "'");
        }
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.close();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw InputError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw InputError("cannot move output into place at '" + path.string() + "'");
    }
}

}  // namespace hetmean::io
