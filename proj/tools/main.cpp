// hetmean: command line front end for the constant-mean test.

#include "hetmean/errors.hpp"
#include "hetmean/io/dispatch.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using hetmean::io::RunRequest;

void add_test_options(CLI::App& cmd, RunRequest& req, std::string& variant) {
    cmd.add_option("--s", req.config.s, "block length exponent, l = floor(n^s)")
        ->capture_default_str();
    cmd.add_option("--q", req.config.q, "subsampling block length exponent")->capture_default_str();
    cmd.add_option("--c0", req.config.c0, "centring window radius in subsampling blocks")
        ->capture_default_str();
    cmd.add_option("--alpha", req.config.alpha, "significance level")->capture_default_str();
    cmd.add_option("--variant", variant, "full | simplified")->capture_default_str();
    cmd.add_option("--psi-reps", req.config.psi_mc_reps, "Monte Carlo draws for psi")
        ->capture_default_str();
    cmd.add_option("--seed", req.config.seed, "random seed")->capture_default_str();
}

void add_input_options(CLI::App& cmd, RunRequest& req, std::optional<std::size_t>& diff_lag,
                       std::optional<std::size_t>& degree) {
    cmd.add_option("--input", req.input, "CSV file with the series")->required();
    cmd.add_option("--column", req.column, "column name or 1-based number (default: last)");
    cmd.add_option("--diff-lag", diff_lag, "difference at this lag before testing");
    cmd.add_option("--detrend-degree", degree, "remove a least-squares polynomial trend");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Test for a constant mean in heteroscedastic time series"};
    app.set_version_flag("--version", std::string(hetmean::io::kVersion));
    app.require_subcommand(1);

    RunRequest req;
    std::string variant = "full";
    std::string output;
    std::optional<std::size_t> diff_lag;
    std::optional<std::size_t> degree;

    auto* test = app.add_subcommand("test", "test the series for a constant mean");
    auto* segment = app.add_subcommand("segment", "recursive change-point segmentation");
    auto* lrv = app.add_subcommand("lrv", "long run standard deviation estimates");
    auto* simulate = app.add_subcommand("simulate", "rejection rates or LRV accuracy from a scenario file");

    for (auto* cmd : {test, segment, lrv}) {
        add_test_options(*cmd, req, variant);
        add_input_options(*cmd, req, diff_lag, degree);
        cmd->add_option("--output", output, "write the JSON here instead of stdout");
    }
    segment->add_option("--min-segment", req.segmentation.min_segment, "shortest segment that is tested")
        ->capture_default_str();
    segment->add_option("--exclusion", req.segmentation.exclusion_fraction,
                        "fraction of the search window skipped at each end")
        ->capture_default_str();

    add_test_options(*simulate, req, variant);
    simulate->add_option("--scenario", req.scenario, "scenario JSON file")->required();
    simulate->add_option("--threads", req.threads, "worker threads (0: all cores)")
        ->capture_default_str();
    simulate->add_option("--output", output, "write the JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\nRun with --help for more information.\n";
        return hetmean::io::exit_config;
    }

    if (test->parsed()) req.command = hetmean::io::Command::test;
    if (segment->parsed()) req.command = hetmean::io::Command::segment;
    if (lrv->parsed()) req.command = hetmean::io::Command::lrv;
    if (simulate->parsed()) req.command = hetmean::io::Command::simulate;
    req.diff_lag = diff_lag;
    req.detrend_degree = degree;
    for (auto* cmd : {test, segment, lrv, simulate}) {
        if (cmd->parsed() && cmd->count("--seed") > 0) {
            req.seed_given = true;
        }
    }

    try {
        req.config.variant = hetmean::parse_variant(variant);
    } catch (const hetmean::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hetmean::io::exit_config;
    }

    const auto result = hetmean::io::dispatch(req);
    if (result.exit_code != hetmean::io::exit_ok) {
        std::cerr << "error: " << result.error << '\n';
        return result.exit_code;
    }
    if (output.empty()) {
        std::cout << result.json;
        return hetmean::io::exit_ok;
    }
    try {
        hetmean::io::write_atomically(output, result.json);
    } catch (const hetmean::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hetmean::io::exit_input;
    }
    return hetmean::io::exit_ok;
}
