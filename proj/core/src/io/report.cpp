#include "report.hpp"

namespace hetmean::io {

using nlohmann::ordered_json;

ordered_json to_json(const BlockScheme& s) {
    return {{"n", s.n},
            {"s", s.s},
            {"block_length", s.block_length},
            {"block_count", s.block_count},
            {"discarded_tail", s.discarded_tail}};
}

ordered_json to_json(const SubsamplingScheme& s) {
    return {{"n", s.n},
            {"q", s.q},
            {"sub_length", s.sub_length},
            {"sub_count", s.sub_count},
            {"c0", s.c0}};
}

ordered_json to_json(const TestConfig& cfg) {
    return {{"s", cfg.s},
            {"q", cfg.q},
            {"c0", cfg.c0},
            {"alpha", cfg.alpha},
            {"variant", std::string(to_string(cfg.variant))},
            {"psi_mc_reps", cfg.psi_mc_reps},
            {"seed", cfg.seed}};
}

ordered_json to_json(const TestOutcome& out) {
    ordered_json j;
    j["variant"] = std::string(to_string(out.variant));
    j["statistic"] = out.statistic;
    j["p_value"] = out.p_value;
    j["critical_value"] = out.critical_value;
    j["alpha"] = out.alpha;
    j["reject"] = out.reject;
    j["u_value"] = out.u_value;
    j["kappa_tilde"] = out.kappa_tilde;
    j["kappa_hat"] = out.kappa_hat ? ordered_json(*out.kappa_hat) : ordered_json(nullptr);
    j["centring"] = out.centring;
    j["psi_sq"] = out.psi_sq;
    j["psi_mc_reps"] = out.psi_mc_reps;
    j["seed"] = out.seed;
    j["blocks"] = to_json(out.blocks);
    j["subsampling"] = to_json(out.subsampling);
    j["block_means"] = out.block_means;
    j["block_sds"] = out.block_sds;
    return j;
}

ordered_json to_json(const ScenarioSpec& scn) {
    ordered_json dgp{{"kind", std::string(to_string(scn.dgp.kind))}, {"burn_in", scn.dgp.burn_in}};
    if (scn.dgp.kind == DGPKind::ar1) {
        dgp["ar"] = scn.dgp.ar;
    }
    if (scn.dgp.kind == DGPKind::nonlinear_ar1) {
        dgp["lambda"] = scn.dgp.nonlinear_lambda;
    }
    return {{"label", scn.label()},
            {"dgp", dgp},
            {"mean", std::string(to_string(scn.mean))},
            {"variance", std::string(to_string(scn.variance))},
            {"theta_mu", scn.resolved_theta_mu()},
            {"theta_sigma", scn.resolved_theta_sigma()},
            {"n", scn.n}};
}

ordered_json to_json(const ChangePointSet& cps, const TimeSeries& x) {
    ordered_json j;
    j["breaks"] = cps.break_indices;
    auto labels = ordered_json::array();
    for (std::size_t t : cps.break_indices) {
        labels.push_back(x.label(t - 1));  // last observation before the change
    }
    j["break_labels"] = labels;
    j["segment_means"] = cps.segment_means;

    auto splits = ordered_json::array();
    for (const auto& s : cps.splits) {
        splits.push_back({{"segment_begin", s.segment_begin},
                          {"segment_end", s.segment_end},
                          {"break", s.break_index},
                          {"break_label", x.label(s.break_index - 1)},
                          {"test", to_json(s.outcome)}});
    }
    j["splits"] = splits;

    const auto step = piecewise_mean(x.values(), cps.break_indices);
    auto pairs = ordered_json::array();
    for (std::size_t i = 0; i < step.size(); ++i) {
        pairs.push_back(ordered_json::array({i + 1, step[i]}));
    }
    j["piecewise_mean"] = pairs;
    return j;
}

ordered_json to_json(const RejectionRate& row) {
    return {{"scenario", to_json(row.scenario)},
            {"replications", row.replications},
            {"rejections", row.rejections},
            {"failures", row.failures},
            {"rate", row.rate}};
}

ordered_json to_json(const LrvAccuracy& row) {
    return {{"scenario", to_json(row.scenario)},
            {"replications", row.replications},
            {"bias", row.bias},
            {"rmse", row.rmse}};
}

ordered_json request_json(const RunRequest& req, std::uint64_t seed) {
    auto cfg = to_json(req.config);
    cfg["seed"] = seed;
    ordered_json j{{"command", std::string(to_string(req.command))}, {"test", cfg}};
    if (req.command == Command::simulate) {
        j["scenario"] = req.scenario;
        return j;
    }
    j["input"] = req.input;
    j["column"] = req.column;
    j["diff_lag"] = req.diff_lag ? ordered_json(*req.diff_lag) : ordered_json(nullptr);
    j["detrend_degree"] =
        req.detrend_degree ? ordered_json(*req.detrend_degree) : ordered_json(nullptr);
    if (req.command == Command::segment) {
        j["min_segment"] = req.segmentation.min_segment;
        j["exclusion"] = req.segmentation.exclusion_fraction;
    }
    return j;
}

std::string render(const ordered_json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace hetmean::io
