#include "achsat/results_io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#ifndef ACHSAT_BUILD_ID
#define ACHSAT_BUILD_ID "unknown"
#endif

namespace achsat {

namespace {

std::string num(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

} // namespace

std::string build_id()
{
    return ACHSAT_BUILD_ID;
}

nlohmann::json to_json(const MonteCarloConfig& cfg)
{
    return {{"n", cfg.n},
            {"k", cfg.k},
            {"l", cfg.l},
            {"rule", cfg.rule.to_string()},
            {"ratios", cfg.ratios},
            {"trials", cfg.trials},
            {"seed", cfg.master_seed},
            {"decider", std::string(to_string(cfg.decider))},
            {"short_circuit", cfg.short_circuit}};
}

nlohmann::json to_json(const GapProblemSpec& spec)
{
    return {{"k", spec.k}, {"l", spec.l}, {"c1", spec.c1}, {"c2", spec.c2}, {"n", spec.n}};
}

void write_provenance(std::ostream& out, const nlohmann::json& config)
{
    out << "# config: " << config.dump() << '\n';
    out << "# build: " << build_id() << '\n';
}

void write_trials_csv(std::ostream& out, const MonteCarloConfig& cfg, const MonteCarloResult& res,
                      const nlohmann::json& config)
{
    write_provenance(out, config);
    out << "rule,k,l,n,ratio,steps,trial,seed,verdict\n";
    const std::string rule = cfg.rule.to_string();
    for (const auto& t : res.trials)
        for (std::size_t i = 0; i < cfg.ratios.size(); ++i)
            out << rule << ',' << cfg.k << ',' << cfg.l << ',' << cfg.n << ',' << num(cfg.ratios[i]) << ','
                << t.checkpoints[i] << ',' << t.trial_index << ',' << t.seed << ',' << to_string(t.verdicts[i])
                << '\n';
}

nlohmann::json monte_carlo_summary_json(const MonteCarloConfig& cfg, const MonteCarloResult& res,
                                        const nlohmann::json& config)
{
    nlohmann::json ratios = nlohmann::json::array();
    for (const auto& s : res.summary)
        ratios.push_back({{"ratio", s.ratio},
                          {"steps", s.steps},
                          {"trials", s.trials},
                          {"sat", s.sat},
                          {"unsat", s.unsat},
                          {"unknown", s.unknown},
                          {"sat_fraction", s.sat_fraction},
                          {"wilson_low", s.ci.lo},
                          {"wilson_high", s.ci.hi}});
    // Timing lives here rather than in the CSV so reruns give identical CSVs.
    double total_ms = 0, max_ms = 0;
    for (const auto& t : res.trials) {
        total_ms += t.millis;
        max_ms = std::max(max_ms, t.millis);
    }
    return {{"config", config},
            {"build", build_id()},
            {"rule", cfg.rule.to_string()},
            {"results", ratios},
            {"timing_ms", {{"total", total_ms}, {"max_trial", max_ms}}}};
}

void write_threshold_csv(std::ostream& out, const std::vector<ThresholdParams>& rows, const nlohmann::json& config)
{
    write_provenance(out, config);
    out << "k,l,p0,p1,p2,r_kl,upper_bound_2k_ln2,margin\n";
    for (const auto& p : rows) {
        const double ub = first_moment_upper_bound(p.k);
        out << p.k << ',' << p.l << ',' << num(p.p0) << ',' << num(p.p1) << ',' << num(p.p2) << ','
            << num(p.r_kl) << ',' << num(ub) << ',' << num(p.r_kl - ub) << '\n';
    }
}

void write_gap_csv(std::ostream& out, const GapProblemSpec& spec, const GapScore& score,
                   const nlohmann::json& config)
{
    write_provenance(out, config);
    out << "rule,decider,n,c1,c2,trials,errors,excluded,error_rate,ci_low,ci_high\n";
    for (const auto& r : score.per_rule)
        out << r.rule << ',' << score.decider << ',' << spec.n << ',' << num(spec.c1) << ',' << num(spec.c2)
            << ',' << r.trials << ',' << r.errors << ',' << r.excluded << ',' << num(r.error_rate) << ','
            << num(r.ci.lo) << ',' << num(r.ci.hi) << '\n';
}

nlohmann::json gap_summary_json(const GapProblemSpec& spec, const GapScore& score, const nlohmann::json& config)
{
    nlohmann::json rules = nlohmann::json::array();
    for (const auto& r : score.per_rule)
        rules.push_back({{"rule", r.rule},
                         {"trials", r.trials},
                         {"errors", r.errors},
                         {"excluded", r.excluded},
                         {"monotonicity_violations", r.monotonicity_violations},
                         {"error_rate", r.error_rate},
                         {"ci_low", r.ci.lo},
                         {"ci_high", r.ci.hi}});
    return {{"config", config},
            {"build", build_id()},
            {"problem", to_json(spec)},
            {"decider", score.decider},
            {"per_rule", rules},
            {"worst_case",
             {{"rule", score.worst_rule},
              {"error_rate", score.worst_error_rate},
              {"ci_low", score.worst_ci.lo},
              {"ci_high", score.worst_ci.hi}}},
            {"totals",
             {{"trials", score.total_trials},
              {"errors", score.total_errors},
              {"excluded", score.total_excluded},
              {"monotonicity_violations", score.monotonicity_violations}}}};
}

} // namespace achsat
