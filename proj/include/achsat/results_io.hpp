#pragma once

#include "achsat/gap.hpp"
#include "achsat/monte_carlo.hpp"
#include "achsat/threshold.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace achsat {

// git-describe style identifier captured at configure time.
std::string build_id();

nlohmann::json to_json(const MonteCarloConfig& cfg);
nlohmann::json to_json(const GapProblemSpec& spec);

// Every CSV written here starts with "# config: <json>" and "# build: <id>"
// lines, then the column header, then data rows.
void write_provenance(std::ostream& out, const nlohmann::json& config);

// One row per (trial, ratio): rule,k,l,n,ratio,steps,trial,seed,verdict.
// No timing columns, so the same seed always gives the same bytes.
void write_trials_csv(std::ostream& out, const MonteCarloConfig& cfg, const MonteCarloResult& res,
                      const nlohmann::json& config);

// Per-ratio fractions with Wilson intervals, config, build id and wall time.
nlohmann::json monte_carlo_summary_json(const MonteCarloConfig& cfg, const MonteCarloResult& res,
                                        const nlohmann::json& config);

// k,l,p0,p1,p2,r_kl,upper_bound_2k_ln2,margin
void write_threshold_csv(std::ostream& out, const std::vector<ThresholdParams>& rows,
                         const nlohmann::json& config);

// rule,decider,n,c1,c2,trials,errors,excluded,error_rate,ci_low,ci_high
void write_gap_csv(std::ostream& out, const GapProblemSpec& spec, const GapScore& score,
                   const nlohmann::json& config);

nlohmann::json gap_summary_json(const GapProblemSpec& spec, const GapScore& score, const nlohmann::json& config);

} // namespace achsat
