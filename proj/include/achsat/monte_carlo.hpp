#pragma once

#include "achsat/process.hpp"
#include "achsat/solvers.hpp"
#include "achsat/stats.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace achsat {

enum class DeciderKind { dpll, two_sat };

std::string_view to_string(DeciderKind d);
DeciderKind parse_decider_kind(std::string_view text);

struct MonteCarloConfig {
    std::uint32_t n = 0;
    std::uint32_t k = 2;
    std::uint32_t l = 1;
    RuleSpec rule{"always_first", {}};
    std::vector<double> ratios;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    DeciderKind decider = DeciderKind::two_sat;
    SolveLimits limits;
    // Once a checkpoint is unsat, later (larger) checkpoints are recorded
    // unsat without solving.
    bool short_circuit = true;

    // Throws InvalidParameters (bad n/k/l/ratios) or WidthError (two_sat with k != 2).
    void validate() const;
    // Clause count for ratio r: round(r * n).
    std::uint64_t steps_for(double ratio) const;
};

// One trajectory, checked at each requested ratio. verdicts[i] belongs to
// cfg.ratios[i].
struct TrialRecord {
    std::uint64_t trial_index = 0;
    std::uint64_t seed = 0;
    ProcessConfig process;
    std::vector<std::uint64_t> checkpoints;
    std::vector<Verdict> verdicts;
    double millis = 0;
};

struct RatioSummary {
    double ratio = 0;
    std::uint64_t steps = 0;
    std::uint64_t trials = 0;
    std::uint64_t sat = 0;
    std::uint64_t unsat = 0;
    std::uint64_t unknown = 0;
    double sat_fraction = 0; // sat / (sat + unsat)
    Interval ci;             // Wilson, 95%
};

struct MonteCarloResult {
    std::vector<TrialRecord> trials; // in trial-index order
    std::vector<RatioSummary> summary;
};

// Trial `index` of cfg; its seed is derive_seed(cfg.master_seed, index).
TrialRecord run_trial(const MonteCarloConfig& cfg, std::uint64_t index);

// Deterministic fold over records in index order.
std::vector<RatioSummary> summarize(const MonteCarloConfig& cfg, const std::vector<TrialRecord>& trials);

// Reference implementation: trials one after another.
MonteCarloResult monte_carlo_sat_fraction_serial(const MonteCarloConfig& cfg);

// OpenMP over trials; identical output to the serial path for any thread
// count (threads <= 0 means the OpenMP default).
MonteCarloResult monte_carlo_sat_fraction_parallel(const MonteCarloConfig& cfg, int threads = 0);

// Serial when threads == 1, parallel otherwise.
MonteCarloResult monte_carlo_sat_fraction(const MonteCarloConfig& cfg, int threads = 0);

} // namespace achsat
