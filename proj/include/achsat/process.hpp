#pragma once

#include "achsat/formula.hpp"
#include "achsat/rules.hpp"

#include <cstdint>

namespace achsat {

struct ProcessConfig {
    std::uint32_t n = 0;
    std::uint32_t k = 3;
    std::uint32_t l = 1;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    RuleSpec rule{"always_first", {}};

    // Throws InvalidParameters unless l >= 1 and 1 <= k <= n.
    void validate() const;
};

// The l-clause Achlioptas process: each step draws l clauses uniformly with
// replacement, asks the rule for one of them and appends it. Deterministic in
// cfg.seed. The rule must be fresh for this trajectory.
Formula run_process(const ProcessConfig& cfg, SelectionRule& rule);

// Same, with the rule built from cfg.rule.
Formula run_process(const ProcessConfig& cfg);

// Each clause independently: with probability p uniform over all-positive
// 3-clauses, otherwise uniform over all 3-clauses.
Formula biased_3sat_sampler(std::uint32_t n, double p, std::uint64_t steps, std::uint64_t seed);

} // namespace achsat
