#include "achsat/process.hpp"

#include "achsat/error.hpp"
#include "achsat/sampling.hpp"

#include <array>
#include <string>
#include <vector>

namespace achsat {

void ProcessConfig::validate() const
{
    if (l < 1)
        throw InvalidParameters("need l >= 1");
    if (k < 1 || k > n)
        throw InvalidParameters("need 1 <= k <= n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
}

Formula run_process(const ProcessConfig& cfg, SelectionRule& rule)
{
    cfg.validate();
    Rng rng(cfg.seed);
    Formula f(cfg.n, cfg.k);
    f.reserve(cfg.steps);

    const std::size_t step_lits = std::size_t{cfg.l} * cfg.k;
    const bool keep_history = rule.needs_history();
    std::vector<Literal> history;
    std::vector<Literal> scratch(step_lits);

    for (std::uint64_t step = 0; step < cfg.steps; ++step) {
        for (std::uint32_t i = 0; i < cfg.l; ++i)
            sample_clause_into(std::span(scratch).subspan(i * cfg.k, cfg.k), cfg.n, rng);
        const Candidates candidates(scratch, cfg.k);
        const ProcessView view{f.view(), history, cfg.l};
        const std::size_t chosen = rule.choose(candidates, view, rng);
        if (chosen >= cfg.l)
            throw Error("rule " + rule.name() + " returned index " + std::to_string(chosen) +
                        " outside [0," + std::to_string(cfg.l) + ")");
        f.add_unchecked(candidates[chosen]);
        if (keep_history)
            history.insert(history.end(), scratch.begin(), scratch.end());
    }
    return f;
}

Formula run_process(const ProcessConfig& cfg)
{
    cfg.validate();
    auto rule = make_rule(cfg.rule, {cfg.n, cfg.k, cfg.l});
    return run_process(cfg, *rule);
}

Formula biased_3sat_sampler(std::uint32_t n, double p, std::uint64_t steps, std::uint64_t seed)
{
    if (!(p >= 0 && p <= 1))
        throw InvalidParameters("bias p must lie in [0,1]");
    Rng rng(seed);
    Formula f(n, 3);
    f.reserve(steps);
    std::bernoulli_distribution biased(p);
    std::array<Literal, 3> clause{};
    for (std::uint64_t i = 0; i < steps; ++i) {
        if (biased(rng))
            sample_positive_clause_into(clause, n, rng);
        else
            sample_clause_into(clause, n, rng);
        f.add_unchecked(clause);
    }
    return f;
}

} // namespace achsat
