#include "achsat/monte_carlo.hpp"

#include "achsat/error.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace achsat {

std::string_view to_string(DeciderKind d)
{
    return d == DeciderKind::dpll ? "dpll" : "two_sat";
}

DeciderKind parse_decider_kind(std::string_view text)
{
    if (text == "dpll")
        return DeciderKind::dpll;
    if (text == "two_sat" || text == "2sat")
        return DeciderKind::two_sat;
    throw InvalidParameters("unknown decider '" + std::string(text) + "'");
}

void MonteCarloConfig::validate() const
{
    ProcessConfig{n, k, l, 0, 0, rule}.validate();
    for (double r : ratios)
        if (!(r >= 0) || !std::isfinite(r))
            throw InvalidParameters("ratios must be finite and non-negative");
    if (decider == DeciderKind::two_sat && k != 2)
        throw WidthError("two_sat decider requires k = 2");
    // Surface rule/arity errors before any work is done.
    make_rule(rule, {n, k, l});
}

std::uint64_t MonteCarloConfig::steps_for(double ratio) const
{
    return static_cast<std::uint64_t>(std::llround(ratio * n));
}

TrialRecord run_trial(const MonteCarloConfig& cfg, std::uint64_t index)
{
    const auto start = std::chrono::steady_clock::now();

    TrialRecord rec;
    rec.trial_index = index;
    rec.seed = derive_seed(cfg.master_seed, index);
    rec.checkpoints.reserve(cfg.ratios.size());
    for (double r : cfg.ratios)
        rec.checkpoints.push_back(cfg.steps_for(r));
    const std::uint64_t steps =
        rec.checkpoints.empty() ? 0 : *std::max_element(rec.checkpoints.begin(), rec.checkpoints.end());
    rec.process = ProcessConfig{cfg.n, cfg.k, cfg.l, steps, rec.seed, cfg.rule};

    const Formula f = run_process(rec.process);

    std::vector<std::size_t> order(rec.checkpoints.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rec.checkpoints[a] < rec.checkpoints[b]; });

    rec.verdicts.assign(rec.checkpoints.size(), Verdict::unknown);
    bool seen_unsat = false;
    for (std::size_t i : order) {
        if (cfg.short_circuit && seen_unsat) {
            rec.verdicts[i] = Verdict::unsat;
            continue;
        }
        const FormulaView prefix = f.prefix(rec.checkpoints[i]);
        const SolveResult res = cfg.decider == DeciderKind::two_sat ? two_sat_satisfiable(prefix)
                                                                    : dpll_satisfiable(prefix, cfg.limits);
        rec.verdicts[i] = res.verdict;
        seen_unsat = seen_unsat || res.unsat();
    }

    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<RatioSummary> summarize(const MonteCarloConfig& cfg, const std::vector<TrialRecord>& trials)
{
    if (trials.empty())
        return {};
    std::vector<RatioSummary> out(cfg.ratios.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].ratio = cfg.ratios[i];
        out[i].steps = cfg.steps_for(cfg.ratios[i]);
    }
    for (const auto& t : trials)
        for (std::size_t i = 0; i < out.size(); ++i) {
            ++out[i].trials;
            switch (t.verdicts[i]) {
            case Verdict::sat:
                ++out[i].sat;
                break;
            case Verdict::unsat:
                ++out[i].unsat;
                break;
            case Verdict::unknown:
                ++out[i].unknown;
                break;
            }
        }
    for (auto& s : out) {
        const std::uint64_t decided = s.sat + s.unsat;
        s.sat_fraction = decided == 0 ? 0.0 : static_cast<double>(s.sat) / static_cast<double>(decided);
        s.ci = wilson_interval(s.sat, decided);
    }
    return out;
}

MonteCarloResult monte_carlo_sat_fraction_serial(const MonteCarloConfig& cfg)
{
    cfg.validate();
    MonteCarloResult res;
    res.trials.reserve(cfg.trials);
    for (std::uint64_t t = 0; t < cfg.trials; ++t)
        res.trials.push_back(run_trial(cfg, t));
    res.summary = summarize(cfg, res.trials);
    return res;
}

MonteCarloResult monte_carlo_sat_fraction_parallel(const MonteCarloConfig& cfg, int threads)
{
    cfg.validate();
    MonteCarloResult res;
    res.trials.resize(cfg.trials);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(cfg.trials);

#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
#endif
    for (std::int64_t t = 0; t < count; ++t) {
        try {
            res.trials[static_cast<std::size_t>(t)] = run_trial(cfg, static_cast<std::uint64_t>(t));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(achsat_mc_failure)
#endif
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    res.summary = summarize(cfg, res.trials);
    return res;
}

MonteCarloResult monte_carlo_sat_fraction(const MonteCarloConfig& cfg, int threads)
{
    return threads == 1 ? monte_carlo_sat_fraction_serial(cfg)
                        : monte_carlo_sat_fraction_parallel(cfg, threads);
}

} // namespace achsat
