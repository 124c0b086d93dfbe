#pragma once

#include "achsat/formula.hpp"
#include "achsat/rules.hpp"
#include "achsat/solvers.hpp"
#include "achsat/stats.hpp"

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace achsat {

// Semi-random gap problem: decide from the clause stream alone whether the
// formula is unsatisfiable at step c1*n (answer NO) or satisfiable at step
// c2*n (answer YES). Between the two either answer is accepted.
struct GapProblemSpec {
    std::uint32_t k = 3;
    std::uint32_t l = 2;
    double c1 = 4;
    double c2 = 5;
    std::uint32_t n = 100;

    void validate() const;
    std::uint64_t low_step() const;  // round(c1 * n)
    std::uint64_t high_step() const; // round(c2 * n)
};

// The chosen clause of every step, in arrival order. This is all a decider
// ever sees: no rule identity, no candidate sets, no ground truth.
class ClauseStream {
public:
    ClauseStream() = default;
    explicit ClauseStream(Formula clauses) : clauses_(std::move(clauses)) {}

    std::uint32_t num_vars() const { return clauses_.num_vars(); }
    std::uint32_t width() const { return clauses_.width(); }
    std::size_t length() const { return clauses_.num_clauses(); }
    FormulaView prefix(std::size_t m) const { return clauses_.prefix(m); }
    FormulaView all() const { return clauses_.view(); }

private:
    Formula clauses_;
};

enum class GapCase {
    no_instance,  // unsat at c1*n: YES is an error
    yes_instance, // sat at c2*n: NO is an error
    either,       // first unsat step strictly inside (c1*n, c2*n]
    indeterminate // a solver call ran out of budget; excluded from scoring
};

std::string_view to_string(GapCase c);

struct GroundTruth {
    Verdict at_low = Verdict::unknown;
    Verdict at_high = Verdict::unknown;
    // Located by bisection, only for the `either` case and only on request.
    std::optional<std::uint64_t> first_unsat_step;

    GapCase classify() const;
    // sat at c2*n but unsat at c1*n cannot happen; true means a harness bug.
    bool monotonicity_violated() const { return at_high == Verdict::sat && at_low == Verdict::unsat; }
};

struct GapInstance {
    GapProblemSpec spec;
    std::uint64_t seed = 0;
    ClauseStream stream;
    GroundTruth truth;
};

enum class Answer { yes, no };

std::string_view to_string(Answer a);

// Deterministic given the stream and its own configuration.
class DecisionAlgorithm {
public:
    virtual ~DecisionAlgorithm() = default;
    virtual std::string name() const = 0;
    virtual Answer decide(const ClauseStream& stream, const GapProblemSpec& spec) const = 0;
};

// error iff (unsat at c1*n and YES) or (sat at c2*n and NO).
bool is_error(GapCase c, Answer a);

inline constexpr std::chrono::milliseconds kDefaultGapBudget{10'000};

// Runs the process for round(c2*n) steps and fixes the ground truth with
// DPLL. Solver timeouts leave the instance indeterminate. Bisecting for the
// first unsat step costs several more solver calls, so it is opt-in.
GapInstance generate_gap_instance(const GapProblemSpec& spec, const RuleSpec& rule, std::uint64_t seed,
                                  const SolveLimits& limits = {kDefaultGapBudget, 0},
                                  bool locate_first_unsat = false);

// One instance per (rule, trial); seed of trial t under rule i is
// derive_seed(derive_seed(seed, i), t). OpenMP over instances.
struct GapTrial {
    std::string rule;
    GapInstance instance;
};

std::vector<GapTrial> generate_gap_trials(const GapProblemSpec& spec, const std::vector<RuleSpec>& rules,
                                          std::uint64_t trials_per_rule, std::uint64_t seed,
                                          const SolveLimits& limits = {kDefaultGapBudget, 0},
                                          int threads = 0, bool locate_first_unsat = false);

struct RuleScore {
    std::string rule;
    std::uint64_t trials = 0;
    std::uint64_t excluded = 0; // indeterminate
    std::uint64_t errors = 0;
    std::uint64_t monotonicity_violations = 0;
    double error_rate = 0; // errors / (trials - excluded)
    Interval ci;
};

struct GapScore {
    std::string decider;
    std::vector<RuleScore> per_rule; // first-appearance order of rules
    // Worst case over rules.
    std::string worst_rule;
    double worst_error_rate = 0;
    Interval worst_ci;
    std::uint64_t total_trials = 0;
    std::uint64_t total_excluded = 0;
    std::uint64_t total_errors = 0;
    std::uint64_t monotonicity_violations = 0;
};

GapScore score_instances(const DecisionAlgorithm& decider, const std::vector<GapTrial>& trials);

GapScore score_decider(const DecisionAlgorithm& decider, const std::vector<RuleSpec>& rules,
                       const GapProblemSpec& spec, std::uint64_t trials, std::uint64_t seed,
                       const SolveLimits& limits = {kDefaultGapBudget, 0}, int threads = 0);

// --- Deciders --------------------------------------------------------------

class ConstantDecider final : public DecisionAlgorithm {
public:
    explicit ConstantDecider(Answer a) : answer_(a) {}
    std::string name() const override { return answer_ == Answer::yes ? "constant_yes" : "constant_no"; }
    Answer decide(const ClauseStream&, const GapProblemSpec&) const override { return answer_; }

private:
    Answer answer_;
};

// Exploratory stream statistics, each computed on the first round(c1*n)
// clauses and oriented so that larger values look more satisfiable.
enum class Statistic {
    positive_bias,             // fraction of clauses with >= 2 positive literals
    unit_propagation_survival, // fraction of random single-literal assignments
                               // that unit propagation does not refute
    two_core_density           // edges/n of the 2-core of the reduced formula's
                               // variable graph; used negated
};

std::string_view to_string(Statistic s);
Statistic parse_statistic(std::string_view text); // InvalidParameters if unknown

// Raw value (two_core_density is returned as the density, not negated).
double compute_statistic(Statistic s, FormulaView prefix, std::uint64_t seed);

class StatisticDecider final : public DecisionAlgorithm {
public:
    StatisticDecider(Statistic s, double threshold, std::uint64_t seed = 0);

    std::string name() const override;
    // YES iff oriented statistic >= threshold; threshold -inf gives constant YES.
    Answer decide(const ClauseStream& stream, const GapProblemSpec& spec) const override;

private:
    Statistic statistic_;
    double threshold_;
    std::uint64_t seed_;
};

std::unique_ptr<DecisionAlgorithm> statistic_decider(Statistic s, double threshold, std::uint64_t seed = 0);

// "constant_yes", "constant_no" or "<statistic>:<threshold>".
std::unique_ptr<DecisionAlgorithm> parse_decider(std::string_view text, std::uint64_t seed = 0);

// always_first, majority_positive, anti_majority, variable_concentrator,
// contradiction_seeker, random_coin.
std::vector<RuleSpec> adversary_library();

// DIMACS of the c1*n and c2*n prefixes plus a step-indexed clause log:
// <dir>/<stem>_low.cnf, <dir>/<stem>_high.cnf, <dir>/<stem>_stream.log
void export_gap_instance(const std::string& dir, const std::string& stem, const GapInstance& inst);

} // namespace achsat
