#include "achsat/gap.hpp"

#include "achsat/dimacs.hpp"
#include "achsat/error.hpp"
#include "achsat/process.hpp"
#include "achsat/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace achsat {

void GapProblemSpec::validate() const
{
    if (!(c1 > 0 && c1 < c2) || !std::isfinite(c2))
        throw InvalidParameters("gap problem needs 0 < c1 < c2");
    ProcessConfig{n, k, l, 0, 0, {}}.validate();
}

std::uint64_t GapProblemSpec::low_step() const
{
    return static_cast<std::uint64_t>(std::llround(c1 * n));
}

std::uint64_t GapProblemSpec::high_step() const
{
    return static_cast<std::uint64_t>(std::llround(c2 * n));
}

std::string_view to_string(GapCase c)
{
    switch (c) {
    case GapCase::no_instance:
        return "no";
    case GapCase::yes_instance:
        return "yes";
    case GapCase::either:
        return "either";
    case GapCase::indeterminate:
        break;
    }
    return "indeterminate";
}

std::string_view to_string(Answer a)
{
    return a == Answer::yes ? "YES" : "NO";
}

GapCase GroundTruth::classify() const
{
    if (monotonicity_violated())
        return GapCase::indeterminate;
    if (at_low == Verdict::unsat)
        return GapCase::no_instance;
    if (at_high == Verdict::sat)
        return GapCase::yes_instance;
    if (at_low == Verdict::sat && at_high == Verdict::unsat)
        return GapCase::either;
    return GapCase::indeterminate;
}

bool is_error(GapCase c, Answer a)
{
    return (c == GapCase::no_instance && a == Answer::yes) || (c == GapCase::yes_instance && a == Answer::no);
}

GapInstance generate_gap_instance(const GapProblemSpec& spec, const RuleSpec& rule, std::uint64_t seed,
                                  const SolveLimits& limits, bool locate_first_unsat)
{
    spec.validate();
    const std::uint64_t low = spec.low_step();
    const std::uint64_t high = spec.high_step();

    GapInstance inst;
    inst.spec = spec;
    inst.seed = seed;
    inst.stream = ClauseStream(run_process({spec.n, spec.k, spec.l, high, seed, rule}));

    const auto verdict_at = [&](std::uint64_t m) { return dpll_satisfiable(inst.stream.prefix(m), limits).verdict; };
    inst.truth.at_low = verdict_at(low);
    inst.truth.at_high = verdict_at(high);

    if (locate_first_unsat && inst.truth.at_low == Verdict::sat && inst.truth.at_high == Verdict::unsat) {
        // Satisfiability is monotone along the stream: sat at lo, unsat at hi.
        std::uint64_t lo = low, hi = high;
        bool complete = true;
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            const Verdict v = verdict_at(mid);
            if (v == Verdict::unknown) {
                complete = false;
                break;
            }
            (v == Verdict::sat ? lo : hi) = mid;
        }
        if (complete)
            inst.truth.first_unsat_step = hi;
    }
    return inst;
}

std::vector<GapTrial> generate_gap_trials(const GapProblemSpec& spec, const std::vector<RuleSpec>& rules,
                                          std::uint64_t trials_per_rule, std::uint64_t seed,
                                          const SolveLimits& limits, [[maybe_unused]] int threads,
                                          bool locate_first_unsat)
{
    spec.validate();
    for (const auto& r : rules)
        make_rule(r, {spec.n, spec.k, spec.l});

    const std::uint64_t total = rules.size() * trials_per_rule;
    std::vector<GapTrial> out(total);
    std::exception_ptr failure;

#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
        const auto i = static_cast<std::uint64_t>(idx) / trials_per_rule;
        const auto t = static_cast<std::uint64_t>(idx) % trials_per_rule;
        try {
            auto& slot = out[static_cast<std::size_t>(idx)];
            slot.rule = rules[i].to_string();
            slot.instance = generate_gap_instance(spec, rules[i], derive_seed(derive_seed(seed, i), t), limits,
                                                  locate_first_unsat);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(achsat_gap_failure)
#endif
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

GapScore score_instances(const DecisionAlgorithm& decider, const std::vector<GapTrial>& trials)
{
    GapScore score;
    score.decider = decider.name();
    std::map<std::string, std::size_t> slot;
    for (const auto& trial : trials) {
        auto [it, fresh] = slot.try_emplace(trial.rule, score.per_rule.size());
        if (fresh) {
            RuleScore fresh_score;
            fresh_score.rule = trial.rule;
            score.per_rule.push_back(std::move(fresh_score));
        }
        RuleScore& rs = score.per_rule[it->second];

        ++rs.trials;
        const GroundTruth& truth = trial.instance.truth;
        if (truth.monotonicity_violated())
            ++rs.monotonicity_violations;
        const GapCase c = truth.classify();
        if (c == GapCase::indeterminate) {
            ++rs.excluded;
            continue;
        }
        if (is_error(c, decider.decide(trial.instance.stream, trial.instance.spec)))
            ++rs.errors;
    }

    score.worst_error_rate = -1;
    for (auto& rs : score.per_rule) {
        const std::uint64_t scored = rs.trials - rs.excluded;
        rs.error_rate = scored == 0 ? 0.0 : static_cast<double>(rs.errors) / static_cast<double>(scored);
        rs.ci = wilson_interval(rs.errors, scored);
        score.total_trials += rs.trials;
        score.total_excluded += rs.excluded;
        score.total_errors += rs.errors;
        score.monotonicity_violations += rs.monotonicity_violations;
        if (rs.error_rate > score.worst_error_rate) {
            score.worst_error_rate = rs.error_rate;
            score.worst_rule = rs.rule;
            score.worst_ci = rs.ci;
        }
    }
    if (score.per_rule.empty())
        score.worst_error_rate = 0;
    return score;
}

GapScore score_decider(const DecisionAlgorithm& decider, const std::vector<RuleSpec>& rules,
                       const GapProblemSpec& spec, std::uint64_t trials, std::uint64_t seed,
                       const SolveLimits& limits, int threads)
{
    if (trials < 1)
        throw InvalidParameters("need at least one trial");
    return score_instances(decider, generate_gap_trials(spec, rules, trials, seed, limits, threads));
}

std::string_view to_string(Statistic s)
{
    switch (s) {
    case Statistic::positive_bias:
        return "positive_bias";
    case Statistic::unit_propagation_survival:
        return "unit_propagation_survival";
    case Statistic::two_core_density:
        break;
    }
    return "two_core_density";
}

Statistic parse_statistic(std::string_view text)
{
    for (auto s : {Statistic::positive_bias, Statistic::unit_propagation_survival, Statistic::two_core_density})
        if (text == to_string(s))
            return s;
    throw InvalidParameters("unknown statistic '" + std::string(text) + "'");
}

namespace {

constexpr int kSurvivalSamples = 64;

// Sets one literal and runs unit propagation; true if no clause is falsified.
class UnitProbe {
public:
    explicit UnitProbe(FormulaView f)
        : f_(f), value_(f.num_vars() + 1, -1), occurrences_(2 * std::size_t{f.num_vars()}),
          false_count_(f.num_clauses(), 0), sat_count_(f.num_clauses(), 0)
    {
        for (std::size_t c = 0; c < f.num_clauses(); ++c)
            for (Literal l : f.clause(c))
                occurrences_[l.code()].push_back(static_cast<std::uint32_t>(c));
    }

    bool survives(Literal start)
    {
        bool ok = true;
        queue_.assign(1, start);
        while (!queue_.empty() && ok) {
            const Literal l = queue_.back();
            queue_.pop_back();
            const auto v = value_[l.var()];
            if (v != -1) {
                ok = (v == 1) == l.positive();
                continue;
            }
            value_[l.var()] = l.positive() ? 1 : 0;
            trail_.push_back(l);
            for (auto c : occurrences_[l.code()])
                ++sat_count_[c];
            for (auto c : occurrences_[(~l).code()]) {
                ++false_count_[c];
                if (sat_count_[c] != 0)
                    continue;
                if (false_count_[c] == f_.width()) {
                    ok = false;
                } else if (false_count_[c] + 1 == f_.width()) {
                    for (Literal x : f_.clause(c))
                        if (value_[x.var()] == -1) {
                            queue_.push_back(x);
                            break;
                        }
                }
            }
        }
        for (Literal l : trail_) {
            value_[l.var()] = -1;
            for (auto c : occurrences_[l.code()])
                --sat_count_[c];
            for (auto c : occurrences_[(~l).code()])
                --false_count_[c];
        }
        trail_.clear();
        return ok;
    }

private:
    FormulaView f_;
    std::vector<std::int8_t> value_;
    std::vector<std::vector<std::uint32_t>> occurrences_;
    std::vector<std::uint32_t> false_count_, sat_count_;
    std::vector<Literal> trail_, queue_;
};

double two_core_density(FormulaView prefix)
{
    const std::uint32_t n = prefix.num_vars();
    if (n == 0)
        return 0;
    const Formula reduced = reduce_to_2sat(prefix);
    std::vector<std::vector<std::uint32_t>> incident(n + 1);
    std::vector<std::array<std::uint32_t, 2>> edges;
    for (std::size_t c = 0; c < reduced.num_clauses(); ++c) {
        const auto cl = reduced.clause(c);
        const std::uint32_t e = static_cast<std::uint32_t>(edges.size());
        edges.push_back({cl[0].var(), cl[1].var()});
        incident[cl[0].var()].push_back(e);
        incident[cl[1].var()].push_back(e);
    }
    std::vector<std::uint32_t> degree(n + 1);
    std::vector<std::uint32_t> peel;
    for (std::uint32_t v = 1; v <= n; ++v) {
        degree[v] = static_cast<std::uint32_t>(incident[v].size());
        if (degree[v] < 2)
            peel.push_back(v);
    }
    std::vector<std::uint8_t> removed_vertex(n + 1, 0), removed_edge(edges.size(), 0);
    std::size_t live_edges = edges.size();
    while (!peel.empty()) {
        const auto v = peel.back();
        peel.pop_back();
        if (removed_vertex[v])
            continue;
        removed_vertex[v] = 1;
        for (auto e : incident[v]) {
            if (removed_edge[e])
                continue;
            removed_edge[e] = 1;
            --live_edges;
            const auto other = edges[e][0] == v ? edges[e][1] : edges[e][0];
            if (!removed_vertex[other] && --degree[other] < 2)
                peel.push_back(other);
        }
    }
    return static_cast<double>(live_edges) / n;
}

} // namespace

double compute_statistic(Statistic s, FormulaView prefix, std::uint64_t seed)
{
    switch (s) {
    case Statistic::positive_bias: {
        if (prefix.num_clauses() == 0)
            return 0;
        std::size_t biased = 0;
        for (std::size_t c = 0; c < prefix.num_clauses(); ++c)
            biased += count_positive(prefix.clause(c)) >= 2;
        return static_cast<double>(biased) / static_cast<double>(prefix.num_clauses());
    }
    case Statistic::unit_propagation_survival: {
        if (prefix.num_vars() == 0)
            return 1;
        UnitProbe probe(prefix);
        Rng rng(seed);
        std::uniform_int_distribution<std::uint32_t> var(1, prefix.num_vars());
        int alive = 0;
        for (int i = 0; i < kSurvivalSamples; ++i) {
            const std::uint32_t v = var(rng);
            alive += probe.survives(Literal(v, (rng() & 1u) != 0));
        }
        return static_cast<double>(alive) / kSurvivalSamples;
    }
    case Statistic::two_core_density:
        return two_core_density(prefix);
    }
    return 0;
}

StatisticDecider::StatisticDecider(Statistic s, double threshold, std::uint64_t seed)
    : statistic_(s), threshold_(threshold), seed_(seed)
{
    if (std::isnan(threshold) || threshold == std::numeric_limits<double>::infinity())
        throw InvalidParameters("statistic threshold must be finite or -inf");
}

std::string StatisticDecider::name() const
{
    std::ostringstream os;
    os << to_string(statistic_) << ':' << threshold_;
    return os.str();
}

Answer StatisticDecider::decide(const ClauseStream& stream, const GapProblemSpec& spec) const
{
    const std::size_t m = std::min<std::size_t>(stream.length(), spec.low_step());
    double value = compute_statistic(statistic_, stream.prefix(m), seed_);
    if (statistic_ == Statistic::two_core_density)
        value = -value;
    return value >= threshold_ ? Answer::yes : Answer::no;
}

std::unique_ptr<DecisionAlgorithm> statistic_decider(Statistic s, double threshold, std::uint64_t seed)
{
    return std::make_unique<StatisticDecider>(s, threshold, seed);
}

std::unique_ptr<DecisionAlgorithm> parse_decider(std::string_view text, std::uint64_t seed)
{
    if (text == "constant_yes")
        return std::make_unique<ConstantDecider>(Answer::yes);
    if (text == "constant_no")
        return std::make_unique<ConstantDecider>(Answer::no);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InvalidParameters("decider must be constant_yes, constant_no or <statistic>:<threshold>");
    const Statistic s = parse_statistic(text.substr(0, colon));
    const std::string th(text.substr(colon + 1));
    double threshold;
    if (th == "-inf")
        threshold = -std::numeric_limits<double>::infinity();
    else {
        try {
            std::size_t used = 0;
            threshold = std::stod(th, &used);
            if (used != th.size())
                throw InvalidParameters("bad threshold '" + th + "'");
        } catch (const std::logic_error&) {
            throw InvalidParameters("bad threshold '" + th + "'");
        }
    }
    return statistic_decider(s, threshold, seed);
}

std::vector<RuleSpec> adversary_library()
{
    return {{"always_first", {}},          {"majority_positive", {}},    {"anti_majority", {}},
            {"variable_concentrator", {}}, {"contradiction_seeker", {}}, {"random_coin", {}}};
}

void export_gap_instance(const std::string& dir, const std::string& stem, const GapInstance& inst)
{
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const fs::path base(dir);
    std::vector<std::string> comments{"seed " + std::to_string(inst.seed),
                                      "ground truth " + std::string(to_string(inst.truth.classify()))};
    if (inst.truth.first_unsat_step)
        comments.push_back("first unsat step " + std::to_string(*inst.truth.first_unsat_step));
    write_dimacs_file((base / (stem + "_low.cnf")).string(), inst.stream.prefix(inst.spec.low_step()), comments);
    write_dimacs_file((base / (stem + "_high.cnf")).string(), inst.stream.prefix(inst.spec.high_step()), comments);

    std::ofstream log(base / (stem + "_stream.log"));
    if (!log)
        throw Error("cannot write clause log in " + dir);
    const FormulaView all = inst.stream.all();
    for (std::size_t i = 0; i < all.num_clauses(); ++i) {
        log << i + 1;
        for (Literal l : all.clause(i))
            log << ' ' << l.to_dimacs();
        log << '\n';
    }
}

} // namespace achsat
