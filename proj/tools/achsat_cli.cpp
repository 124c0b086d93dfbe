// achsat: command-line front end for the threshold calculator, the
// Monte Carlo simulator, the bound evaluators, the gap harness and the
// k-SAT to 2-SAT reducer.

#include "achsat/dimacs.hpp"
#include "achsat/error.hpp"
#include "achsat/gap.hpp"
#include "achsat/implication_graph.hpp"
#include "achsat/monte_carlo.hpp"
#include "achsat/reduction.hpp"
#include "achsat/results_io.hpp"
#include "achsat/threshold.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace achsat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Thrown for bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_threads()
{
    if (const char* env = std::getenv("ACHSAT_THREADS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError("ACHSAT_THREADS must be an integer");
        }
    }
    return 0;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot open '" + path + "' for writing");
    return out;
}

void write_json_file(const std::string& path, const json& j)
{
    auto out = open_output(path);
    out << j.dump(2) << '\n';
}

std::string summary_path_for(const std::string& csv)
{
    const auto dot = csv.rfind(".csv");
    return (dot != std::string::npos && dot + 4 == csv.size() ? csv.substr(0, dot) : csv) + ".summary.json";
}

// Values from a JSON config file fill in every option of the chosen
// subcommand that was not given on the command line.
void apply_config(CLI::App& sub, const json& cfg)
{
    if (!cfg.is_object())
        throw UsageError("config file must hold a JSON object");
    for (const auto& [key, value] : cfg.items()) {
        CLI::Option* opt = nullptr;
        try {
            opt = sub.get_option("--" + key);
        } catch (const CLI::OptionNotFound&) {
            throw UsageError("config key '" + key + "' is not an option of '" + sub.get_name() + "'");
        }
        if (opt->count() != 0)
            continue;
        const auto as_text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        if (value.is_array()) {
            for (const auto& v : value)
                opt->add_result(as_text(v));
            if (value.empty())
                opt->add_result(std::string{});
        } else {
            opt->add_result(as_text(value));
        }
        opt->run_callback();
    }
}

// --- threshold ----------------------------------------------------------

struct ThresholdArgs {
    std::vector<int> k{3};
    std::vector<int> l{5};
    std::string out;
};

int cmd_threshold(const ThresholdArgs& a)
{
    std::vector<ThresholdParams> rows;
    for (int k : a.k)
        for (int l : a.l)
            rows.push_back(threshold_params(k, l));

    std::printf("%3s %3s %12s %12s %12s %12s %14s %12s\n", "k", "l", "p0", "p1", "p2", "r(k,l)", "2^k ln 2",
                "margin");
    for (const auto& p : rows) {
        const double ub = first_moment_upper_bound(p.k);
        std::printf("%3d %3d %12.6g %12.6g %12.6g %12.5f %14.5f %+12.5f\n", p.k, p.l, p.p0, p.p1, p.p2, p.r_kl,
                    ub, p.r_kl - ub);
        if (p.k == 3)
            std::printf("        3-SAT reference bounds: lower %.2f, upper %.3f; r(3,%d) %s the upper bound\n",
                        kThreeSatLowerBound, kThreeSatUpperBound, p.l,
                        p.r_kl > kThreeSatUpperBound ? "exceeds" : "does not exceed");
    }
    if (!a.out.empty()) {
        auto out = open_output(a.out);
        write_threshold_csv(out, rows, json{{"command", "threshold"}, {"k", a.k}, {"l", a.l}});
    }
    return kExitOk;
}

// --- simulate -----------------------------------------------------------

struct SimulateArgs {
    std::string rule = "always_first";
    std::uint32_t k = 2;
    std::uint32_t l = 1;
    std::uint32_t n = 1000;
    std::vector<std::string> ratios; // kept as text so a bare --ratios means none
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    std::string decider;
    std::int64_t budget_ms = 0;
    bool no_short_circuit = false;
    std::string out;
    std::string summary;
    int threads = 0;
};

int cmd_simulate(const SimulateArgs& a)
{
    MonteCarloConfig cfg;
    cfg.rule = RuleSpec::parse(a.rule);
    cfg.k = a.k;
    cfg.l = a.l;
    cfg.n = a.n;
    for (const auto& text : a.ratios) {
        if (text.empty())
            continue;
        try {
            std::size_t used = 0;
            cfg.ratios.push_back(std::stod(text, &used));
            if (used != text.size())
                throw std::invalid_argument(text);
        } catch (const std::logic_error&) {
            throw UsageError("--ratios: '" + text + "' is not a number");
        }
    }
    cfg.trials = a.trials;
    cfg.master_seed = a.seed;
    cfg.decider = a.decider.empty() ? (a.k == 2 ? DeciderKind::two_sat : DeciderKind::dpll)
                                    : parse_decider_kind(a.decider);
    if (a.budget_ms > 0)
        cfg.limits.time_budget = std::chrono::milliseconds(a.budget_ms);
    cfg.short_circuit = !a.no_short_circuit;
    cfg.validate();

    json config = to_json(cfg);
    config["command"] = "simulate";
    config["budget_ms"] = a.budget_ms;
    config["threads"] = a.threads;

    const auto res = monte_carlo_sat_fraction(cfg, a.threads);

    std::printf("rule=%s k=%u l=%u n=%u trials=%llu decider=%s\n", cfg.rule.to_string().c_str(), cfg.k, cfg.l,
                cfg.n, static_cast<unsigned long long>(cfg.trials), std::string(to_string(cfg.decider)).c_str());
    std::printf("%10s %10s %6s %6s %8s %10s %22s\n", "ratio", "steps", "sat", "unsat", "unknown", "sat_frac",
                "95% Wilson");
    for (const auto& s : res.summary)
        std::printf("%10.4f %10llu %6llu %6llu %8llu %10.4f       [%.4f, %.4f]\n", s.ratio,
                    static_cast<unsigned long long>(s.steps), static_cast<unsigned long long>(s.sat),
                    static_cast<unsigned long long>(s.unsat), static_cast<unsigned long long>(s.unknown),
                    s.sat_fraction, s.ci.lo, s.ci.hi);

    if (!a.out.empty()) {
        auto out = open_output(a.out);
        write_trials_csv(out, cfg, res, config);
        write_json_file(a.summary.empty() ? summary_path_for(a.out) : a.summary,
                        monte_carlo_summary_json(cfg, res, config));
    } else if (!a.summary.empty()) {
        write_json_file(a.summary, monte_carlo_summary_json(cfg, res, config));
    }
    return kExitOk;
}

// --- verify -------------------------------------------------------------

int cmd_verify()
{
    bool all_pass = true;
    const auto checks = verify_shift_conditions();
    std::printf("shift conditions (%zu items)\n", checks.size());
    for (const auto& c : checks) {
        std::printf("  [%s] %-40s margin %.6g  %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.margin,
                    c.detail.c_str());
        all_pass = all_pass && c.pass;
    }

    // Formula self-checks: the probabilities form a distribution and the
    // threshold is consistent with them.
    double worst_sum = 0, worst_r = 0;
    bool increasing = true;
    for (int k = 2; k <= 64; ++k)
        for (int l = 1; l <= 10; ++l) {
            const auto p = clause_type_probs(k, l);
            worst_sum = std::max(worst_sum, std::abs(p.p0 + p.p1 + p.p2 - 1));
            const double direct = 1 / (p.p1 + 2 * std::sqrt(p.p0 * p.p2));
            worst_r = std::max(worst_r, std::abs(direct - r_threshold(k, l)) / direct);
            if (l > 1 && !(r_threshold(k, l) > r_threshold(k, l - 1)))
                increasing = false;
        }
    const bool sums_ok = worst_sum < 1e-12;
    const bool r_ok = worst_r < 1e-12;
    const bool r21_ok = std::abs(r_threshold(2, 1) - 1) < 1e-12;
    std::printf("self-checks\n");
    std::printf("  [%s] p0+p1+p2 = 1 on k<=64, l<=10 (worst error %.3g)\n", sums_ok ? "PASS" : "FAIL", worst_sum);
    std::printf("  [%s] r(k,l) = 1/(p1 + 2 sqrt(p0 p2)) (worst relative error %.3g)\n", r_ok ? "PASS" : "FAIL",
                worst_r);
    std::printf("  [%s] r(k,l) strictly increasing in l\n", increasing ? "PASS" : "FAIL");
    std::printf("  [%s] r(2,1) = 1\n", r21_ok ? "PASS" : "FAIL");
    all_pass = all_pass && sums_ok && r_ok && increasing && r21_ok;

    std::printf("%s\n", all_pass ? "verify: all checks passed" : "verify: FAILED");
    return all_pass ? kExitOk : kExitVerifyFailed;
}

// --- bounds -------------------------------------------------------------

struct BoundsArgs {
    int k = 2;
    int l = 2;
    double r = NAN;
    double eps = 0.05;
    std::vector<std::uint64_t> n{1000, 10000, 100000, 1000000};
    std::uint64_t L = 0;
    double L_factor = 40;
    std::string out;
};

int cmd_bounds(const BoundsArgs& a)
{
    const double r_kl = r_threshold(a.k, a.l);
    const double r = std::isnan(a.r) ? (1 - a.eps) * r_kl : a.r;
    std::printf("k=%d l=%d r=%.6f (r(k,l)=%.6f, ratio %.4f)\n", a.k, a.l, r, r_kl, r / r_kl);
    std::printf("%10s %8s %14s %14s %14s %14s\n", "n", "L", "ln paths", "paths", "ln bicycles", "bicycles");

    std::ofstream csv;
    if (!a.out.empty()) {
        csv = open_output(a.out);
        write_provenance(csv, json{{"command", "bounds"},
                                   {"k", a.k},
                                   {"l", a.l},
                                   {"r", r},
                                   {"n", a.n},
                                   {"L", a.L},
                                   {"L_factor", a.L_factor}});
        csv << "n,L,log_paths,paths,log_bicycles,bicycles\n";
    }
    for (std::uint64_t n : a.n) {
        const std::uint64_t L =
            a.L != 0 ? a.L : static_cast<std::uint64_t>(std::ceil(a.L_factor * std::log(static_cast<double>(n))));
        const auto paths = expected_paths_bound(n, L, r, a.k, a.l);
        const auto bic = L >= 2 ? expected_bicycles_bound(n, L, r, a.k, a.l) : BoundValue{-INFINITY, 0};
        std::printf("%10llu %8llu %14.6g %14.6g %14.6g %14.6g\n", static_cast<unsigned long long>(n),
                    static_cast<unsigned long long>(L), paths.log_value, paths.value, bic.log_value, bic.value);
        if (csv.is_open())
            csv << n << ',' << L << ',' << paths.log_value << ',' << paths.value << ',' << bic.log_value << ','
                << bic.value << '\n';
    }
    return kExitOk;
}

// --- gap ----------------------------------------------------------------

struct GapArgs {
    std::uint32_t k = 3;
    std::uint32_t l = 2;
    std::uint32_t n = 100;
    double c1 = 4;
    double c2 = 5;
    std::vector<std::string> rules;
    std::string decider = "constant_yes";
    std::uint64_t trials = 10;
    std::uint64_t seed = 1;
    std::int64_t budget_ms = kDefaultGapBudget.count();
    std::string out;
    std::string summary;
    std::string export_dir;
    bool locate_first_unsat = false;
    int threads = 0;
};

int cmd_gap(const GapArgs& a)
{
    GapProblemSpec spec{a.k, a.l, a.c1, a.c2, a.n};
    spec.validate();
    std::vector<RuleSpec> rules;
    for (const auto& r : a.rules)
        rules.push_back(RuleSpec::parse(r));
    if (rules.empty())
        rules = adversary_library();
    const auto decider = parse_decider(a.decider, a.seed);
    if (a.trials < 1)
        throw UsageError("--trials must be at least 1");
    const SolveLimits limits{std::chrono::milliseconds(a.budget_ms), 0};

    json config = {{"command", "gap"},   {"problem", to_json(spec)}, {"decider", a.decider},
                   {"trials", a.trials}, {"seed", a.seed},        {"budget_ms", a.budget_ms},
                   {"threads", a.threads}};
    config["rules"] = json::array();
    for (const auto& r : rules)
        config["rules"].push_back(r.to_string());

    const auto trials = generate_gap_trials(spec, rules, a.trials, a.seed, limits, a.threads, a.locate_first_unsat);
    const auto score = score_instances(*decider, trials);

    std::printf("decider=%s k=%u l=%u n=%u c1=%g c2=%g\n", score.decider.c_str(), spec.k, spec.l, spec.n, spec.c1,
                spec.c2);
    std::printf("%-24s %7s %7s %9s %10s %20s\n", "rule", "trials", "errors", "excluded", "err_rate", "95% Wilson");
    for (const auto& r : score.per_rule)
        std::printf("%-24s %7llu %7llu %9llu %10.4f     [%.4f, %.4f]\n", r.rule.c_str(),
                    static_cast<unsigned long long>(r.trials), static_cast<unsigned long long>(r.errors),
                    static_cast<unsigned long long>(r.excluded), r.error_rate, r.ci.lo, r.ci.hi);
    std::printf("worst case: %s at %.4f [%.4f, %.4f]; excluded %llu of %llu; monotonicity violations %llu\n",
                score.worst_rule.c_str(), score.worst_error_rate, score.worst_ci.lo, score.worst_ci.hi,
                static_cast<unsigned long long>(score.total_excluded),
                static_cast<unsigned long long>(score.total_trials),
                static_cast<unsigned long long>(score.monotonicity_violations));
    for (const auto& t : trials)
        if (t.instance.truth.classify() == GapCase::indeterminate)
            std::fprintf(stderr, "excluded: rule %s seed %llu (%s)\n", t.rule.c_str(),
                         static_cast<unsigned long long>(t.instance.seed),
                         t.instance.truth.monotonicity_violated() ? "monotonicity violation" : "solver budget");

    if (!a.out.empty()) {
        auto out = open_output(a.out);
        write_gap_csv(out, spec, score, config);
        write_json_file(a.summary.empty() ? summary_path_for(a.out) : a.summary,
                        gap_summary_json(spec, score, config));
    } else if (!a.summary.empty()) {
        write_json_file(a.summary, gap_summary_json(spec, score, config));
    }
    if (!a.export_dir.empty()) {
        std::map<std::string, std::uint64_t> counter;
        for (const auto& t : trials) {
            std::string stem = t.rule;
            for (char& c : stem)
                if (c == ':')
                    c = '_';
            stem += "_" + std::to_string(counter[t.rule]++);
            export_gap_instance(a.export_dir, stem, t.instance);
        }
    }
    return kExitOk;
}

// --- reduce -------------------------------------------------------------

struct ReduceArgs {
    std::string input;
    std::string output;
    std::string dot;
};

int cmd_reduce(const ReduceArgs& a)
{
    if (a.input.empty() || a.output.empty())
        throw UsageError("reduce needs --input and --output");
    const Formula f = read_dimacs_file(a.input);
    const Formula g = reduce_to_2sat(f);
    write_dimacs_file(a.output, g,
                      {"2-SAT reduction of " + a.input,
                       "config: " + json{{"command", "reduce"}, {"input", a.input}}.dump(),
                       "build: " + build_id()});
    if (!a.dot.empty()) {
        auto out = open_output(a.dot);
        ImplicationGraph(g).write_dot(out);
    }
    std::printf("reduced %zu clauses of width %u over %u variables\n", g.num_clauses(), f.width(), f.num_vars());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Achlioptas-process k-SAT threshold toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", build_id());

    std::string config_path;
    int threads = -1;
    app.add_option("--config", config_path, "JSON file with option values; explicit flags win")
        ->check(CLI::ExistingFile);
    app.add_option("--threads", threads, "worker threads (default: ACHSAT_THREADS or all cores)");

    ThresholdArgs th;
    auto* s_threshold = app.add_subcommand("threshold", "tabulate p0, p1, p2 and r(k,l)");
    s_threshold->add_option("--k", th.k, "clause width(s)")->check(CLI::Range(2, 64));
    s_threshold->add_option("--l", th.l, "candidates per step")->check(CLI::Range(1, 1000));
    s_threshold->add_option("--out", th.out, "CSV output path");

    SimulateArgs sim;
    auto* s_simulate = app.add_subcommand("simulate", "Monte Carlo satisfiable fraction per clause density");
    s_simulate->add_option("--rule", sim.rule, "selection rule, name[:arg]");
    s_simulate->add_option("--k", sim.k, "clause width");
    s_simulate->add_option("--l", sim.l, "candidates per step");
    s_simulate->add_option("--n", sim.n, "number of variables");
    s_simulate->add_option("--ratios", sim.ratios, "clause/variable ratios")->expected(0, -1);
    s_simulate->add_option("--trials", sim.trials, "trajectories");
    s_simulate->add_option("--seed", sim.seed, "master seed");
    s_simulate->add_option("--decider", sim.decider, "two_sat or dpll (default: two_sat for k=2)");
    s_simulate->add_option("--budget-ms", sim.budget_ms, "per-call DPLL budget, 0 for none");
    s_simulate->add_flag("--no-short-circuit", sim.no_short_circuit, "solve every checkpoint");
    s_simulate->add_option("--out", sim.out, "per-trial CSV path");
    s_simulate->add_option("--summary", sim.summary, "JSON summary path (default: next to --out)");

    auto* s_verify = app.add_subcommand("verify", "numeric shift conditions and formula self-checks");

    BoundsArgs bd;
    auto* s_bounds = app.add_subcommand("bounds", "expected path and bicycle counts");
    s_bounds->add_option("--k", bd.k, "clause width")->check(CLI::Range(2, 64));
    s_bounds->add_option("--l", bd.l, "candidates per step")->check(CLI::Range(1, 1000));
    s_bounds->add_option("--r", bd.r, "density (default (1-eps) r(k,l))");
    s_bounds->add_option("--eps", bd.eps, "relative gap below r(k,l) when --r is absent");
    s_bounds->add_option("--n", bd.n, "variable counts");
    s_bounds->add_option("--L", bd.L, "path length (default ceil(L-factor * ln n))");
    s_bounds->add_option("--L-factor", bd.L_factor, "multiplier of ln n when --L is absent");
    s_bounds->add_option("--out", bd.out, "CSV output path");

    GapArgs gp;
    auto* s_gap = app.add_subcommand("gap", "score a decider on the semi-random gap problem");
    s_gap->add_option("--k", gp.k, "clause width");
    s_gap->add_option("--l", gp.l, "candidates per step");
    s_gap->add_option("--n", gp.n, "number of variables");
    s_gap->add_option("--c1", gp.c1, "low density (unsat here means NO)");
    s_gap->add_option("--c2", gp.c2, "high density (sat here means YES)");
    s_gap->add_option("--rules", gp.rules, "adversary rules (default: the built-in library)");
    s_gap->add_option("--decider", gp.decider, "constant_yes, constant_no or <statistic>:<threshold> (statistic deciders are exploratory baselines)");
    s_gap->add_option("--trials", gp.trials, "instances per rule");
    s_gap->add_option("--seed", gp.seed, "master seed");
    s_gap->add_option("--budget-ms", gp.budget_ms, "per-call DPLL budget");
    s_gap->add_option("--out", gp.out, "per-rule CSV path");
    s_gap->add_option("--summary", gp.summary, "JSON summary path (default: next to --out)");
    s_gap->add_option("--export-dir", gp.export_dir, "write DIMACS checkpoints and clause logs here");
    s_gap->add_flag("--locate-first-unsat", gp.locate_first_unsat, "bisect for the first unsat step");

    ReduceArgs rd;
    auto* s_reduce = app.add_subcommand("reduce", "DIMACS k-SAT to 2-SAT subclause reduction");
    s_reduce->add_option("--input", rd.input, "input DIMACS file");
    s_reduce->add_option("--output", rd.output, "output DIMACS file");
    s_reduce->add_option("--dot", rd.dot, "Graphviz file for the implication graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            json cfg;
            try {
                cfg = json::parse(in);
            } catch (const json::exception& e) {
                throw UsageError("cannot parse config '" + config_path + "': " + e.what());
            }
            apply_config(*sub, cfg);
        }
        const int team = threads >= 0 ? threads : default_threads();
        sim.threads = team;
        gp.threads = team;

        if (sub == s_threshold)
            return cmd_threshold(th);
        if (sub == s_simulate)
            return cmd_simulate(sim);
        if (sub == s_verify)
            return cmd_verify();
        if (sub == s_bounds)
            return cmd_bounds(bd);
        if (sub == s_gap)
            return cmd_gap(gp);
        return cmd_reduce(rd);
    } catch (const CLI::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const InvalidParameters& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const WidthError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyFailed;
    }
}
