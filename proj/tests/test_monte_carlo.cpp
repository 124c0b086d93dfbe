#include "achsat/error.hpp"
#include "achsat/monte_carlo.hpp"
#include "achsat/stats.hpp"

#include <doctest.h>

#include <cmath>

using namespace achsat;

TEST_CASE("wilson_interval")
{
    const Interval none = wilson_interval(0, 0);
    CHECK(none.lo == 0);
    CHECK(none.hi == 1);
    // 50/100 at z = 1.96: 0.5 -+ 0.09678.
    const Interval half = wilson_interval(50, 100);
    CHECK(half.lo == doctest::Approx(0.403832).epsilon(1e-5));
    CHECK(half.hi == doctest::Approx(0.596168).epsilon(1e-5));
    const Interval all = wilson_interval(20, 20);
    CHECK(all.hi == doctest::Approx(1.0));
    CHECK(all.lo == doctest::Approx(0.838875).epsilon(1e-5));
    CHECK(binomial_sigma(0.5, 100) == doctest::Approx(0.05));
}

TEST_CASE("derive_seed")
{
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

namespace {

MonteCarloConfig small_config()
{
    MonteCarloConfig cfg;
    cfg.n = 400;
    cfg.k = 2;
    cfg.l = 2;
    cfg.rule = {"majority_positive", ""};
    cfg.ratios = {0.5, 0.9, 1.05, 1.3, 2.0};
    cfg.trials = 24;
    cfg.master_seed = 99;
    return cfg;
}

bool same(const MonteCarloResult& a, const MonteCarloResult& b)
{
    if (a.trials.size() != b.trials.size() || a.summary.size() != b.summary.size())
        return false;
    for (std::size_t i = 0; i < a.trials.size(); ++i)
        if (a.trials[i].seed != b.trials[i].seed || a.trials[i].verdicts != b.trials[i].verdicts ||
            a.trials[i].checkpoints != b.trials[i].checkpoints)
            return false;
    for (std::size_t i = 0; i < a.summary.size(); ++i)
        if (a.summary[i].sat != b.summary[i].sat || a.summary[i].unsat != b.summary[i].unsat ||
            a.summary[i].ci.lo != b.summary[i].ci.lo)
            return false;
    return true;
}

} // namespace

TEST_CASE("serial and parallel paths agree")
{
    const auto cfg = small_config();
    const auto serial = monte_carlo_sat_fraction_serial(cfg);
    for (int threads : {0, 1, 2, 3, 8})
        CHECK(same(serial, monte_carlo_sat_fraction_parallel(cfg, threads)));
    CHECK(same(serial, monte_carlo_sat_fraction(cfg, 1)));

    auto dpll_cfg = cfg;
    dpll_cfg.decider = DeciderKind::dpll;
    dpll_cfg.trials = 6;
    CHECK(same(monte_carlo_sat_fraction_serial(dpll_cfg), monte_carlo_sat_fraction_parallel(dpll_cfg, 4)));
}

TEST_CASE("trial records")
{
    const auto cfg = small_config();
    const auto res = monte_carlo_sat_fraction_serial(cfg);
    REQUIRE(res.trials.size() == cfg.trials);
    REQUIRE(res.summary.size() == cfg.ratios.size());
    for (std::size_t i = 0; i < res.trials.size(); ++i) {
        const auto& t = res.trials[i];
        CHECK(t.trial_index == i);
        CHECK(t.seed == derive_seed(cfg.master_seed, i));
        CHECK(t.checkpoints == std::vector<std::uint64_t>{200, 360, 420, 520, 800});
        bool unsat_seen = false;
        for (Verdict v : t.verdicts) {
            CHECK(v != Verdict::unknown);
            if (unsat_seen)
                CHECK(v == Verdict::unsat);
            unsat_seen = unsat_seen || v == Verdict::unsat;
        }
    }
    std::uint64_t total = 0;
    for (const auto& s : res.summary) {
        CHECK(s.trials == cfg.trials);
        CHECK(s.sat + s.unsat + s.unknown == s.trials);
        CHECK(s.ci.lo <= s.sat_fraction);
        CHECK(s.sat_fraction <= s.ci.hi);
        total += s.sat;
    }
    CHECK(total > 0);
    CHECK(res.summary.front().sat_fraction >= res.summary.back().sat_fraction);
}

TEST_CASE("short circuit does not change verdicts")
{
    auto cfg = small_config();
    cfg.trials = 10;
    const auto fast = monte_carlo_sat_fraction_serial(cfg);
    cfg.short_circuit = false;
    const auto full = monte_carlo_sat_fraction_serial(cfg);
    CHECK(same(fast, full));
}

TEST_CASE("unsorted ratios map back to their positions")
{
    auto cfg = small_config();
    cfg.ratios = {2.0, 0.5};
    cfg.trials = 6;
    const auto res = monte_carlo_sat_fraction_serial(cfg);
    CHECK(res.summary[0].ratio == 2.0);
    CHECK(res.summary[0].steps == 800);
    CHECK(res.summary[1].steps == 200);
    CHECK(res.summary[1].sat >= res.summary[0].sat);
}

TEST_CASE("empty and invalid configs")
{
    auto cfg = small_config();
    cfg.trials = 0;
    const auto res = monte_carlo_sat_fraction(cfg);
    CHECK(res.trials.empty());
    CHECK(res.summary.empty());

    auto wide = small_config();
    wide.k = 3;
    CHECK_THROWS_AS(monte_carlo_sat_fraction(wide), WidthError);
    wide.decider = DeciderKind::dpll;
    wide.trials = 2;
    CHECK_NOTHROW(monte_carlo_sat_fraction(wide));

    auto negative = small_config();
    negative.ratios = {-1};
    CHECK_THROWS_AS(monte_carlo_sat_fraction(negative), InvalidParameters);

    CHECK(parse_decider_kind("dpll") == DeciderKind::dpll);
    CHECK(parse_decider_kind("two_sat") == DeciderKind::two_sat);
    CHECK_THROWS_AS(parse_decider_kind("cdcl"), InvalidParameters);
}

TEST_CASE("majority rule keeps 2-SAT satisfiable longer than the classic process")
{
    MonteCarloConfig cfg;
    cfg.n = 20'000;
    cfg.k = 2;
    cfg.ratios = {0.9, 1.05, 1.3};
    cfg.trials = 30;
    cfg.master_seed = 5;
    cfg.l = 1;
    const auto classic = monte_carlo_sat_fraction(cfg);
    cfg.l = 2;
    cfg.rule = {"majority_positive", ""};
    const auto shifted = monte_carlo_sat_fraction(cfg);
    CHECK(classic.summary[0].sat_fraction > 0.8);
    CHECK(shifted.summary[0].sat_fraction > 0.8);
    CHECK(shifted.summary[1].sat_fraction > classic.summary[1].sat_fraction);
    CHECK(classic.summary[2].sat_fraction < 0.1);
}
