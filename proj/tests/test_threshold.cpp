#include "achsat/error.hpp"
#include "achsat/threshold.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace achsat;

TEST_CASE("clause_type_probs")
{
    SUBCASE("(2,2) = 3/16, 3/8, 7/16")
    {
        const auto p = clause_type_probs(2, 2);
        CHECK(p.p0 == doctest::Approx(3.0 / 16).epsilon(1e-15));
        CHECK(p.p1 == doctest::Approx(3.0 / 8).epsilon(1e-15));
        CHECK(p.p2 == doctest::Approx(7.0 / 16).epsilon(1e-15));
    }
    SUBCASE("(3,1) collapses Bin(3,1/2)")
    {
        const auto p = clause_type_probs(3, 1);
        CHECK(p.p0 == 1.0 / 8);
        CHECK(p.p1 == 3.0 / 8);
        CHECK(p.p2 == 1.0 / 2);
    }
    SUBCASE("(3,2) = 1/16, 3/16, 3/4")
    {
        const auto p = clause_type_probs(3, 2);
        CHECK(p.p0 == doctest::Approx(1.0 / 16).epsilon(1e-15));
        CHECK(p.p1 == doctest::Approx(3.0 / 16).epsilon(1e-15));
        CHECK(p.p2 == doctest::Approx(3.0 / 4).epsilon(1e-15));
    }
    SUBCASE("sum to one on k in [2,64], l in [1,10]")
    {
        for (int k = 2; k <= 64; ++k)
            for (int l = 1; l <= 10; ++l) {
                const auto p = clause_type_probs(k, l);
                CHECK(std::abs(p.p0 + p.p1 + p.p2 - 1) < 1e-12);
                CHECK(p.p0 >= 0);
                CHECK(p.p2 <= 1);
            }
    }
    CHECK_THROWS_AS(clause_type_probs(1, 2), InvalidParameters);
    CHECK_THROWS_AS(clause_type_probs(3, 0), InvalidParameters);
}

TEST_CASE("r_threshold")
{
    CHECK(std::abs(r_threshold(3, 5) - 5.06508) < 1e-4);
    CHECK(std::abs(r_threshold(2, 2) - 1.05505) < 1e-4);
    CHECK(r_threshold(2, 1) == 1.0);

    SUBCASE("compact form matches the expanded expression and grows with l")
    {
        for (int k = 2; k <= 64; ++k)
            for (int l = 1; l <= 10; ++l) {
                const double r = r_threshold(k, l);
                const double expanded = oracle::r_threshold_expanded(k, l);
                CHECK(std::abs(r - expanded) <= 1e-12 * std::max(1.0, r));
                if (l > 1)
                    CHECK(r > r_threshold(k, l - 1));
            }
    }
    SUBCASE("l = 1 is the unbiased reduction bound")
    {
        // p0 = 1/2^k, p1 = k/2^k, p2 = 1 - (k+1)/2^k.
        for (int k = 2; k <= 20; ++k) {
            const double t = std::pow(2.0, k);
            const double expected = 1 / (k / t + 2 * std::sqrt((1 / t) * (1 - (k + 1) / t)));
            CHECK(r_threshold(k, 1) == doctest::Approx(expected).epsilon(1e-13));
        }
    }
}

TEST_CASE("q_probs")
{
    const auto q = q_probs(2, 2, 1.0, 100);
    CHECK(q.q2 == doctest::Approx(0.00875).epsilon(1e-14));
    CHECK(q.q1 == doctest::Approx(0.375 / 100).epsilon(1e-14));
    CHECK(q.q0 == doctest::Approx(2 * 0.1875 / 100).epsilon(1e-14));
    const auto z = q_probs(3, 5, 0.0, 100);
    CHECK(z.q0 == 0);
    CHECK(z.q1 == 0);
    CHECK(z.q2 == 0);
}

TEST_CASE("first moment exponent")
{
    CHECK(binary_entropy(0.5) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK_THROWS_AS(first_moment_exponent(0.0, 1, 0.5), InvalidParameters);
    CHECK_THROWS_AS(first_moment_exponent(1.0, 1, 0.5), InvalidParameters);

    SUBCASE("p = 0 is maximised at 1/2")
    {
        for (double r : {0.0, 1.0, 4.2, 7.0}) {
            const auto m = max_first_moment(r, 0);
            CHECK(m.beta == doctest::Approx(0.5).epsilon(1e-6));
            CHECK(m.value == doctest::Approx(std::numbers::ln2 + r * std::log(7.0 / 8)).epsilon(1e-12));
        }
    }
    SUBCASE("r = 0 leaves pure entropy")
    {
        for (double p : {0.0, 0.3, 1.0}) {
            const auto m = max_first_moment(0, p);
            CHECK(m.value == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
        }
    }
    SUBCASE("p = 1 near beta = 1 is positive for any r")
    {
        for (double r : {1.0, 100.0, 1e4})
            CHECK(first_moment_exponent(0.999, r, 1.0) > 0);
    }
    SUBCASE("maximum decreases strictly in r")
    {
        for (double p : {0.0, 0.2, 0.5, 0.8, 0.95})
            for (double r = 0.5; r < 12; r += 0.5)
                CHECK(max_first_moment(r, p).value > max_first_moment(r + 0.5, p).value);
    }
    SUBCASE("grid maximiser agrees with a brute scan")
    {
        for (double p : {0.1, 0.6, 0.97})
            for (double r : {3.0, 9.0, 40.0}) {
                double best = -1e300;
                for (int i = 1; i < 200000; ++i)
                    best = std::max(best, first_moment_exponent(i / 200000.0, r, p));
                const double got = max_first_moment(r, p).value;
                CHECK(got >= best - 1e-12);
                CHECK(got - best < 1e-6);
            }
    }
}

TEST_CASE("critical density and bias")
{
    const double closed_form = std::numbers::ln2 / std::log(8.0 / 7);
    CHECK(std::abs(first_moment_critical_r(0) - 5.19089) < 1e-4);
    CHECK(first_moment_critical_r(0) == doctest::Approx(closed_form).epsilon(1e-8));

    SUBCASE("nondecreasing in p")
    {
        double prev = 0;
        for (int i = 0; i <= 9; ++i) {
            const double c = first_moment_critical_r(i / 10.0);
            CHECK(c >= prev);
            prev = c;
        }
    }
    SUBCASE("bias_for_density")
    {
        for (double r : {6.0, 10.0, 100.0}) {
            const auto p = bias_for_density(r);
            REQUIRE(p);
            CHECK(*p > 0);
            CHECK(*p < 1);
            CHECK(max_first_moment(r, *p).value > 0);
            CHECK(max_first_moment(r, *p - 1e-4).value <= 0);
        }
        CHECK(bias_for_density(2.0) == 0.0);
    }
}

TEST_CASE("path and bicycle bounds")
{
    const auto p = clause_type_probs(2, 2);
    SUBCASE("L = 1 path bound")
    {
        const auto b = expected_paths_bound(1000, 1, 0.7, 2, 2);
        CHECK(b.value == doctest::Approx(2000 * std::sqrt(p.p2 / p.p0)).epsilon(1e-12));
    }
    SUBCASE("L = 2 bicycle bound is a single term")
    {
        const double r = 0.9;
        const double base = p.p1 + 2 * std::sqrt(p.p0 * p.p2);
        const double expected = 8.0 / 500 * std::sqrt(p.p2 / p.p0) * 4 * r * r * r * base;
        CHECK(expected_bicycles_bound(500, 2, r, 2, 2).value == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("paths bound increases with r for L >= 2")
    {
        for (double r = 0.1; r < 2; r += 0.1)
            CHECK(expected_paths_bound(1000, 10, r, 3, 2).value < expected_paths_bound(1000, 10, r + 0.1, 3, 2).value);
    }
    SUBCASE("log space stays finite where the linear value overflows")
    {
        const auto b = expected_paths_bound(1'000'000, 20'000, 3 * r_threshold(2, 2), 2, 2);
        CHECK(std::isinf(b.value));
        CHECK(std::isfinite(b.log_value));
        const auto z = expected_bicycles_bound(1'000'000, 20'000, 3 * r_threshold(2, 2), 2, 2);
        CHECK(std::isfinite(z.log_value));
    }
    SUBCASE("above threshold the bicycle bound blows up")
    {
        CHECK(expected_bicycles_bound(1'000'000, 2000, 1.1 * r_threshold(2, 2), 2, 2).value > 1);
    }
    SUBCASE("below threshold both bounds vanish with n")
    {
        // Values cross-checked against a 30-digit evaluation of the same sums.
        for (auto [k, l] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 5}}) {
            const double r = r_threshold(k, l) * 0.95;
            double prev_paths = INFINITY, prev_bic = INFINITY;
            for (std::uint64_t n : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
                const auto L = static_cast<std::uint64_t>(std::ceil(40 * std::log(static_cast<double>(n))));
                const double paths = expected_paths_bound(n, L, r, k, l).value;
                const double bic = expected_bicycles_bound(n, L, r, k, l).value;
                CHECK(paths < prev_paths);
                CHECK(bic < prev_bic);
                prev_paths = paths;
                prev_bic = bic;
            }
            CHECK(prev_paths < 1);
        }
        CHECK(expected_bicycles_bound(1000, 277, 0.95 * r_threshold(3, 5), 3, 5).value ==
              doctest::Approx(32172.484).epsilon(1e-7));
        const auto L = static_cast<std::uint64_t>(std::ceil(40 * std::log(1e6)));
        CHECK(expected_bicycles_bound(1000000, L, 0.95 * r_threshold(2, 2), 2, 2).value ==
              doctest::Approx(0.191500015417928).epsilon(1e-9));
        CHECK(expected_paths_bound(1000000, L, 0.95 * r_threshold(2, 2), 2, 2).value ==
              doctest::Approx(1.5432934314661262e-06).epsilon(1e-9));
    }
    CHECK_THROWS_AS(expected_paths_bound(10, 0, 1, 2, 2), InvalidParameters);
    CHECK_THROWS_AS(expected_bicycles_bound(10, 1, 1, 2, 2), InvalidParameters);
}

TEST_CASE("verify_shift_conditions")
{
    const auto checks = verify_shift_conditions();
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
        CHECK(c.margin > 0);
    }
    CHECK(checks[0].margin == doctest::Approx(5.0650828619486 - 4.508).epsilon(1e-10));
    CHECK(checks[2].margin == doctest::Approx(88.8034976444522 - 88.7228391116730).epsilon(1e-8));
    const auto g = [](int k) { return first_moment_upper_bound(k) / r_threshold(k, 3); };
    CHECK(g(8) < g(7));
    CHECK(g(7) == doctest::Approx(0.9990917189646954).epsilon(1e-12));
}
