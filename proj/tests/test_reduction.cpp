#include "achsat/error.hpp"
#include "achsat/reduction.hpp"
#include "achsat/solvers.hpp"
#include "achsat/threshold.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace achsat;

namespace {

std::vector<Literal> lits(ClauseView c) { return {c.begin(), c.end()}; }

} // namespace

TEST_CASE("reduce_clause")
{
    CHECK(lits(reduce_to_2sat([] {
              Formula f(5, 3);
              f.add(Clause{neg(2), pos(5), pos(1)});
              return f;
          }()).clause(0)) == std::vector{pos(5), pos(1)});

    const auto one = reduce_clause(Clause{neg(3), pos(1), neg(2)});
    CHECK(one[0] == pos(1));
    CHECK(one[1] == neg(3));
    const auto none = reduce_clause(Clause{neg(1), neg(2), neg(3)});
    CHECK(none[0] == neg(1));
    CHECK(none[1] == neg(2));
    CHECK_THROWS_AS(reduce_clause(Clause{pos(1)}), WidthError);
}

TEST_CASE("reduction keeps clause count and is sound")
{
    Rng rng(31);
    int violations = 0;
    for (int i = 0; i < 3000; ++i) {
        const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 10);
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng() % std::min<std::uint32_t>(n - 1, 4));
        const Formula f = oracle::random_formula(n, k, 1 + rng() % (5 * n), rng);
        const Formula g = reduce_to_2sat(f);
        REQUIRE(g.num_clauses() == f.num_clauses());
        REQUIRE(g.width() == 2);
        for (std::size_t c = 0; c < f.num_clauses(); ++c)
            for (Literal l : g.clause(c)) {
                const auto src = f.clause(c);
                CHECK(std::find(src.begin(), src.end(), l) != src.end());
            }
        const auto r = two_sat_satisfiable(g);
        if (r.sat() && !r.witness->satisfies(f.view()))
            ++violations;
        if (r.sat() && !oracle::naive_satisfiable(f))
            ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("implication graph")
{
    SUBCASE("single clause")
    {
        Formula f(2, 2);
        f.add(Clause{pos(1), pos(2)});
        const ImplicationGraph g(f);
        CHECK(g.num_edges() == 2);
        CHECK(g.has_edge(neg(1), pos(2)));
        CHECK(g.has_edge(neg(2), pos(1)));
        CHECK_FALSE(g.has_edge(pos(1), pos(2)));
    }
    SUBCASE("empty formula")
    {
        const ImplicationGraph g(Formula(4, 2));
        CHECK(g.num_vertices() == 8);
        CHECK(g.num_edges() == 0);
    }
    SUBCASE("2 edges per clause with multiplicity, skew symmetric")
    {
        Rng rng(8);
        for (int i = 0; i < 1000; ++i) {
            const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 30);
            const std::size_t m = rng() % (3 * n);
            const Formula f = oracle::random_formula(n, 2, m, rng);
            const ImplicationGraph g(f);
            CHECK(g.num_edges() == 2 * m);
            CHECK(g.is_skew_symmetric());
            // Independent check of skew symmetry straight from the edge lists.
            for (std::uint32_t v = 1; v <= n; ++v)
                for (Literal a : {pos(v), neg(v)})
                    for (Literal b : g.successors(a))
                        REQUIRE(g.count_edge(~b, ~a) == g.count_edge(a, b));
        }
    }
    SUBCASE("duplicate clause doubles the edge")
    {
        Formula f(3, 2);
        f.add(Clause{pos(1), neg(3)});
        f.add(Clause{pos(1), neg(3)});
        const ImplicationGraph g(f);
        CHECK(g.count_edge(pos(3), pos(1)) == 2);
    }
    CHECK_THROWS_AS(ImplicationGraph(Formula(3, 3)), WidthError);
    SUBCASE("DOT output")
    {
        Formula f(2, 2);
        f.add(Clause{pos(1), neg(2)});
        std::ostringstream out;
        ImplicationGraph(f).write_dot(out);
        const std::string dot = out.str();
        CHECK(dot.find("digraph") != std::string::npos);
        CHECK(dot.find("~x1") != std::string::npos);
        CHECK(dot.find("v1 -> v3;") != std::string::npos); // ~x1 -> ~x2
        CHECK(dot.find("v2 -> v0;") != std::string::npos); // x2 -> x1
    }
}

TEST_CASE("SCC decomposition")
{
    // x1 -> x2 -> x3 -> x1 is one component; their negations form another.
    Formula f(3, 2);
    f.add(Clause{neg(1), pos(2)});
    f.add(Clause{neg(2), pos(3)});
    f.add(Clause{neg(3), pos(1)});
    const ImplicationGraph g(f);
    const auto scc = strongly_connected_components(g);
    CHECK(scc.count == 2);
    CHECK(scc.component[pos(1).code()] == scc.component[pos(3).code()]);
    CHECK(scc.component[neg(1).code()] == scc.component[neg(2).code()]);
    CHECK(scc.component[pos(1).code()] != scc.component[neg(1).code()]);
}

TEST_CASE("find_bicycle")
{
    SUBCASE("four polarity patterns on two variables")
    {
        Formula f(2, 2);
        for (int s = 0; s < 4; ++s)
            f.add(Clause{Literal(1, s & 1), Literal(2, s & 2)});
        const ImplicationGraph g(f);
        const auto b = find_bicycle(g, 4);
        REQUIRE(b);
        CHECK(is_valid_bicycle(g, *b));
        CHECK(b->length() >= 2);
    }
    SUBCASE("single clause has none")
    {
        Formula f(2, 2);
        f.add(Clause{pos(1), pos(2)});
        CHECK_FALSE(find_bicycle(ImplicationGraph(f), 4));
    }
    SUBCASE("contrapositive on random n = 8 formulas")
    {
        Rng rng(12);
        int unsat = 0, missing = 0, invalid = 0;
        for (int i = 0; i < 1000; ++i) {
            const Formula f = oracle::random_formula(8, 2, 6 + rng() % 10, rng);
            const ImplicationGraph g(f);
            const auto b = find_bicycle(g, 8);
            if (b && !is_valid_bicycle(g, *b))
                ++invalid;
            if (!oracle::naive_satisfiable(f)) {
                ++unsat;
                missing += !b;
            }
        }
        CHECK(unsat > 50);
        CHECK(missing == 0);
        CHECK(invalid == 0);
    }
    SUBCASE("is_valid_bicycle rejects broken objects")
    {
        Formula f(2, 2);
        for (int s = 0; s < 4; ++s)
            f.add(Clause{Literal(1, s & 1), Literal(2, s & 2)});
        const ImplicationGraph g(f);
        auto b = *find_bicycle(g, 4);
        Bicycle repeated = b;
        repeated.path = {b.path[0], b.path[0]};
        CHECK_FALSE(is_valid_bicycle(g, repeated));
        Bicycle short_path = b;
        short_path.path.resize(1);
        CHECK_FALSE(is_valid_bicycle(g, short_path));
    }
    CHECK_THROWS_AS(find_bicycle(ImplicationGraph(Formula(21, 2)), 3), SizeError);
}

TEST_CASE("sample_binomial_2sat")
{
    Rng rng(4);
    CHECK(sample_binomial_2sat({10, 0, 0, 0}, rng).num_clauses() == 0);

    const Formula all_pos = sample_binomial_2sat({3, 0, 0, 1}, rng);
    REQUIRE(all_pos.num_clauses() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(count_positive(all_pos.clause(i)) == 2);

    SUBCASE("full probabilities enumerate every slot")
    {
        const std::uint32_t n = 6;
        const Formula f = sample_binomial_2sat({n, 1, 1, 1}, rng);
        // C(n,2) positive + n(n-1) mixed + C(n,2) negative.
        CHECK(f.num_clauses() == 15 + 30 + 15);
        std::set<std::pair<std::uint32_t, std::uint32_t>> mixed;
        for (std::size_t i = 15; i < 45; ++i) {
            const auto c = f.clause(i);
            CHECK(count_positive(c) == 1);
            mixed.insert({c[0].code(), c[1].code()});
        }
        CHECK(mixed.size() == 30);
    }
    SUBCASE("expected clause count within 3 sigma")
    {
        const std::uint32_t n = 2000;
        const auto q = q_probs(2, 2, 0.9, n);
        const double pairs = n * (n - 1.0) / 2;
        const double mean = pairs * (q.q0 + q.q2) + 2 * pairs * q.q1;
        const double var = pairs * (q.q0 * (1 - q.q0) + q.q2 * (1 - q.q2)) + 2 * pairs * q.q1 * (1 - q.q1);
        double total = 0;
        constexpr int reps = 40;
        for (int i = 0; i < reps; ++i)
            total += static_cast<double>(sample_binomial_2sat({n, q.q0, q.q1, q.q2}, rng).num_clauses());
        CHECK(std::abs(total / reps - mean) <= 3 * std::sqrt(var / reps));
    }
    CHECK_THROWS_AS(sample_binomial_2sat({10, 1.5, 0, 0}, rng), InvalidParameters);
    CHECK_THROWS_AS(sample_binomial_2sat({1, 0.5, 0, 0}, rng), InvalidParameters);
}
