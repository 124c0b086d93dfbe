#pragma once

#include "achsat/formula.hpp"
#include "achsat/implication_graph.hpp"
#include "achsat/rng.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace achsat {

// The 2-subclause kept for one k-clause (literal order = clause order):
//   >= 2 positives  -> first two positive literals
//   exactly 1       -> that positive literal, then the first negative one
//   none            -> first two literals
// Throws WidthError for k < 2.
std::array<Literal, 2> reduce_clause(ClauseView clause);

// Clause-by-clause image of reduce_clause, same count and order. Any
// satisfying assignment of the result satisfies the input.
Formula reduce_to_2sat(FormulaView f);

// Literals w1..wt over distinct variables joined by the edges
// w1->w2->...->wt, plus an entry edge u->w1 and an exit edge wt->v whose
// endpoints both have their variable among w1..wt.
struct Bicycle {
    std::vector<Literal> path;
    Literal entry; // u
    Literal exit;  // v

    std::size_t length() const { return path.size(); }
};

// True iff b satisfies every structural condition above against g, t >= 2.
bool is_valid_bicycle(const ImplicationGraph& g, const Bicycle& b);

inline constexpr std::uint32_t kBicycleSearchMaxVars = 20;

// Exhaustive DFS over distinct-variable paths of length 2..max_len; returns
// the first bicycle found (deterministic order). A 2-CNF formula with no
// bicycle is satisfiable. Throws SizeError when n > kBicycleSearchMaxVars.
std::optional<Bicycle> find_bicycle(const ImplicationGraph& g, std::size_t max_len);

// Independent-clause 2-SAT model: every positive-positive pair present with
// probability q2, every mixed (x_i ∨ ~x_j), i != j, with q1, every
// negative-negative pair with q0.
struct BinomialTwoSatParams {
    std::uint32_t n = 0;
    double q0 = 0;
    double q1 = 0;
    double q2 = 0;
};

// Slots are visited by geometric skipping, so the cost is O(n + clauses),
// not O(n^2). Output order: positive pairs, mixed, negative pairs, each in
// lexicographic (i, j) order.
Formula sample_binomial_2sat(const BinomialTwoSatParams& params, Rng& rng);

} // namespace achsat
