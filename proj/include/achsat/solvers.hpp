#pragma once

#include "achsat/formula.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace achsat {

enum class Verdict { sat, unsat, unknown };

std::string_view to_string(Verdict v);

struct SolveResult {
    Verdict verdict = Verdict::unknown;
    std::optional<Assignment> witness; // present iff verdict == sat
    std::uint64_t decisions = 0;

    bool sat() const { return verdict == Verdict::sat; }
    bool unsat() const { return verdict == Verdict::unsat; }
};

// Resource limits for DPLL; a run that hits one returns Verdict::unknown.
struct SolveLimits {
    std::optional<std::chrono::milliseconds> time_budget;
    std::uint64_t max_decisions = 0; // 0 = unlimited
};

constexpr std::uint32_t kBruteForceMaxVars = 24;

// Exhaustive scan over all 2^n assignments. Ground truth for everything else.
// Throws SizeError for n > kBruteForceMaxVars.
SolveResult brute_force_satisfiable(FormulaView f);

// DPLL with unit propagation and chronological backtracking. Branches on the
// lowest-index unassigned variable among the shortest open clauses, true
// first, so runs are reproducible.
SolveResult dpll_satisfiable(FormulaView f, const SolveLimits& limits = {});

// Linear-time 2-SAT via strongly connected components of the implication
// graph. Throws WidthError unless k == 2.
SolveResult two_sat_satisfiable(FormulaView f);

} // namespace achsat
