#pragma once

// Test-only reference computations. Nothing here calls into the library code
// paths it is used to check.

#include "achsat/formula.hpp"
#include "achsat/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace achsat::oracle {

// Threshold expression written out term by term, no shared helpers.
inline double r_threshold_expanded(int k, int l)
{
    const double two_k = std::pow(2.0, k);
    const double a = (k + 1) / two_k;
    const double lead = std::pow(a, l - 1);
    return 1.0 / (lead * (k / two_k) + 2.0 * std::sqrt(lead * (1.0 / two_k) * (1.0 - std::pow(a, l))));
}

// Satisfiable iff some assignment (enumerated over a plain bool vector)
// satisfies every clause. Independent of the bitmask brute-force decider.
inline bool naive_satisfiable(FormulaView f)
{
    const std::uint32_t n = f.num_vars();
    std::vector<bool> value(n + 1, false);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        for (std::uint32_t v = 1; v <= n; ++v)
            value[v] = (a >> (v - 1)) & 1u;
        bool all = true;
        for (std::size_t c = 0; c < f.num_clauses() && all; ++c) {
            bool any = false;
            for (Literal l : f.clause(c))
                any = any || (value[l.var()] != l.negated());
            all = any;
        }
        if (all)
            return true;
    }
    return false;
}

// Random formula with clauses built directly from std::shuffle, so it shares
// no code with the library sampler.
inline Formula random_formula(std::uint32_t n, std::uint32_t k, std::size_t m, Rng& rng)
{
    Formula f(n, k);
    std::vector<std::uint32_t> vars(n);
    for (std::uint32_t v = 0; v < n; ++v)
        vars[v] = v + 1;
    std::vector<Literal> clause(k);
    for (std::size_t i = 0; i < m; ++i) {
        std::shuffle(vars.begin(), vars.end(), rng);
        for (std::uint32_t j = 0; j < k; ++j)
            clause[j] = Literal(vars[j], std::bernoulli_distribution(0.5)(rng));
        f.add(clause);
    }
    return f;
}

// |observed - expected| within `sigmas` binomial standard deviations.
inline bool within_sigma(std::uint64_t hits, std::uint64_t trials, double p, double sigmas = 3.0)
{
    const double mean = p * static_cast<double>(trials);
    const double sd = std::sqrt(static_cast<double>(trials) * p * (1 - p));
    return std::abs(static_cast<double>(hits) - mean) <= sigmas * sd;
}

} // namespace achsat::oracle
