#pragma once

#include "achsat/formula.hpp"
#include "achsat/rng.hpp"

#include <cstdint>
#include <span>

namespace achsat {

// Fills `out` (width k = out.size()) with a clause drawn uniformly from the
// 2^k * C(n,k) k-clauses: distinct variables in sampled order, independent
// fair polarities. Throws InvalidParameters unless 1 <= k <= n.
void sample_clause_into(std::span<Literal> out, std::uint32_t n, Rng& rng);

// Same variable choice, every literal positive.
void sample_positive_clause_into(std::span<Literal> out, std::uint32_t n, Rng& rng);

Clause sample_clause(std::uint32_t n, std::uint32_t k, Rng& rng);

// m clauses of classic uniform random k-SAT.
Formula sample_uniform_formula(std::uint32_t n, std::uint32_t k, std::size_t m, Rng& rng);

} // namespace achsat
