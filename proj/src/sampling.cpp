#include "achsat/sampling.hpp"

#include "achsat/error.hpp"

#include <string>
#include <vector>

namespace achsat {

namespace {

void check_width(std::size_t k, std::uint32_t n)
{
    if (k < 1 || k > n)
        throw InvalidParameters("clause width " + std::to_string(k) + " invalid for " +
                                std::to_string(n) + " variables");
    if (k > 64)
        throw InvalidParameters("clause width above 64 is not supported");
}

// Rejection sampling of distinct variables keeps the sampled order, which
// matters downstream.
void sample_variables(std::span<Literal> out, std::uint32_t n, Rng& rng)
{
    std::uniform_int_distribution<std::uint32_t> var_dist(1, n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t v;
        bool repeat;
        do {
            v = var_dist(rng);
            repeat = false;
            for (std::size_t j = 0; j < i; ++j)
                if (out[j].var() == v) {
                    repeat = true;
                    break;
                }
        } while (repeat);
        out[i] = Literal(v, false);
    }
}

} // namespace

void sample_clause_into(std::span<Literal> out, std::uint32_t n, Rng& rng)
{
    check_width(out.size(), n);
    sample_variables(out, n, rng);
    const std::uint64_t signs = rng();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = Literal(out[i].var(), (signs >> i) & 1u);
}

void sample_positive_clause_into(std::span<Literal> out, std::uint32_t n, Rng& rng)
{
    check_width(out.size(), n);
    sample_variables(out, n, rng);
}

Clause sample_clause(std::uint32_t n, std::uint32_t k, Rng& rng)
{
    std::vector<Literal> lits(k);
    sample_clause_into(lits, n, rng);
    return Clause(std::move(lits));
}

Formula sample_uniform_formula(std::uint32_t n, std::uint32_t k, std::size_t m, Rng& rng)
{
    Formula f(n, k);
    f.reserve(m);
    std::vector<Literal> buf(k);
    for (std::size_t i = 0; i < m; ++i) {
        sample_clause_into(buf, n, rng);
        f.add_unchecked(buf);
    }
    return f;
}

} // namespace achsat
