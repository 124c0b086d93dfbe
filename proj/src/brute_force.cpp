#include "achsat/error.hpp"
#include "achsat/solvers.hpp"

#include <string>
#include <vector>

namespace achsat {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::sat:
        return "sat";
    case Verdict::unsat:
        return "unsat";
    case Verdict::unknown:
        break;
    }
    return "unknown";
}

SolveResult brute_force_satisfiable(FormulaView f)
{
    const std::uint32_t n = f.num_vars();
    if (n > kBruteForceMaxVars)
        throw SizeError("brute force limited to " + std::to_string(kBruteForceMaxVars) +
                        " variables, got " + std::to_string(n));

    // Bit v-1 of an assignment word is the value of x_v.
    struct Masks {
        std::uint32_t pos = 0, neg = 0;
    };
    std::vector<Masks> clauses(f.num_clauses());
    for (std::size_t i = 0; i < clauses.size(); ++i)
        for (Literal l : f.clause(i))
            (l.negated() ? clauses[i].neg : clauses[i].pos) |= 1u << (l.var() - 1);

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < total; ++a) {
        const auto word = static_cast<std::uint32_t>(a);
        bool ok = true;
        for (const auto& c : clauses)
            if (((word & c.pos) | (~word & c.neg)) == 0) {
                ok = false;
                break;
            }
        if (ok) {
            Assignment w(n);
            for (std::uint32_t v = 1; v <= n; ++v)
                w.set(v, (word >> (v - 1)) & 1u);
            return {Verdict::sat, std::move(w), 0};
        }
    }
    return {Verdict::unsat, std::nullopt, 0};
}

} // namespace achsat
