#include "achsat/error.hpp"
#include "achsat/implication_graph.hpp"
#include "achsat/solvers.hpp"

namespace achsat {

SolveResult two_sat_satisfiable(FormulaView f)
{
    if (f.width() != 2)
        throw WidthError("2-SAT decider needs width 2, got " + std::to_string(f.width()));

    const ImplicationGraph g(f);
    const auto scc = strongly_connected_components(g);

    Assignment a(f.num_vars());
    for (std::uint32_t v = 1; v <= f.num_vars(); ++v) {
        const auto cp = scc.component[pos(v).code()];
        const auto cn = scc.component[neg(v).code()];
        if (cp == cn)
            return {Verdict::unsat, std::nullopt, 0};
        // Tarjan numbers sinks first; the literal later in topological order
        // is made true.
        a.set(v, cp < cn);
    }
    return {Verdict::sat, std::move(a), 0};
}

} // namespace achsat
