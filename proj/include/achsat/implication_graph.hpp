#pragma once

#include "achsat/formula.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace achsat {

// Directed graph on the 2n literal vertices of a 2-CNF formula. Clause
// (a ∨ b) contributes ~a -> b and ~b -> a; parallel edges from duplicate
// clauses are kept. Vertex id of a literal is Literal::code().
class ImplicationGraph {
public:
    ImplicationGraph() = default;

    // Throws WidthError unless k == 2.
    explicit ImplicationGraph(FormulaView f);

    std::uint32_t num_vars() const { return n_; }
    std::size_t num_vertices() const { return 2 * std::size_t{n_}; }
    std::size_t num_edges() const { return targets_.size(); }

    std::span<const Literal> successors(Literal from) const
    {
        return {targets_.data() + offsets_[from.code()],
                targets_.data() + offsets_[from.code() + 1]};
    }
    // Edge multiplicity.
    std::size_t count_edge(Literal from, Literal to) const;
    bool has_edge(Literal from, Literal to) const { return count_edge(from, to) != 0; }

    // Edge (a -> b) present iff (~b -> ~a) present, with equal multiplicity.
    bool is_skew_symmetric() const;

    // Graphviz rendering with vertex labels "x3" / "~x3".
    void write_dot(std::ostream& out) const;

private:
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> offsets_; // CSR, size 2n+1
    std::vector<Literal> targets_;
};

// Tarjan SCC. Component ids come out in reverse topological order of the
// condensation (sinks first).
struct SccDecomposition {
    std::vector<std::uint32_t> component; // per vertex
    std::uint32_t count = 0;
};

SccDecomposition strongly_connected_components(const ImplicationGraph& g);

} // namespace achsat
