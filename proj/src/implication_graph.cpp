#include "achsat/implication_graph.hpp"

#include "achsat/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace achsat {

ImplicationGraph::ImplicationGraph(FormulaView f) : n_(f.num_vars())
{
    if (f.width() != 2)
        throw WidthError("implication graph needs a 2-CNF formula, got width " +
                         std::to_string(f.width()));
    const std::size_t vertices = num_vertices();
    offsets_.assign(vertices + 1, 0);
    for (std::size_t c = 0; c < f.num_clauses(); ++c) {
        const auto cl = f.clause(c);
        ++offsets_[(~cl[0]).code() + 1];
        ++offsets_[(~cl[1]).code() + 1];
    }
    for (std::size_t v = 0; v < vertices; ++v)
        offsets_[v + 1] += offsets_[v];
    targets_.resize(offsets_[vertices]);
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t c = 0; c < f.num_clauses(); ++c) {
        const auto cl = f.clause(c);
        targets_[fill[(~cl[0]).code()]++] = cl[1];
        targets_[fill[(~cl[1]).code()]++] = cl[0];
    }
}

std::size_t ImplicationGraph::count_edge(Literal from, Literal to) const
{
    const auto succ = successors(from);
    return static_cast<std::size_t>(std::count(succ.begin(), succ.end(), to));
}

bool ImplicationGraph::is_skew_symmetric() const
{
    for (std::uint32_t code = 0; code < num_vertices(); ++code) {
        const Literal from = Literal::from_code(code);
        for (Literal to : successors(from))
            if (count_edge(from, to) != count_edge(~to, ~from))
                return false;
    }
    return true;
}

void ImplicationGraph::write_dot(std::ostream& out) const
{
    out << "digraph implication {\n";
    for (std::uint32_t code = 0; code < num_vertices(); ++code)
        out << "  v" << code << " [label=\"" << Literal::from_code(code).label() << "\"];\n";
    for (std::uint32_t code = 0; code < num_vertices(); ++code)
        for (Literal to : successors(Literal::from_code(code)))
            out << "  v" << code << " -> v" << to.code() << ";\n";
    out << "}\n";
}

SccDecomposition strongly_connected_components(const ImplicationGraph& g)
{
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    const std::size_t vertices = g.num_vertices();

    SccDecomposition scc;
    scc.component.assign(vertices, kUnvisited);
    std::vector<std::uint32_t> index(vertices, kUnvisited);
    std::vector<std::uint32_t> low(vertices, 0);
    std::vector<std::uint8_t> on_stack(vertices, 0);
    std::vector<std::uint32_t> stack;

    struct Frame {
        std::uint32_t vertex;
        std::uint32_t next_edge;
    };
    std::vector<Frame> frames;
    std::uint32_t counter = 0;

    for (std::uint32_t root = 0; root < vertices; ++root) {
        if (index[root] != kUnvisited)
            continue;
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        frames.push_back({root, 0});

        while (!frames.empty()) {
            auto& frame = frames.back();
            const std::uint32_t v = frame.vertex;
            const auto succ = g.successors(Literal::from_code(v));
            if (frame.next_edge < succ.size()) {
                const std::uint32_t w = succ[frame.next_edge++].code();
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }

            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    scc.component[w] = scc.count;
                } while (w != v);
                ++scc.count;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const std::uint32_t parent = frames.back().vertex;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return scc;
}

} // namespace achsat
