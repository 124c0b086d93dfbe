#include "achsat/reduction.hpp"

#include "achsat/error.hpp"

#include <string>

namespace achsat {

std::array<Literal, 2> reduce_clause(ClauseView clause)
{
    if (clause.size() < 2)
        throw WidthError("reduction needs clauses of width >= 2");
    std::array<Literal, 2> positives{};
    std::size_t num_pos = 0;
    std::optional<Literal> first_negative;
    for (Literal l : clause) {
        if (l.positive()) {
            if (num_pos < 2)
                positives[num_pos] = l;
            ++num_pos;
        } else if (!first_negative) {
            first_negative = l;
        }
    }
    if (num_pos >= 2)
        return positives;
    if (num_pos == 1)
        return {positives[0], *first_negative};
    return {clause[0], clause[1]};
}

Formula reduce_to_2sat(FormulaView f)
{
    if (f.width() < 2)
        throw WidthError("reduction needs width >= 2, got " + std::to_string(f.width()));
    Formula out(f.num_vars(), 2);
    out.reserve(f.num_clauses());
    for (std::size_t i = 0; i < f.num_clauses(); ++i) {
        const auto c = reduce_clause(f.clause(i));
        out.add_unchecked(c);
    }
    return out;
}

bool is_valid_bicycle(const ImplicationGraph& g, const Bicycle& b)
{
    if (b.path.size() < 2)
        return false;
    std::vector<std::uint8_t> seen(g.num_vars() + 1, 0);
    for (Literal w : b.path) {
        if (w.var() < 1 || w.var() > g.num_vars() || seen[w.var()])
            return false;
        seen[w.var()] = 1;
    }
    for (std::size_t i = 0; i + 1 < b.path.size(); ++i)
        if (!g.has_edge(b.path[i], b.path[i + 1]))
            return false;
    const auto on_path = [&](Literal x) { return x.var() <= g.num_vars() && seen[x.var()]; };
    return on_path(b.entry) && on_path(b.exit) && g.has_edge(b.entry, b.path.front()) &&
           g.has_edge(b.path.back(), b.exit);
}

namespace {

class BicycleSearch {
public:
    BicycleSearch(const ImplicationGraph& g, std::size_t max_len)
        : g_(g), max_len_(max_len), on_path_(g.num_vars() + 1, 0)
    {}

    std::optional<Bicycle> run()
    {
        for (std::uint32_t code = 0; code < g_.num_vertices(); ++code) {
            const Literal start = Literal::from_code(code);
            push(start);
            const bool found = extend();
            if (found)
                return found_;
            pop();
        }
        return std::nullopt;
    }

private:
    void push(Literal w)
    {
        path_.push_back(w);
        on_path_[w.var()] = 1;
    }
    void pop()
    {
        on_path_[path_.back().var()] = 0;
        path_.pop_back();
    }

    // u -> w1 iff ~w1 -> ~u (skew symmetry), so predecessors come from the
    // successor list of ~w1.
    std::optional<Literal> entry_edge() const
    {
        for (Literal x : g_.successors(~path_.front()))
            if (on_path_[x.var()])
                return ~x;
        return std::nullopt;
    }

    std::optional<Literal> exit_edge() const
    {
        for (Literal v : g_.successors(path_.back()))
            if (on_path_[v.var()])
                return v;
        return std::nullopt;
    }

    bool extend()
    {
        if (path_.size() >= 2) {
            const auto u = entry_edge();
            const auto v = u ? exit_edge() : std::nullopt;
            if (u && v) {
                found_ = Bicycle{path_, *u, *v};
                return true;
            }
        }
        if (path_.size() >= max_len_)
            return false;
        for (Literal next : g_.successors(path_.back())) {
            if (on_path_[next.var()])
                continue;
            push(next);
            if (extend())
                return true;
            pop();
        }
        return false;
    }

    const ImplicationGraph& g_;
    std::size_t max_len_;
    std::vector<std::uint8_t> on_path_;
    std::vector<Literal> path_;
    std::optional<Bicycle> found_;
};

} // namespace

std::optional<Bicycle> find_bicycle(const ImplicationGraph& g, std::size_t max_len)
{
    if (g.num_vars() > kBicycleSearchMaxVars)
        throw SizeError("exhaustive bicycle search limited to " +
                        std::to_string(kBicycleSearchMaxVars) + " variables");
    if (max_len < 2)
        return std::nullopt;
    return BicycleSearch(g, max_len).run();
}

namespace {

// Calls emit(slot) for each slot in [0, total) independently with probability q.
template <class Emit>
void bernoulli_slots(std::uint64_t total, double q, Rng& rng, Emit&& emit)
{
    if (q <= 0 || total == 0)
        return;
    if (q >= 1) {
        for (std::uint64_t s = 0; s < total; ++s)
            emit(s);
        return;
    }
    std::geometric_distribution<std::uint64_t> gap(q);
    std::uint64_t slot = gap(rng);
    while (slot < total) {
        emit(slot);
        const std::uint64_t skip = gap(rng);
        if (skip >= total - slot)
            break;
        slot += 1 + skip;
    }
}

// Monotone unranking of slots over pairs i < j in lexicographic order.
class PairWalker {
public:
    explicit PairWalker(std::uint32_t n) : n_(n) {}

    std::pair<std::uint32_t, std::uint32_t> at(std::uint64_t slot)
    {
        while (slot >= row_start_ + (n_ - row_)) {
            row_start_ += n_ - row_;
            ++row_;
        }
        return {row_, static_cast<std::uint32_t>(row_ + 1 + (slot - row_start_))};
    }

private:
    std::uint32_t n_;
    std::uint32_t row_ = 1;
    std::uint64_t row_start_ = 0;
};

void check_probability(double q, const char* name)
{
    if (!(q >= 0 && q <= 1))
        throw InvalidParameters(std::string(name) + " must lie in [0,1]");
}

} // namespace

Formula sample_binomial_2sat(const BinomialTwoSatParams& params, Rng& rng)
{
    check_probability(params.q0, "q0");
    check_probability(params.q1, "q1");
    check_probability(params.q2, "q2");
    const std::uint32_t n = params.n;
    if (n < 2)
        throw InvalidParameters("binomial 2-SAT needs n >= 2");

    Formula f(n, 2);
    const std::uint64_t pairs = std::uint64_t{n} * (n - 1) / 2;

    {
        PairWalker walk(n);
        bernoulli_slots(pairs, params.q2, rng, [&](std::uint64_t s) {
            const auto [i, j] = walk.at(s);
            f.add_unchecked(std::array{pos(i), pos(j)});
        });
    }
    bernoulli_slots(std::uint64_t{n} * (n - 1), params.q1, rng, [&](std::uint64_t s) {
        const auto i = static_cast<std::uint32_t>(s / (n - 1)) + 1;
        auto j = static_cast<std::uint32_t>(s % (n - 1)) + 1;
        if (j >= i)
            ++j;
        f.add_unchecked(std::array{pos(i), neg(j)});
    });
    {
        PairWalker walk(n);
        bernoulli_slots(pairs, params.q0, rng, [&](std::uint64_t s) {
            const auto [i, j] = walk.at(s);
            f.add_unchecked(std::array{neg(i), neg(j)});
        });
    }
    return f;
}

} // namespace achsat
