#include "achsat/solvers.hpp"

#include <limits>
#include <vector>

namespace achsat {

namespace {

class Dpll {
public:
    explicit Dpll(FormulaView f)
        : f_(f), k_(f.width()), value_(f.num_vars() + 1, kUnassigned),
          occurrences_(2 * std::size_t{f.num_vars()}), sat_count_(f.num_clauses(), 0),
          false_count_(f.num_clauses(), 0)
    {
        for (std::size_t c = 0; c < f.num_clauses(); ++c)
            for (Literal l : f.clause(c))
                occurrences_[l.code()].push_back(static_cast<std::uint32_t>(c));
    }

    SolveResult run(const SolveLimits& limits)
    {
        const auto start = std::chrono::steady_clock::now();
        if (k_ == 1)
            for (std::size_t c = 0; c < f_.num_clauses(); ++c)
                units_.push_back(static_cast<std::uint32_t>(c));
        propagate();

        std::uint64_t decisions = 0;
        for (;;) {
            if (conflict_) {
                if (!backtrack())
                    return {Verdict::unsat, std::nullopt, decisions};
                continue;
            }
            const std::uint32_t var = pick_branch_variable();
            if (var == 0)
                return {Verdict::sat, witness(), decisions};

            ++decisions;
            if (limits.max_decisions != 0 && decisions > limits.max_decisions)
                return {Verdict::unknown, std::nullopt, decisions};
            if (limits.time_budget && (decisions & 0x3ff) == 0 &&
                std::chrono::steady_clock::now() - start > *limits.time_budget)
                return {Verdict::unknown, std::nullopt, decisions};

            decisions_.push_back({trail_.size(), pos(var), false});
            assign(pos(var));
            propagate();
        }
    }

private:
    static constexpr std::int8_t kUnassigned = -1;

    struct Decision {
        std::size_t trail_mark;
        Literal lit;
        bool flipped;
    };

    bool is_true(Literal l) const { return value_[l.var()] == (l.negated() ? 0 : 1); }
    bool is_unassigned(Literal l) const { return value_[l.var()] == kUnassigned; }

    void assign(Literal l)
    {
        value_[l.var()] = l.negated() ? 0 : 1;
        trail_.push_back(l);
        for (auto c : occurrences_[l.code()])
            ++sat_count_[c];
        for (auto c : occurrences_[(~l).code()]) {
            ++false_count_[c];
            if (sat_count_[c] != 0)
                continue;
            if (false_count_[c] == k_)
                conflict_ = true;
            else if (false_count_[c] + 1 == k_)
                units_.push_back(c);
        }
    }

    void unassign(Literal l)
    {
        value_[l.var()] = kUnassigned;
        for (auto c : occurrences_[l.code()])
            --sat_count_[c];
        for (auto c : occurrences_[(~l).code()])
            --false_count_[c];
    }

    void propagate()
    {
        while (!units_.empty() && !conflict_) {
            const auto c = units_.back();
            units_.pop_back();
            if (sat_count_[c] != 0 || false_count_[c] + 1 != k_)
                continue;
            for (Literal l : f_.clause(c))
                if (is_unassigned(l)) {
                    assign(l);
                    break;
                }
        }
        units_.clear();
    }

    void undo_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            unassign(trail_.back());
            trail_.pop_back();
        }
        conflict_ = false;
    }

    bool backtrack()
    {
        while (!decisions_.empty()) {
            auto& d = decisions_.back();
            undo_to(d.trail_mark);
            if (!d.flipped) {
                d.flipped = true;
                assign(~d.lit);
                propagate();
                return true;
            }
            decisions_.pop_back();
        }
        return false;
    }

    // 0 when every clause is satisfied.
    std::uint32_t pick_branch_variable() const
    {
        std::uint32_t best_open = std::numeric_limits<std::uint32_t>::max();
        std::uint32_t best_var = 0;
        for (std::size_t c = 0; c < sat_count_.size(); ++c) {
            if (sat_count_[c] != 0)
                continue;
            const std::uint32_t open = k_ - false_count_[c];
            if (open > best_open)
                continue;
            std::uint32_t lowest = std::numeric_limits<std::uint32_t>::max();
            for (Literal l : f_.clause(c))
                if (is_unassigned(l) && l.var() < lowest)
                    lowest = l.var();
            if (open < best_open || lowest < best_var) {
                best_open = open;
                best_var = lowest;
            }
        }
        return best_var;
    }

    Assignment witness() const
    {
        Assignment a(f_.num_vars());
        for (std::uint32_t v = 1; v <= f_.num_vars(); ++v)
            a.set(v, value_[v] == 1);
        return a;
    }

    FormulaView f_;
    std::uint32_t k_;
    std::vector<std::int8_t> value_; // indexed by variable, slot 0 unused
    std::vector<std::vector<std::uint32_t>> occurrences_;
    std::vector<std::uint32_t> sat_count_;
    std::vector<std::uint32_t> false_count_;
    std::vector<Literal> trail_;
    std::vector<Decision> decisions_;
    std::vector<std::uint32_t> units_;
    bool conflict_ = false;
};

} // namespace

SolveResult dpll_satisfiable(FormulaView f, const SolveLimits& limits)
{
    return Dpll(f).run(limits);
}

} // namespace achsat
