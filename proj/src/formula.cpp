#include "achsat/formula.hpp"

#include "achsat/error.hpp"

#include <algorithm>
#include <string>

namespace achsat {

std::size_t count_positive(ClauseView clause)
{
    return static_cast<std::size_t>(
        std::count_if(clause.begin(), clause.end(), [](Literal l) { return l.positive(); }));
}

void validate_clause(ClauseView clause, std::uint32_t n)
{
    for (std::size_t i = 0; i < clause.size(); ++i) {
        const auto v = clause[i].var();
        if (v < 1 || v > n)
            throw InvalidParameters("literal " + clause[i].label() + " outside variable range 1.." +
                                    std::to_string(n));
        for (std::size_t j = 0; j < i; ++j)
            if (clause[j].var() == v)
                throw InvalidParameters("clause repeats variable x" + std::to_string(v));
    }
}

Clause::Clause(std::initializer_list<Literal> lits) : Clause(std::vector<Literal>(lits)) {}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits))
{
    for (std::size_t i = 0; i < lits_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (lits_[i].var() == lits_[j].var())
                throw InvalidParameters("clause repeats variable x" + std::to_string(lits_[i].var()));
}

Formula::Formula(std::uint32_t n, std::uint32_t k) : n_(n), k_(k)
{
    if (k < 1)
        throw InvalidParameters("clause width must be at least 1");
    if (k > n)
        throw InvalidParameters("clause width " + std::to_string(k) + " exceeds variable count " +
                                std::to_string(n));
}

void Formula::add(ClauseView clause)
{
    if (clause.size() != k_)
        throw WidthError("clause of width " + std::to_string(clause.size()) +
                         " added to a width-" + std::to_string(k_) + " formula");
    validate_clause(clause, n_);
    add_unchecked(clause);
}

Assignment Assignment::first_ones(std::uint32_t n, std::uint32_t ones)
{
    Assignment a(n);
    for (std::uint32_t v = 1; v <= std::min(n, ones); ++v)
        a.set(v, true);
    return a;
}

bool Assignment::satisfies(ClauseView clause) const
{
    return std::any_of(clause.begin(), clause.end(), [&](Literal l) { return satisfies(l); });
}

bool Assignment::satisfies(FormulaView f) const
{
    if (f.num_vars() > num_vars())
        return false;
    for (std::size_t i = 0; i < f.num_clauses(); ++i)
        if (!satisfies(f.clause(i)))
            return false;
    return true;
}

} // namespace achsat
