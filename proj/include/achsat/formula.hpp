#pragma once

#include "achsat/literal.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace achsat {

using ClauseView = std::span<const Literal>;

// Number of positive literals in a clause.
std::size_t count_positive(ClauseView clause);

// Throws InvalidParameters if the clause repeats a variable or uses a
// variable outside [1, n].
void validate_clause(ClauseView clause, std::uint32_t n);

// An owning clause. Literal order is the order of construction and is kept
// verbatim; reduce_to_2sat depends on it.
class Clause {
public:
    Clause() = default;
    Clause(std::initializer_list<Literal> lits);
    explicit Clause(std::vector<Literal> lits);
    explicit Clause(ClauseView lits) : Clause(std::vector<Literal>(lits.begin(), lits.end())) {}

    std::size_t size() const { return lits_.size(); }
    const Literal& operator[](std::size_t i) const { return lits_[i]; }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }
    ClauseView view() const { return lits_; }
    operator ClauseView() const { return lits_; }

    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> lits_;
};

// Non-owning view over a clause list of uniform width k.
class FormulaView {
public:
    FormulaView() = default;
    FormulaView(std::uint32_t n, std::uint32_t k, std::span<const Literal> lits)
        : n_(n), k_(k), lits_(lits)
    {}

    std::uint32_t num_vars() const { return n_; }
    std::uint32_t width() const { return k_; }
    std::size_t num_clauses() const { return k_ == 0 ? 0 : lits_.size() / k_; }
    bool empty() const { return lits_.empty(); }
    ClauseView clause(std::size_t i) const { return lits_.subspan(i * k_, k_); }
    std::span<const Literal> literals() const { return lits_; }
    FormulaView prefix(std::size_t m) const { return {n_, k_, lits_.first(m * k_)}; }

private:
    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::span<const Literal> lits_;
};

// Growing conjunction of k-clauses over n variables, in insertion order.
// Duplicate clauses are allowed and kept.
class Formula {
public:
    Formula() = default;
    Formula(std::uint32_t n, std::uint32_t k);

    std::uint32_t num_vars() const { return n_; }
    std::uint32_t width() const { return k_; }
    std::size_t num_clauses() const { return k_ == 0 ? 0 : lits_.size() / k_; }
    bool empty() const { return lits_.empty(); }
    ClauseView clause(std::size_t i) const { return view().clause(i); }

    // Validates width, range and variable distinctness.
    void add(ClauseView clause);
    // Caller guarantees the invariants (hot path of the process).
    void add_unchecked(ClauseView clause) { lits_.insert(lits_.end(), clause.begin(), clause.end()); }
    void reserve(std::size_t clauses) { lits_.reserve(clauses * k_); }

    FormulaView view() const { return {n_, k_, lits_}; }
    operator FormulaView() const { return view(); }
    FormulaView prefix(std::size_t m) const { return view().prefix(m); }
    std::span<const Literal> literals() const { return lits_; }

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::vector<Literal> lits_;
};

class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::uint32_t n, bool value = false) : values_(n, value ? 1 : 0) {}

    // Variables 1..ones true, the rest false.
    static Assignment first_ones(std::uint32_t n, std::uint32_t ones);

    std::uint32_t num_vars() const { return static_cast<std::uint32_t>(values_.size()); }
    bool value(std::uint32_t var) const { return values_[var - 1] != 0; }
    void set(std::uint32_t var, bool v) { values_[var - 1] = v ? 1 : 0; }
    bool satisfies(Literal l) const { return value(l.var()) != l.negated(); }
    bool satisfies(ClauseView clause) const;
    bool satisfies(FormulaView f) const;

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<std::uint8_t> values_;
};

} // namespace achsat
