#pragma once

#include "achsat/formula.hpp"
#include "achsat/rng.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace achsat {

// The l clauses presented in one step, stored flat with width k. Indices are
// 0-based: a rule returns a value in [0, l).
class Candidates {
public:
    Candidates(std::span<const Literal> lits, std::uint32_t k) : lits_(lits), k_(k) {}

    std::size_t size() const { return k_ == 0 ? 0 : lits_.size() / k_; }
    std::uint32_t width() const { return k_; }
    ClauseView operator[](std::size_t i) const { return lits_.subspan(i * k_, k_); }

private:
    std::span<const Literal> lits_;
    std::uint32_t k_;
};

// Owning candidate list, mostly for tests and one-off calls.
class CandidateSet {
public:
    explicit CandidateSet(std::initializer_list<Clause> clauses);

    Candidates view() const { return {lits_, k_}; }
    operator Candidates() const { return view(); }

private:
    std::vector<Literal> lits_;
    std::uint32_t k_ = 0;
};

// Everything a rule may look at: the formula so far and, when requested, all
// candidates presented in earlier steps. Never future steps.
struct ProcessView {
    FormulaView formula;
    std::span<const Literal> history; // flat, l*k literals per past step
    std::uint32_t l = 0;
};

class SelectionRule {
public:
    virtual ~SelectionRule() = default;

    virtual std::string name() const = 0;
    // Index in [0, candidates.size()).
    virtual std::size_t choose(Candidates candidates, const ProcessView& view, Rng& rng) = 0;
    virtual bool needs_history() const { return false; }
};

// Name plus optional ":"-separated argument, e.g. "symmetric:none".
struct RuleSpec {
    std::string name;
    std::string arg;

    std::string to_string() const { return arg.empty() ? name : name + ":" + arg; }
    static RuleSpec parse(std::string_view text);

    friend bool operator==(const RuleSpec&, const RuleSpec&) = default;
};

struct RuleContext {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t l = 0;
};

// Fresh rule instance for one trajectory (rules may memoize per-formula
// state). Throws InvalidParameters for unknown names, WidthError when the
// rule does not support l.
std::unique_ptr<SelectionRule> make_rule(const RuleSpec& spec, const RuleContext& ctx);

std::vector<std::string> known_rule_names();

// --- Pure decision functions behind the shipped rules -----------------------

// 0 always; with it the process is classic uniform random k-SAT.
std::size_t always_first_choice(Candidates candidates);

// First of the first l-1 candidates with at least two positive literals,
// else the last candidate.
std::size_t majority_positive_choice(Candidates candidates);

// Mirror image: first of the first l-1 with at most one positive literal,
// else the last.
std::size_t anti_majority_choice(Candidates candidates);

enum class SymmetricMode { all, none };

// Literal occurrence table of a formula (exact literal, with polarity).
class LiteralPresence {
public:
    explicit LiteralPresence(std::uint32_t n = 0) : present_(2 * std::size_t{n}, 0) {}

    // Absorbs clauses of `f` not seen yet; restarts if f shrank.
    void sync(FormulaView f);
    bool contains(Literal l) const { return present_[l.code()] != 0; }

private:
    std::vector<std::uint8_t> present_;
    std::size_t absorbed_ = 0;
};

// l must be 2 (WidthError otherwise). all: keep candidate 0 iff every one of
// its literals already occurs in the formula; none: iff none of them does.
std::size_t symmetric_candidate_choice(Candidates candidates, const LiteralPresence& presence,
                                       SymmetricMode mode);

} // namespace achsat
