#include "achsat/rules.hpp"

#include "achsat/error.hpp"
#include "achsat/reduction.hpp"

#include <algorithm>

namespace achsat {

CandidateSet::CandidateSet(std::initializer_list<Clause> clauses)
{
    for (const auto& c : clauses) {
        if (k_ == 0)
            k_ = static_cast<std::uint32_t>(c.size());
        else if (c.size() != k_)
            throw WidthError("candidate clauses must share one width");
        lits_.insert(lits_.end(), c.begin(), c.end());
    }
}

RuleSpec RuleSpec::parse(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        return {std::string(text), {}};
    return {std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

std::size_t always_first_choice(Candidates)
{
    return 0;
}

std::size_t majority_positive_choice(Candidates candidates)
{
    const std::size_t l = candidates.size();
    for (std::size_t i = 0; i + 1 < l; ++i)
        if (count_positive(candidates[i]) >= 2)
            return i;
    return l - 1;
}

std::size_t anti_majority_choice(Candidates candidates)
{
    const std::size_t l = candidates.size();
    for (std::size_t i = 0; i + 1 < l; ++i)
        if (count_positive(candidates[i]) <= 1)
            return i;
    return l - 1;
}

void LiteralPresence::sync(FormulaView f)
{
    if (f.num_clauses() < absorbed_) {
        std::fill(present_.begin(), present_.end(), 0);
        absorbed_ = 0;
    }
    for (; absorbed_ < f.num_clauses(); ++absorbed_)
        for (Literal l : f.clause(absorbed_))
            present_[l.code()] = 1;
}

std::size_t symmetric_candidate_choice(Candidates candidates, const LiteralPresence& presence,
                                       SymmetricMode mode)
{
    if (candidates.size() != 2)
        throw WidthError("symmetric rule needs exactly 2 candidates");
    const auto first = candidates[0];
    const auto in_formula = [&](Literal l) { return presence.contains(l); };
    const bool keep = mode == SymmetricMode::all
                          ? std::all_of(first.begin(), first.end(), in_formula)
                          : std::none_of(first.begin(), first.end(), in_formula);
    return keep ? 0 : 1;
}

namespace {

class AlwaysFirst final : public SelectionRule {
public:
    std::string name() const override { return "always_first"; }
    std::size_t choose(Candidates c, const ProcessView&, Rng&) override { return always_first_choice(c); }
};

class MajorityPositive final : public SelectionRule {
public:
    std::string name() const override { return "majority_positive"; }
    std::size_t choose(Candidates c, const ProcessView&, Rng&) override
    {
        return majority_positive_choice(c);
    }
};

class AntiMajority final : public SelectionRule {
public:
    std::string name() const override { return "anti_majority"; }
    std::size_t choose(Candidates c, const ProcessView&, Rng&) override { return anti_majority_choice(c); }
};

class Symmetric final : public SelectionRule {
public:
    Symmetric(std::uint32_t n, SymmetricMode mode) : presence_(n), mode_(mode) {}

    std::string name() const override
    {
        return mode_ == SymmetricMode::all ? "symmetric:all" : "symmetric:none";
    }
    std::size_t choose(Candidates c, const ProcessView& view, Rng&) override
    {
        presence_.sync(view.formula);
        return symmetric_candidate_choice(c, presence_, mode_);
    }

private:
    LiteralPresence presence_;
    SymmetricMode mode_;
};

// Prefers the candidate with the most literals on variables 1..ceil(n/10).
class VariableConcentrator final : public SelectionRule {
public:
    explicit VariableConcentrator(std::uint32_t n) : cutoff_((n + 9) / 10) {}

    std::string name() const override { return "variable_concentrator"; }
    std::size_t choose(Candidates c, const ProcessView&, Rng&) override
    {
        std::size_t best = 0;
        std::size_t best_score = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto clause = c[i];
            const auto score = static_cast<std::size_t>(std::count_if(
                clause.begin(), clause.end(), [&](Literal l) { return l.var() <= cutoff_; }));
            if (score > best_score) {
                best_score = score;
                best = i;
            }
        }
        return best;
    }

private:
    std::uint32_t cutoff_;
};

// Picks the first candidate whose reduced 2-clause adds an implication edge
// ~a -> b closing a cycle of length <= depth + 1 in the reduced graph of the
// current formula (i.e. b reaches ~a within `depth` edges). Falls back to 0.
class ContradictionSeeker final : public SelectionRule {
public:
    ContradictionSeeker(std::uint32_t n, std::uint32_t depth)
        : adjacency_(2 * std::size_t{n}), stamp_(2 * std::size_t{n}, 0), depth_(depth)
    {}

    std::string name() const override { return "contradiction_seeker"; }
    std::size_t choose(Candidates c, const ProcessView& view, Rng&) override
    {
        sync(view.formula);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto [a, b] = reduce_clause(c[i]);
            if (reaches(b, ~a) || reaches(a, ~b))
                return i;
        }
        return 0;
    }

private:
    void sync(FormulaView f)
    {
        if (f.num_clauses() < absorbed_) {
            for (auto& succ : adjacency_)
                succ.clear();
            absorbed_ = 0;
        }
        for (; absorbed_ < f.num_clauses(); ++absorbed_) {
            const auto [a, b] = reduce_clause(f.clause(absorbed_));
            adjacency_[(~a).code()].push_back(b);
            adjacency_[(~b).code()].push_back(a);
        }
    }

    bool reaches(Literal from, Literal to)
    {
        if (from == to)
            return true;
        ++epoch_;
        frontier_.assign(1, from);
        stamp_[from.code()] = epoch_;
        for (std::uint32_t d = 0; d < depth_ && !frontier_.empty(); ++d) {
            next_.clear();
            for (Literal u : frontier_)
                for (Literal v : adjacency_[u.code()]) {
                    if (v == to)
                        return true;
                    if (stamp_[v.code()] != epoch_) {
                        stamp_[v.code()] = epoch_;
                        next_.push_back(v);
                    }
                }
            frontier_.swap(next_);
        }
        return false;
    }

    std::vector<std::vector<Literal>> adjacency_;
    std::vector<std::uint32_t> stamp_;
    std::vector<Literal> frontier_, next_;
    std::uint32_t epoch_ = 0;
    std::uint32_t depth_;
    std::size_t absorbed_ = 0;
};

class RandomCoin final : public SelectionRule {
public:
    std::string name() const override { return "random_coin"; }
    std::size_t choose(Candidates c, const ProcessView&, Rng& rng) override
    {
        return std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng);
    }
};

std::uint32_t parse_depth(const std::string& arg)
{
    if (arg.empty())
        return 4;
    try {
        const long d = std::stol(arg);
        if (d >= 1 && d <= 64)
            return static_cast<std::uint32_t>(d);
    } catch (const std::exception&) {
    }
    throw InvalidParameters("contradiction_seeker depth must be an integer in [1,64]");
}

} // namespace

std::vector<std::string> known_rule_names()
{
    return {"always_first",          "majority_positive",    "anti_majority", "symmetric",
            "variable_concentrator", "contradiction_seeker", "random_coin"};
}

std::unique_ptr<SelectionRule> make_rule(const RuleSpec& spec, const RuleContext& ctx)
{
    if (ctx.l < 1)
        throw InvalidParameters("rules need l >= 1");
    const auto& name = spec.name;
    if (name == "always_first")
        return std::make_unique<AlwaysFirst>();
    if (name == "majority_positive")
        return std::make_unique<MajorityPositive>();
    if (name == "anti_majority")
        return std::make_unique<AntiMajority>();
    if (name == "variable_concentrator")
        return std::make_unique<VariableConcentrator>(ctx.n);
    if (name == "random_coin")
        return std::make_unique<RandomCoin>();
    if (name == "symmetric") {
        if (ctx.l != 2)
            throw WidthError("symmetric rule needs l = 2");
        if (spec.arg.empty() || spec.arg == "all")
            return std::make_unique<Symmetric>(ctx.n, SymmetricMode::all);
        if (spec.arg == "none")
            return std::make_unique<Symmetric>(ctx.n, SymmetricMode::none);
        throw InvalidParameters("symmetric rule mode must be 'all' or 'none'");
    }
    if (name == "contradiction_seeker") {
        if (ctx.k < 2)
            throw WidthError("contradiction_seeker needs k >= 2");
        return std::make_unique<ContradictionSeeker>(ctx.n, parse_depth(spec.arg));
    }
    throw InvalidParameters("unknown rule '" + name + "'");
}

} // namespace achsat
