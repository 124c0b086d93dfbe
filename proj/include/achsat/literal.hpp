#pragma once

#include <cstdint>
#include <string>

namespace achsat {

// A literal over variables 1..n, packed as 2*(var-1) + negated so that the
// code doubles as an implication-graph vertex index.
class Literal {
public:
    constexpr Literal() = default;
    constexpr Literal(std::uint32_t var, bool negated)
        : code_(2 * (var - 1) + (negated ? 1u : 0u))
    {}

    static constexpr Literal from_code(std::uint32_t code)
    {
        Literal l;
        l.code_ = code;
        return l;
    }
    // DIMACS convention: +v / -v.
    static constexpr Literal from_dimacs(std::int64_t x)
    {
        return x > 0 ? Literal(static_cast<std::uint32_t>(x), false)
                     : Literal(static_cast<std::uint32_t>(-x), true);
    }

    constexpr std::uint32_t var() const { return code_ / 2 + 1; }
    constexpr bool negated() const { return code_ & 1u; }
    constexpr bool positive() const { return !negated(); }
    constexpr std::uint32_t code() const { return code_; }
    constexpr Literal operator~() const { return from_code(code_ ^ 1u); }
    constexpr std::int64_t to_dimacs() const
    {
        return negated() ? -static_cast<std::int64_t>(var())
                         : static_cast<std::int64_t>(var());
    }

    // "x3" / "~x3"
    std::string label() const
    {
        return (negated() ? "~x" : "x") + std::to_string(var());
    }

    friend constexpr bool operator==(Literal, Literal) = default;
    friend constexpr auto operator<=>(Literal, Literal) = default;

private:
    std::uint32_t code_ = 0;
};

constexpr Literal pos(std::uint32_t var) { return Literal(var, false); }
constexpr Literal neg(std::uint32_t var) { return Literal(var, true); }

} // namespace achsat
