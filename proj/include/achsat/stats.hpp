#pragma once

#include <cstdint>

namespace achsat {

struct Interval {
    double lo = 0;
    double hi = 1;
};

inline constexpr double kZ95 = 1.959963984540054;

// Wilson score interval for a binomial proportion; [0,1] when trials == 0.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

// Bernoulli standard error sqrt(p(1-p)/trials).
double binomial_sigma(double p, std::uint64_t trials);

} // namespace achsat
