#include "achsat/stats.hpp"

#include <algorithm>
#include <cmath>

namespace achsat {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0)
        return {0, 1};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double centre = (phat + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    // The endpoints are exactly 0 and 1 at the extremes; rounding would miss that.
    const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    const double hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
    return {lo, hi};
}

double binomial_sigma(double p, std::uint64_t trials)
{
    return trials == 0 ? 0.0 : std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

} // namespace achsat
