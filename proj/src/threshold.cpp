#include "achsat/threshold.hpp"

#include "achsat/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace achsat {

namespace {

void check_kl(int k, int l)
{
    if (k < 2 || l < 1)
        throw InvalidParameters("need k >= 2 and l >= 1, got k=" + std::to_string(k) +
                                " l=" + std::to_string(l));
}

double log_sum_exp(const std::vector<double>& xs)
{
    const double hi = *std::max_element(xs.begin(), xs.end());
    if (!std::isfinite(hi))
        return hi;
    double s = 0;
    for (double x : xs)
        s += std::exp(x - hi);
    return hi + std::log(s);
}

BoundValue from_log(double log_value)
{
    return {log_value, std::exp(log_value)};
}

} // namespace

ClauseTypeProbs clause_type_probs(int k, int l)
{
    check_kl(k, l);
    // Pr[Bin(k,1/2) <= 1], the chance a candidate is passed over.
    const double reject = std::ldexp(static_cast<double>(k + 1), -k);
    const double prefix = std::pow(reject, l - 1);
    ClauseTypeProbs p;
    p.p0 = prefix * std::ldexp(1.0, -k);
    p.p1 = prefix * std::ldexp(static_cast<double>(k), -k);
    p.p2 = -std::expm1(l * std::log(reject));
    return p;
}

double r_threshold(int k, int l)
{
    const auto p = clause_type_probs(k, l);
    return 1.0 / (p.p1 + 2.0 * std::sqrt(p.p0 * p.p2));
}

ThresholdParams threshold_params(int k, int l)
{
    const auto p = clause_type_probs(k, l);
    return {k, l, p.p0, p.p1, p.p2, r_threshold(k, l)};
}

double first_moment_upper_bound(int k)
{
    return std::ldexp(std::numbers::ln2, k);
}

QProbs q_probs(int k, int l, double r, std::uint64_t n)
{
    if (n < 1 || r < 0)
        throw InvalidParameters("q_probs needs n >= 1 and r >= 0");
    const auto p = clause_type_probs(k, l);
    const double scale = r / static_cast<double>(n);
    return {2 * p.p0 * scale, p.p1 * scale, 2 * p.p2 * scale};
}

double binary_entropy(double beta)
{
    if (beta <= 0 || beta >= 1)
        return 0;
    return -beta * std::log(beta) - (1 - beta) * std::log1p(-beta);
}

double first_moment_exponent(double beta, double r, double p)
{
    if (!(beta > 0 && beta < 1))
        throw InvalidParameters("beta must lie in (0,1)");
    if (!(p >= 0 && p <= 1) || !(r >= 0))
        throw InvalidParameters("need p in [0,1] and r >= 0");
    const double miss = 1 - beta;
    // Probability a random clause of the biased model is falsified by x_beta.
    const double fail = p * miss * miss * miss + (1 - p) / 8;
    return binary_entropy(beta) + r * std::log1p(-fail);
}

FirstMomentMax max_first_moment(double r, double p)
{
    constexpr int kGrid = 4096;
    std::vector<double> betas;
    betas.reserve(kGrid + 40);
    for (int i = 1; i < kGrid; ++i)
        betas.push_back(static_cast<double>(i) / kGrid);
    for (int e = 4; e <= 12; ++e) {
        const double d = std::pow(10.0, -e);
        betas.push_back(d);
        betas.push_back(1 - d);
    }
    std::sort(betas.begin(), betas.end());

    std::size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < betas.size(); ++i) {
        const double v = first_moment_exponent(betas[i], r, p);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }

    double lo = best == 0 ? betas[0] / 2 : betas[best - 1];
    double hi = best + 1 == betas.size() ? (1 + betas.back()) / 2 : betas[best + 1];
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = first_moment_exponent(x1, r, p);
    double f2 = first_moment_exponent(x2, r, p);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = first_moment_exponent(x2, r, p);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = first_moment_exponent(x1, r, p);
        }
    }
    const double beta = (lo + hi) / 2;
    const double value = first_moment_exponent(beta, r, p);
    if (value >= best_value)
        return {beta, value};
    return {betas[best], best_value};
}

double first_moment_critical_r(double p)
{
    if (!(p >= 0 && p < 1))
        throw InvalidParameters("critical density needs p in [0,1)");
    double lo = 0;
    double hi = 8;
    while (max_first_moment(hi, p).value > 0) {
        lo = hi;
        hi *= 2;
        if (hi > 1e12)
            throw Error("no finite critical density found");
    }
    while (hi - lo > 1e-8) {
        const double mid = (lo + hi) / 2;
        (max_first_moment(mid, p).value > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

std::optional<double> bias_for_density(double r)
{
    if (!(r > 0))
        throw InvalidParameters("density must be positive");
    constexpr int kSteps = 10000;
    const auto positive = [r](int j) {
        return max_first_moment(r, j / static_cast<double>(kSteps)).value > 0;
    };
    // The maximum is attained at beta >= 1/2 where the clause-satisfaction
    // probability grows with p, so positivity is monotone in p.
    if (!positive(kSteps - 1))
        return std::nullopt;
    if (positive(0))
        return 0.0;
    int lo = 0, hi = kSteps - 1; // lo negative, hi positive
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        (positive(mid) ? hi : lo) = mid;
    }
    return hi / static_cast<double>(kSteps);
}

BoundValue expected_paths_bound(std::uint64_t n, std::uint64_t L, double r, int k, int l)
{
    if (L < 1 || n < 1 || r < 0)
        throw InvalidParameters("paths bound needs n >= 1, L >= 1, r >= 0");
    const auto p = clause_type_probs(k, l);
    if (p.p0 <= 0)
        throw InvalidParameters("paths bound needs p0 > 0");
    const double base = p.p1 + 2 * std::sqrt(p.p0 * p.p2);
    double log_value = std::log(2.0 * static_cast<double>(n)) + 0.5 * std::log(p.p2 / p.p0);
    if (L > 1)
        log_value += static_cast<double>(L - 1) * (std::log(r) + std::log(base));
    return from_log(log_value);
}

BoundValue expected_bicycles_bound(std::uint64_t n, std::uint64_t L, double r, int k, int l)
{
    if (L < 2 || n < 1 || r < 0)
        throw InvalidParameters("bicycles bound needs n >= 1, L >= 2, r >= 0");
    const auto p = clause_type_probs(k, l);
    if (p.p0 <= 0)
        throw InvalidParameters("bicycles bound needs p0 > 0");
    const double log_base = std::log(p.p1 + 2 * std::sqrt(p.p0 * p.p2));
    const double log_r = std::log(r);
    std::vector<double> terms;
    terms.reserve(L - 1);
    for (std::uint64_t t = 2; t <= L; ++t) {
        const double td = static_cast<double>(t);
        terms.push_back(2 * std::log(td) + (td + 1) * log_r + (td - 1) * log_base);
    }
    const double log_value = std::log(8.0) - std::log(static_cast<double>(n)) +
                             0.5 * std::log(p.p2 / p.p0) + log_sum_exp(terms);
    return from_log(log_value);
}

std::vector<ShiftCheck> verify_shift_conditions()
{
    std::vector<ShiftCheck> out;

    {
        const double r35 = r_threshold(3, 5);
        std::ostringstream d;
        d.precision(8);
        d << "r(3,5) = " << r35 << " vs 3-SAT upper bound " << kThreeSatUpperBound;
        out.push_back({"r(3,5) > 4.508", r35 > kThreeSatUpperBound, r35 - kThreeSatUpperBound, d.str()});
    }
    {
        ShiftCheck c{"r(k,5) >= 2^k ln 2 for k=4,5,6", true, std::numeric_limits<double>::infinity(), {}};
        std::ostringstream d;
        d.precision(8);
        for (int k = 4; k <= 6; ++k) {
            const double r = r_threshold(k, 5);
            const double ub = first_moment_upper_bound(k);
            c.pass = c.pass && r >= ub;
            c.margin = std::min(c.margin, r - ub);
            d << (k == 4 ? "" : "; ") << "k=" << k << ": " << r << " vs " << ub;
        }
        c.detail = d.str();
        out.push_back(std::move(c));
    }
    {
        const double r73 = r_threshold(7, 3);
        const double ub = first_moment_upper_bound(7);
        std::ostringstream d;
        d.precision(8);
        d << "r(7,3) = " << r73 << " vs 2^7 ln 2 = " << ub;
        out.push_back({"r(7,3) > 2^7 ln 2", r73 > ub, r73 - ub, d.str()});
    }
    {
        ShiftCheck c{"g(k) = 2^k ln 2 / r(k,3) strictly decreasing on [7,64]", true,
                     std::numeric_limits<double>::infinity(), {}};
        const auto g = [](int k) { return first_moment_upper_bound(k) / r_threshold(k, 3); };
        int worst = 7;
        for (int k = 7; k < 64; ++k) {
            const double step = g(k) - g(k + 1);
            c.pass = c.pass && step > 0;
            if (step < c.margin) {
                c.margin = step;
                worst = k;
            }
        }
        std::ostringstream d;
        d.precision(8);
        d << "g(7) = " << g(7) << ", g(64) = " << g(64) << ", smallest decrease at k=" << worst;
        c.detail = d.str();
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace achsat
