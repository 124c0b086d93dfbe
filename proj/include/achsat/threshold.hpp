#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace achsat {

// Literature constants for random 3-SAT (used as-is, not derived here).
inline constexpr double kThreeSatUpperBound = 4.508;
inline constexpr double kThreeSatLowerBound = 3.52;

// Distribution of the clause chosen by the majority-positive rule, bucketed by
// its positive-literal count: p0 = none, p1 = exactly one, p2 = two or more.
struct ClauseTypeProbs {
    double p0 = 0;
    double p1 = 0;
    double p2 = 0;
};

// Throws InvalidParameters unless k >= 2 and l >= 1.
ClauseTypeProbs clause_type_probs(int k, int l);

// Density below which the majority-positive l-choice process stays
// satisfiable whp: 1 / (p1 + 2 sqrt(p0 p2)).
double r_threshold(int k, int l);

struct ThresholdParams {
    int k = 0;
    int l = 0;
    double p0 = 0, p1 = 0, p2 = 0;
    double r_kl = 0;
};

ThresholdParams threshold_params(int k, int l);

// 2^k ln 2, the first-moment upper bound on the k-SAT threshold.
double first_moment_upper_bound(int k);

// Inclusion probabilities of the independent-clause 2-SAT model matched to
// the reduced formula at density r: q2 = 2 p2 r/n, q1 = p1 r/n, q0 = 2 p0 r/n.
struct QProbs {
    double q0 = 0;
    double q1 = 0;
    double q2 = 0;
};

QProbs q_probs(int k, int l, double r, std::uint64_t n);

// --- First moment for the biased 3-SAT model -------------------------------
//
// All logarithms are natural. A positive exponent means exponentially many
// satisfying assignments in expectation; zero is the cut-off.

double binary_entropy(double beta);

// H(beta) + r * ln(p (1 - (1-beta)^3) + (1-p) 7/8). Throws InvalidParameters
// for beta outside (0,1), p outside [0,1] or r < 0.
double first_moment_exponent(double beta, double r, double p);

struct FirstMomentMax {
    double beta = 0;
    double value = 0;
};

// Dense scan over (0,1) (with extra points packed against both ends), then
// golden-section refinement around the best grid point to 1e-10.
FirstMomentMax max_first_moment(double r, double p);

// sup{ r : max_beta exponent > 0 }, bisection to 1e-8. p in [0,1).
double first_moment_critical_r(double p);

// Least p on the grid {0, 1e-4, ..., 0.9999} with a positive maximum
// exponent at density r, or nullopt if none.
std::optional<double> bias_for_density(double r);

// --- Path and bicycle bounds -----------------------------------------------

struct BoundValue {
    double log_value = 0; // natural log of the bound
    double value = 0;     // exp(log_value); +inf when not representable
};

// 2n sqrt(p2/p0) r^(L-1) (p1 + 2 sqrt(p0 p2))^(L-1): bound on the expected
// number of implication-graph paths over L literals.
BoundValue expected_paths_bound(std::uint64_t n, std::uint64_t L, double r, int k, int l);

// (8/n) sqrt(p2/p0) sum_{t=2..L} t^2 r^(t+1) (p1 + 2 sqrt(p0 p2))^(t-1):
// bound on the expected number of bicycles of length at most L.
BoundValue expected_bicycles_bound(std::uint64_t n, std::uint64_t L, double r, int k, int l);

// --- Numeric checks that the rule beats known upper bounds ------------------

struct ShiftCheck {
    std::string name;
    bool pass = false;
    double margin = 0; // smallest slack over the checked cases; > 0 on pass
    std::string detail;
};

// (a) r(3,5) > 4.508; (b) r(k,5) >= 2^k ln 2 for k = 4,5,6;
// (c) r(7,3) > 2^7 ln 2; (d) g(k) = 2^k ln 2 / r(k,3) strictly decreasing
// on k = 7..64.
std::vector<ShiftCheck> verify_shift_conditions();

} // namespace achsat
