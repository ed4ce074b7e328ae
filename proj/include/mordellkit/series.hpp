#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mordellkit/errors.hpp"
#include "mordellkit/specfun.hpp"

namespace mordellkit::series {

struct SeriesTerm {
    std::function<double(long long)> term;  // finite at every integer, limits pre-resolved
    double decay_rate = 1.0;                // exponential tail rate; ignored when conditional
    bool conditional = false;
};

struct SeriesResult {
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t terms_used = 0;
};

// Two sides of one identity, evaluated by direct summation.
struct SidePair {
    double lhs = 0.0;
    double rhs = 0.0;
    std::int64_t terms = 0;
};

// sum_{n=-N}^{N}, n = 0 first then (n, -n) pairs, compensated accumulation;
// N chosen so the geometric tail bound is <= tol.
SeriesResult sum_bilateral(const SeriesTerm& t, double tol);

// sum_{n>=1} chi(n) term(n) with chi(n) = sin(pi n / 2).
SeriesResult sum_character(const SeriesTerm& t, double tol);

// Bilateral Lerch-type sum sum_n sin(sqrt(2) pi n / p)/|n + p/sqrt(2)|^{1/2}
// for p in (1/sqrt(2), sqrt(2)); symmetric partial sums with iterated
// averaging. Conditionally convergent: tolerances below 1e-5 are refused.
SeriesResult sum_lerch(double p, double tol);

// Poisson summation for an even kernel: sqrt(a) sum f(a n) vs
// sqrt(b) sum f_c(b n) with a*b = 2*pi (b derived unless given).
SidePair poisson_check_1d(const specfun::KernelDescriptor& f, double alpha, double tol,
                          std::optional<double> beta = std::nullopt);

// Two-variable Poisson applied to the cos(xy)/cosh*cosh kernel: the
// cos/cosh double sum against the sin/sinh double sum with gamma = 2 pi /
// alpha, delta = 2 pi / beta; the m = 0 / n = 0 terms on the sinh side are
// analytic limits.
SidePair poisson_f1_check(double alpha, double beta, double tol);

// Product of sech sums against 2/pi + 4 sum n a/sinh(pi n a) terms, b = 1/a.
SidePair legendre_sum_check(double alpha, double tol);

// sqrt(2) product of sech sums against the cosh-half quotient product, b = 2/a.
SidePair landen_sum_check(double alpha, double tol);

// Weighted n cosh/sinh sums against the squared (cosh + 1/2)^{-1} sum.
SidePair elliptic1_check(double alpha, double tol);

// The f_beta combination against its series representation.
SidePair fbeta_check(double beta, double theta, double tol);

namespace detail {
// sinh-side summand of poisson_f1_check with the m,n -> 0 limits resolved.
double poisson_f1_rhs_term(double gamma, double delta, double m, double n);
// Lerch acceleration with explicit window and depth, for consistency tests.
double lerch_accelerated(double p, long long start, int window, int depth);
}  // namespace detail

}  // namespace mordellkit::series
