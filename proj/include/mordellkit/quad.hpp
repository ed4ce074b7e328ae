#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "mordellkit/errors.hpp"

namespace mordellkit::quad {

enum class DecayKind { Exponential, Gaussian };

// Declared envelope of an integrand along one axis:
//   |f| <= amplitude * exp(growth*x - rate*x)        (Exponential)
//   |f| <= amplitude * exp(growth*x - rate*x^2)      (Gaussian)
// The growth term covers cosh-type factors under a Gaussian; it must be 0 for
// Exponential decay.
struct Decay {
    double rate = 1.0;
    DecayKind kind = DecayKind::Exponential;
    double amplitude = 1.0;
    double growth = 0.0;
};

struct Integrand1D {
    std::function<double(double)> eval;  // finite for all x >= 0
    Decay decay;
    // Dominant oscillation frequency (rad per unit x near the effective
    // cutoff). Integrands above 10 get two extra refinement levels.
    double osc_frequency = 0.0;
};

struct Integrand2D {
    std::function<double(double, double)> eval;  // finite on the closed quadrant
    Decay decay_x;
    Decay decay_y;
    double osc_frequency = 0.0;
};

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

// X such that the unit-amplitude tail integral of the envelope past X is
// <= tol/10. Monotone non-increasing in rate, non-decreasing in 1/tol.
double truncation_cutoff(double decay_rate, DecayKind kind, double tol);
double truncation_cutoff(const Decay& decay, double tol);

// Integral over [0, inf) of an integrand with declared decay. Exponential
// decay uses an exp-sinh transform; Gaussian decay truncates at the cutoff
// and applies tanh-sinh on the finite interval. The error estimate comes
// from successive refinement differences.
QuadResult integrate_semi_infinite(const Integrand1D& f, double tol);

// Iterated integral over the closed quadrant. Outer tolerance tol/2, inner
// tolerance tol / (2 * outer width factor).
QuadResult integrate_quadrant(const Integrand2D& f, double tol);

// Tanh-sinh rule on a finite interval. Endpoint singularities of integrable
// type are fine; the integrand is never evaluated at a or b.
QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            double tol, int max_level = 12);

// --- Oscillatory quadratic-phase integrals -------------------------------
//
// Machinery for improper integrals of the form
//     lim_{eps->0} int_0^inf h(v) * trig(omega v^2) * exp(-eps v^2) dv,
// evaluated on a ladder of regularization parameters and Richardson-
// extrapolated to eps = 0.

enum class Trig { Cos, Sin };

// Closed form of int_0^inf trig(omega v^2) exp(-eps v^2) dv.
double fresnel_gauss(Trig trig, double omega, double eps);

// Direct panel rule for one member of the ladder: bounded h, panels of
// bounded phase, 16-point Gauss-Legendre per panel. max_linear_freq caps the
// panel width when h itself oscillates (product-of-cosine factors).
QuadResult integrate_quadratic_phase(const std::function<double(double)>& h, Trig trig,
                                     double omega, double eps, double tol,
                                     double max_linear_freq = 0.0);

// Polynomial extrapolation of (eps_i, value_i) samples to eps = 0. The error
// estimate is the magnitude of the last Neville correction.
double extrapolate_to_zero(std::span<const double> eps, std::span<const double> values,
                           double* err_estimate = nullptr);

// Description of a regularized oscillatory integral with an exponentially
// settling prefactor: h(v) -> limit as v -> inf, with (h - limit) decaying at
// the given rate. The Fresnel part of the limit is handled in closed form and
// only the settled remainder is integrated numerically.
struct OscillatorySettled {
    std::function<double(double)> h;
    double limit = 0.0;
    double remainder_decay_rate = 1.0;  // exponential rate of h - limit
    Trig trig = Trig::Cos;
    double omega = 1.0;
};

// Value of one ladder member for an OscillatorySettled integrand.
QuadResult integrate_settled(const OscillatorySettled& f, double eps, double tol);

// Full ladder + extrapolation drivers.
QuadResult regularized_settled(const OscillatorySettled& f, std::span<const double> eps_ladder,
                               double tol);
QuadResult regularized_quadratic_phase(const std::function<double(double)>& h, Trig trig,
                                       double omega, std::span<const double> eps_ladder,
                                       double tol, double max_linear_freq = 0.0);

// Default ladders: the coarse geometric ladder for analytic-in-eps integrals,
// and the fine ladder used by the closed-form-split evaluators.
std::span<const double> geometric_eps_ladder();
std::span<const double> fine_eps_ladder();

}  // namespace mordellkit::quad
