#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>

#include "mordellkit/errors.hpp"
#include "mordellkit/quad.hpp"

namespace mordellkit::specfun {

// --- Stable elementary helpers --------------------------------------------

double sech(double t);
// sin(t)/t and sinh(t)/t with series evaluation for |t| < 1e-6.
double sinc(double t);
double sinhc(double t);
// cosh(a)/cosh(b) and sinh(a)/cosh(b) for a, b >= 0, stable for large args.
double cosh_ratio(double a, double b);
double sinh_cosh_ratio(double a, double b);
// cosh(g) * exp(q) and sinh(g) * exp(q) without intermediate overflow,
// for Gaussian-damped growth factors (q typically large negative).
double cosh_mul_exp(double g, double q);
double sinh_mul_exp(double g, double q);
// 1/(1 + 2 cosh(t)).
double inv_one_plus_two_cosh(double t);

// --- Kernel catalog --------------------------------------------------------

enum class KernelId {
    // self-reciprocal under the cosine transform
    Src1, Src2, Src3, Src4, Src5,
    // self-reciprocal under the sine transform
    Srs1, Srs2, Srs3, Srs4,
    // two-variable kernels
    K2dCos1, K2dSinSin, K2dF1, K2dOneMinusCos,
    KI1, KI2, KI3, KI4,
    // Gaussian-weighted hyperbolic kernels
    Khr1, Khr2, Khr3,
    // bilateral series summand 1/(cosh(beta x) - cos(theta))
    KFBeta,
    // Mordell weights
    MordellSechCos, MordellSechSin,
    TanhTanhCos, TanhTanhSin,
    CoshRatioCos,
    CubeCos, CubeSin,
    // lattice kernels
    LatticeCos2d, LatticeSin2d, LatCoshHalf, LatSinhHalf,
    // theta-analog integrands
    PhiWeight, PsiWeight,
};

using ParamMap = std::map<std::string, double>;

// Immutable after construction; parameters validated here, not per eval.
struct KernelDescriptor {
    KernelId id{};
    double alpha = 0.0;
    double beta = 0.0;
    double p = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

KernelDescriptor make_kernel(KernelId id, const ParamMap& params = {});

bool kernel_is_2d(KernelId id);
bool kernel_is_odd(KernelId id);  // odd 1D kernels (sine-transform family)
const char* kernel_name(KernelId id);
std::span<const KernelId> kernel_catalog();

double kernel_eval_1d(const KernelDescriptor& desc, double x);
double kernel_eval_2d(const KernelDescriptor& desc, double x, double y);

// Declared integrable envelopes. Throws InvalidDecay for kernels without an
// absolutely convergent envelope (the tanh*tanh weights, CoshRatioCos at
// alpha = pi); those integrate through the regularized path instead.
quad::Decay kernel_decay_1d(const KernelDescriptor& desc);
std::pair<quad::Decay, quad::Decay> kernel_decay_2d(const KernelDescriptor& desc);
// Oscillation-frequency hint for the quadrature engine (0 when smooth).
double kernel_osc_frequency(const KernelDescriptor& desc);

// --- Elliptic integrals ----------------------------------------------------

double agm(double a, double b, int* iterations = nullptr);
double elliptic_K(double k);
double elliptic_E(double k);

struct EllipticValues {
    double k, k_prime;
    double K, K_prime;
    double E, E_prime;
    double q;            // nome exp(-pi K'/K)
    double alpha_ratio;  // K'/K
};
EllipticValues elliptic_values(double k);

// Inverse of alpha = K(k')/K(k), by bisection (the map is monotone).
double modulus_from_alpha(double alpha);

// (pi/2) * sum_n sech(pi alpha n) against K at the modulus recovered from the
// nome exp(-pi alpha).
std::pair<double, double> series_K_check(double alpha);

// (pi/2K) * sum_n cosh(pi alpha n / 2)/cosh(pi alpha n) with alpha = K'/K,
// against sqrt(1 + k).
std::pair<double, double> dn_quarter_check(double k);

// --- Bessel functions of order zero ----------------------------------------

double bessel_j0(double x);
double bessel_y0(double x);
double bessel_k0(double x);

namespace detail {
// Both regimes exposed so the crossover agreement is testable.
double j0_series(double x);
double j0_integral(double x);
double y0_series(double x);
double y0_large(double x);
double k0_series(double x);
double k0_integral(double x);
}  // namespace detail

}  // namespace mordellkit::specfun
