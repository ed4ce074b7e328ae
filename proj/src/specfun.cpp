#include "mordellkit/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "mordellkit/detail/kahan.hpp"

namespace mordellkit::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

const double kSqrtPi = std::sqrt(kPi);
const double kSqrtHalfPi = std::sqrt(kPi / 2.0);
const double kSqrt2Pi = std::sqrt(2.0 * kPi);
const double kSqrt2PiOver3 = std::sqrt(2.0 * kPi / 3.0);
const double kSqrtPiOver6 = std::sqrt(kPi / 6.0);
const double kSqrt3Pi = std::sqrt(3.0 * kPi);
const double kSqrt4PiOver3 = std::sqrt(4.0 * kPi / 3.0);
const double kSqrt3PiOver2 = std::sqrt(3.0 * kPi / 2.0);
const double kCosSqrt3Pi = std::cos(std::sqrt(3.0) * kPi);
const double kCosSqrt2Pi = std::cos(std::sqrt(2.0) * kPi);

}  // namespace

double sech(double t) { return 1.0 / std::cosh(t); }

double sinc(double t) {
    if (std::abs(t) < 1e-6) {
        double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

double sinhc(double t) {
    if (std::abs(t) < 1e-6) {
        double t2 = t * t;
        return 1.0 + t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sinh(t) / t;
}

double cosh_ratio(double a, double b) {
    if (a < 350.0 && b < 350.0) return std::cosh(a) / std::cosh(b);
    return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) / (1.0 + std::exp(-2.0 * b));
}

double sinh_cosh_ratio(double a, double b) {
    if (a < 350.0 && b < 350.0) return std::sinh(a) / std::cosh(b);
    return std::exp(a - b) * (1.0 - std::exp(-2.0 * a)) / (1.0 + std::exp(-2.0 * b));
}

double cosh_mul_exp(double g, double q) {
    g = std::abs(g);
    return 0.5 * (std::exp(g + q) + std::exp(-g + q));
}

double sinh_mul_exp(double g, double q) {
    double s = g < 0.0 ? -0.5 : 0.5;
    g = std::abs(g);
    return s * (std::exp(g + q) - std::exp(-g + q));
}

double inv_one_plus_two_cosh(double t) {
    t = std::abs(t);
    if (t < 650.0) return 1.0 / (1.0 + 2.0 * std::cosh(t));
    return std::exp(-t);
}

// --- Kernel catalog ---------------------------------------------------------

namespace {

constexpr std::array<KernelId, 34> kCatalog = {
    KernelId::Src1,        KernelId::Src2,          KernelId::Src3,       KernelId::Src4,
    KernelId::Src5,        KernelId::Srs1,          KernelId::Srs2,       KernelId::Srs3,
    KernelId::Srs4,        KernelId::K2dCos1,       KernelId::K2dSinSin,  KernelId::K2dF1,
    KernelId::K2dOneMinusCos, KernelId::KI1,        KernelId::KI2,        KernelId::KI3,
    KernelId::KI4,         KernelId::Khr1,          KernelId::Khr2,       KernelId::Khr3,
    KernelId::KFBeta,      KernelId::MordellSechCos, KernelId::MordellSechSin,
    KernelId::TanhTanhCos, KernelId::TanhTanhSin,   KernelId::CoshRatioCos,
    KernelId::CubeCos,     KernelId::CubeSin,       KernelId::LatticeCos2d,
    KernelId::LatticeSin2d, KernelId::LatCoshHalf,  KernelId::LatSinhHalf,
    KernelId::PhiWeight,   KernelId::PsiWeight,
};

double require(const ParamMap& params, const char* name) {
    auto it = params.find(name);
    if (it == params.end())
        throw DomainError(std::string("kernel parameter missing: ") + name);
    if (!std::isfinite(it->second))
        throw DomainError(std::string("kernel parameter not finite: ") + name);
    return it->second;
}

double require_positive(const ParamMap& params, const char* name) {
    double v = require(params, name);
    if (!(v > 0.0)) throw DomainError(std::string("kernel parameter must be positive: ") + name);
    return v;
}

}  // namespace

const char* kernel_name(KernelId id) {
    switch (id) {
        case KernelId::Src1: return "src1";
        case KernelId::Src2: return "src2";
        case KernelId::Src3: return "src3";
        case KernelId::Src4: return "src4";
        case KernelId::Src5: return "src5";
        case KernelId::Srs1: return "srs1";
        case KernelId::Srs2: return "srs2";
        case KernelId::Srs3: return "srs3";
        case KernelId::Srs4: return "srs4";
        case KernelId::K2dCos1: return "k2d_cos1";
        case KernelId::K2dSinSin: return "k2d_sinsin";
        case KernelId::K2dF1: return "k2d_f1";
        case KernelId::K2dOneMinusCos: return "k2d_oneminuscos";
        case KernelId::KI1: return "ki1";
        case KernelId::KI2: return "ki2";
        case KernelId::KI3: return "ki3";
        case KernelId::KI4: return "ki4";
        case KernelId::Khr1: return "khr1";
        case KernelId::Khr2: return "khr2";
        case KernelId::Khr3: return "khr3";
        case KernelId::KFBeta: return "kfbeta";
        case KernelId::MordellSechCos: return "mordell_sech_cos";
        case KernelId::MordellSechSin: return "mordell_sech_sin";
        case KernelId::TanhTanhCos: return "tanhtanh_cos";
        case KernelId::TanhTanhSin: return "tanhtanh_sin";
        case KernelId::CoshRatioCos: return "cosh_ratio_cos";
        case KernelId::CubeCos: return "cube_cos";
        case KernelId::CubeSin: return "cube_sin";
        case KernelId::LatticeCos2d: return "lattice_cos_2d";
        case KernelId::LatticeSin2d: return "lattice_sin_2d";
        case KernelId::LatCoshHalf: return "lat_cosh_half";
        case KernelId::LatSinhHalf: return "lat_sinh_half";
        case KernelId::PhiWeight: return "phi_weight";
        case KernelId::PsiWeight: return "psi_weight";
    }
    return "unknown";
}

std::span<const KernelId> kernel_catalog() { return kCatalog; }

bool kernel_is_2d(KernelId id) {
    switch (id) {
        case KernelId::K2dCos1:
        case KernelId::K2dSinSin:
        case KernelId::K2dF1:
        case KernelId::K2dOneMinusCos:
        case KernelId::KI1:
        case KernelId::KI2:
        case KernelId::KI3:
        case KernelId::KI4:
        case KernelId::LatticeCos2d:
        case KernelId::LatticeSin2d:
        case KernelId::PhiWeight:
        case KernelId::PsiWeight:
            return true;
        default:
            return false;
    }
}

bool kernel_is_odd(KernelId id) {
    switch (id) {
        case KernelId::Srs1:
        case KernelId::Srs2:
        case KernelId::Srs3:
        case KernelId::Srs4:
        case KernelId::Khr3:
            return true;
        default:
            return false;
    }
}

KernelDescriptor make_kernel(KernelId id, const ParamMap& params) {
    KernelDescriptor d;
    d.id = id;
    switch (id) {
        case KernelId::KI1:
        case KernelId::KI2:
            d.p = require_positive(params, "p");
            break;
        case KernelId::Khr1:
        case KernelId::Khr2:
        case KernelId::Khr3:
        case KernelId::MordellSechCos:
        case KernelId::MordellSechSin:
        case KernelId::TanhTanhCos:
        case KernelId::TanhTanhSin:
        case KernelId::CubeCos:
        case KernelId::CubeSin:
            d.alpha = require_positive(params, "alpha");
            break;
        case KernelId::CoshRatioCos:
            d.alpha = require_positive(params, "alpha");
            if (d.alpha > kPi) throw DomainError("cosh_ratio_cos requires alpha <= pi");
            break;
        case KernelId::KFBeta:
            d.beta = require_positive(params, "beta");
            d.theta = require(params, "theta");
            if (!(d.theta > 0.0 && d.theta < kPi))
                throw DomainError("kfbeta requires theta in (0, pi)");
            break;
        case KernelId::PhiWeight:
        case KernelId::PsiWeight:
            d.alpha = require_positive(params, "alpha");
            d.beta = require_positive(params, "beta");
            d.theta = require(params, "theta");
            d.phi = require(params, "phi");
            break;
        default:
            break;  // no parameters
    }
    return d;
}

namespace {

// Gaussian-weighted kernels vanish identically past this point in double
// precision.
constexpr double kGaussFar = 30.0;

double eval_1d(const KernelDescriptor& d, double x) {
    // Parity reduction: every 1D catalog entry is even or odd.
    double sign = 1.0;
    if (x < 0.0) {
        x = -x;
        if (kernel_is_odd(d.id)) sign = -1.0;
    }
    switch (d.id) {
        case KernelId::Src1:
            return sech(kSqrtHalfPi * x);
        case KernelId::Src2:
            return cosh_ratio(0.5 * kSqrtPi * x, kSqrtPi * x);
        case KernelId::Src3:
            return inv_one_plus_two_cosh(kSqrt2PiOver3 * x);
        case KernelId::Src4: {
            double a = 0.5 * kSqrt3Pi * x, b = kSqrt4PiOver3 * x;
            if (b < 650.0) return std::cosh(a) / (2.0 * std::cosh(b) - 1.0);
            return 0.5 * cosh_ratio(a, b);
        }
        case KernelId::Src5: {
            double a = kSqrt3PiOver2 * x, b = kSqrt2Pi * x;
            if (b < 650.0) return std::cosh(a) / (std::cosh(b) - kCosSqrt3Pi);
            return cosh_ratio(a, b);
        }
        case KernelId::Srs1:
            return sign * sinh_cosh_ratio(0.5 * kSqrtPi * x, kSqrtPi * x);
        case KernelId::Srs2: {
            double a = kSqrtPiOver6 * x, b = kSqrt2PiOver3 * x;
            if (b < 650.0) return sign * std::sinh(a) / (2.0 * std::cosh(b) - 1.0);
            return sign * 0.5 * sinh_cosh_ratio(a, b);
        }
        case KernelId::Srs3:
            return sign * sinh_cosh_ratio(kSqrt2PiOver3 * x, kSqrt3PiOver2 * x);
        case KernelId::Srs4: {
            double a = kSqrtPi * x, b = kSqrt2Pi * x;
            if (b < 650.0) return sign * std::sinh(a) / (std::cosh(b) - kCosSqrt2Pi);
            return sign * sinh_cosh_ratio(a, b);
        }
        case KernelId::Khr1:
            if (x > kGaussFar) return 0.0;
            return std::exp(-x * x) * sech(d.alpha * x);
        case KernelId::Khr2:
            if (x > kGaussFar) return 0.0;
            return cosh_ratio(0.5 * d.alpha * x, d.alpha * x) * std::exp(-x * x);
        case KernelId::Khr3:
            if (x > kGaussFar) return 0.0;
            return sign * sinh_cosh_ratio(0.5 * d.alpha * x, d.alpha * x) * x * std::exp(-x * x);
        case KernelId::KFBeta: {
            double c = d.beta * x;
            if (c > 650.0) return 2.0 * std::exp(-c);
            return 1.0 / (std::cosh(c) - std::cos(d.theta));
        }
        case KernelId::MordellSechCos:
        case KernelId::MordellSechSin: {
            if (kPi * x > 750.0) return 0.0;
            double ph = d.alpha * x * x;
            double t = d.id == KernelId::MordellSechCos ? std::cos(ph) : std::sin(ph);
            return t * sech(kPi * x);
        }
        case KernelId::TanhTanhCos:
        case KernelId::TanhTanhSin: {
            double ph = 2.0 * d.alpha * x * x;
            if (!std::isfinite(ph)) return 0.0;
            double t = d.id == KernelId::TanhTanhCos ? std::cos(ph) : std::sin(ph);
            return std::tanh(kPi * x) * std::tanh(d.alpha * x) * t;
        }
        case KernelId::CoshRatioCos: {
            if ((kPi - d.alpha) * x > 750.0) return 0.0;
            double ph = d.alpha * x * x;
            if (!std::isfinite(ph)) return 0.0;
            return std::cos(ph) * cosh_ratio(d.alpha * x, kPi * x);
        }
        case KernelId::CubeCos:
        case KernelId::CubeSin: {
            if (x > 750.0) return 0.0;
            double ph = 3.0 * d.alpha * x * x / (4.0 * kPi);
            double t = d.id == KernelId::CubeCos ? std::cos(ph) : std::sin(ph);
            return t * inv_one_plus_two_cosh(x);
        }
        case KernelId::LatCoshHalf:
            if (x > kGaussFar) return 0.0;
            return cosh_ratio(0.5 * x * x, x * x);
        case KernelId::LatSinhHalf:
            if (x > kGaussFar) return 0.0;
            return sinh_cosh_ratio(0.5 * x * x, x * x);
        default:
            throw DomainError("kernel is not one-dimensional");
    }
}

double eval_2d(const KernelDescriptor& d, double x, double y) {
    x = std::abs(x);
    y = std::abs(y);
    switch (d.id) {
        case KernelId::K2dCos1: {
            double a = kSqrtPi * x, b = kSqrtPi * y;
            double hi = std::max(a, b), lo = std::min(a, b);
            if (hi < 650.0) return 1.0 / (std::cosh(a) + std::cosh(b));
            return 2.0 * std::exp(-hi) / (1.0 + std::exp(lo - hi));
        }
        case KernelId::K2dSinSin:
            return sinc(x * y) / (kPi * sinhc(kSqrtPi * x) * sinhc(kSqrtPi * y));
        case KernelId::K2dF1: {
            double env = sech(kSqrtHalfPi * x) * sech(kSqrtHalfPi * y);
            if (env == 0.0) return 0.0;
            return std::cos(x * y) * env;
        }
        case KernelId::K2dOneMinusCos: {
            double half = 0.5 * x * y;
            double s = sinc(half);
            return half * s * s / (kPi * sinhc(kSqrtPi * x) * sinhc(kSqrtPi * y));
        }
        case KernelId::KI1:
        case KernelId::KI2: {
            double env = sech(d.p * x) * sech(kPi * y / d.p);
            if (env == 0.0) return 0.0;
            double t = d.id == KernelId::KI1 ? std::cos(x * y) : std::sin(x * y);
            return t * env;
        }
        case KernelId::KI3:
        case KernelId::KI4: {
            double env = inv_one_plus_two_cosh(x) * inv_one_plus_two_cosh(2.0 * kPi * y / 3.0);
            if (env == 0.0) return 0.0;
            double t = d.id == KernelId::KI3 ? std::cos(x * y) : std::sin(x * y);
            return t * env;
        }
        case KernelId::LatticeCos2d:
        case KernelId::LatticeSin2d: {
            if (x > kGaussFar || y > kGaussFar) return 0.0;
            double env = sech(x * x) * sech(y * y);
            if (env == 0.0) return 0.0;
            double ph = x * x * y * y / kPi;
            double t = d.id == KernelId::LatticeCos2d ? std::cos(ph) : std::sin(ph);
            return t * env;
        }
        case KernelId::PhiWeight: {
            if (x > kGaussFar || y > kGaussFar) return 0.0;
            double q = -0.5 * kPi * (d.alpha * x * x + d.beta * y * y);
            return std::cos(kPi * x * y) * std::cos(d.theta * x) * std::cos(d.phi * y) *
                   sech(kPi * x) * sech(kPi * y) * std::exp(q);
        }
        case KernelId::PsiWeight: {
            if (x > kGaussFar || y > kGaussFar) return 0.0;
            double q = -0.5 * kPi * (d.alpha * x * x + d.beta * y * y);
            return std::sin(kPi * x * y) * std::sin(d.theta * x) * std::sin(d.phi * y) *
                   sech(kPi * x) * sech(kPi * y) * std::exp(q);
        }
        default:
            throw DomainError("kernel is not two-dimensional");
    }
}

}  // namespace

double kernel_eval_1d(const KernelDescriptor& desc, double x) {
    if (!std::isfinite(x)) throw DomainError("kernel argument not finite");
    if (kernel_is_2d(desc.id)) throw DomainError("kernel is not one-dimensional");
    return eval_1d(desc, x);
}

double kernel_eval_2d(const KernelDescriptor& desc, double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("kernel argument not finite");
    if (!kernel_is_2d(desc.id)) throw DomainError("kernel is not two-dimensional");
    return eval_2d(desc, x, y);
}

quad::Decay kernel_decay_1d(const KernelDescriptor& d) {
    using quad::Decay;
    using quad::DecayKind;
    switch (d.id) {
        case KernelId::Src1: return {kSqrtHalfPi, DecayKind::Exponential};
        case KernelId::Src2: return {0.5 * kSqrtPi, DecayKind::Exponential};
        case KernelId::Src3: return {kSqrt2PiOver3, DecayKind::Exponential};
        case KernelId::Src4: return {kSqrt4PiOver3 - 0.5 * kSqrt3Pi, DecayKind::Exponential};
        case KernelId::Src5: return {kSqrt2Pi - kSqrt3PiOver2, DecayKind::Exponential, 4.0};
        case KernelId::Srs1: return {0.5 * kSqrtPi, DecayKind::Exponential};
        case KernelId::Srs2: return {kSqrt2PiOver3 - kSqrtPiOver6, DecayKind::Exponential};
        case KernelId::Srs3: return {kSqrt3PiOver2 - kSqrt2PiOver3, DecayKind::Exponential};
        case KernelId::Srs4: return {kSqrt2Pi - kSqrtPi, DecayKind::Exponential, 2.0};
        case KernelId::Khr1:
        case KernelId::Khr2:
        case KernelId::Khr3: return {1.0, DecayKind::Gaussian};
        case KernelId::KFBeta: return {d.beta, DecayKind::Exponential, 4.0};
        case KernelId::MordellSechCos:
        case KernelId::MordellSechSin: return {kPi, DecayKind::Exponential, 2.0};
        case KernelId::CoshRatioCos: {
            double rate = kPi - d.alpha;
            if (!(rate > 1e-12))
                throw InvalidDecay("cosh_ratio_cos has no envelope at alpha = pi");
            return {rate, DecayKind::Exponential, 2.0};
        }
        case KernelId::CubeCos:
        case KernelId::CubeSin: return {1.0, DecayKind::Exponential};
        case KernelId::LatCoshHalf:
        case KernelId::LatSinhHalf: return {0.5, DecayKind::Gaussian};
        case KernelId::TanhTanhCos:
        case KernelId::TanhTanhSin:
            throw InvalidDecay("tanh*tanh weights have no absolutely convergent envelope");
        default:
            throw DomainError("kernel is not one-dimensional");
    }
}

std::pair<quad::Decay, quad::Decay> kernel_decay_2d(const KernelDescriptor& d) {
    using quad::Decay;
    using quad::DecayKind;
    switch (d.id) {
        case KernelId::K2dCos1:
            // 1/(cosh a + cosh b) <= 2 e^{-max}; each axis alone gives e^{-sqrt(pi) x}
            return {Decay{kSqrtPi, DecayKind::Exponential, 2.0},
                    Decay{kSqrtPi, DecayKind::Exponential, 2.0}};
        case KernelId::K2dSinSin:
        case KernelId::K2dOneMinusCos:
            return {Decay{kSqrtPi, DecayKind::Exponential, 4.0},
                    Decay{kSqrtPi, DecayKind::Exponential, 4.0}};
        case KernelId::K2dF1:
            return {Decay{kSqrtHalfPi, DecayKind::Exponential, 2.0},
                    Decay{kSqrtHalfPi, DecayKind::Exponential, 2.0}};
        case KernelId::KI1:
        case KernelId::KI2:
            return {Decay{d.p, DecayKind::Exponential, 2.0},
                    Decay{kPi / d.p, DecayKind::Exponential, 2.0}};
        case KernelId::KI3:
        case KernelId::KI4:
            return {Decay{1.0, DecayKind::Exponential},
                    Decay{2.0 * kPi / 3.0, DecayKind::Exponential}};
        case KernelId::LatticeCos2d:
        case KernelId::LatticeSin2d:
            return {Decay{1.0, DecayKind::Gaussian, 2.0}, Decay{1.0, DecayKind::Gaussian, 2.0}};
        case KernelId::PhiWeight:
        case KernelId::PsiWeight:
            return {Decay{0.5 * kPi * d.alpha, DecayKind::Gaussian, 2.0},
                    Decay{0.5 * kPi * d.beta, DecayKind::Gaussian, 2.0}};
        default:
            throw DomainError("kernel is not two-dimensional");
    }
}

double kernel_osc_frequency(const KernelDescriptor& d) {
    auto quadratic_hint = [](double c, const quad::Decay& decay) {
        double X = quad::truncation_cutoff(decay, 1e-10);
        return 2.0 * c * X;
    };
    switch (d.id) {
        case KernelId::MordellSechCos:
        case KernelId::MordellSechSin:
            return quadratic_hint(d.alpha, kernel_decay_1d(d));
        case KernelId::CoshRatioCos:
            return quadratic_hint(d.alpha, kernel_decay_1d(d));
        case KernelId::CubeCos:
        case KernelId::CubeSin:
            return quadratic_hint(3.0 * d.alpha / (4.0 * kPi), kernel_decay_1d(d));
        case KernelId::K2dCos1:
            return 0.0;
        case KernelId::K2dSinSin:
        case KernelId::K2dF1:
        case KernelId::K2dOneMinusCos:
        case KernelId::KI1:
        case KernelId::KI2:
        case KernelId::KI3:
        case KernelId::KI4: {
            auto [dx, dy] = kernel_decay_2d(d);
            return std::max(quad::truncation_cutoff(dx, 1e-10),
                            quad::truncation_cutoff(dy, 1e-10));
        }
        case KernelId::LatticeCos2d:
        case KernelId::LatticeSin2d: {
            auto [dx, dy] = kernel_decay_2d(d);
            double X = quad::truncation_cutoff(dx, 1e-10);
            double Y = quad::truncation_cutoff(dy, 1e-10);
            return 2.0 * X * X * Y / kPi;  // d/dy of x^2 y^2 / pi at the cutoffs
        }
        case KernelId::PhiWeight:
        case KernelId::PsiWeight: {
            auto [dx, dy] = kernel_decay_2d(d);
            double X = quad::truncation_cutoff(dx, 1e-10);
            double Y = quad::truncation_cutoff(dy, 1e-10);
            return kPi * std::max(X, Y) + std::abs(d.theta) + std::abs(d.phi);
        }
        default:
            return 0.0;
    }
}

// --- Elliptic integrals ------------------------------------------------------

double agm(double a, double b, int* iterations) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("agm requires positive arguments");
    int count = 0;
    while (std::abs(a - b) > 1e-15 * std::abs(a) && count < 64) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        ++count;
    }
    if (iterations) *iterations = count;
    return 0.5 * (a + b);
}

namespace {

void check_modulus(double k) {
    if (!(k > 0.0 && k < 1.0)) throw DomainError("modulus must lie in (0, 1)");
}

double k_complement(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

}  // namespace

double elliptic_K(double k) {
    check_modulus(k);
    return kPi / (2.0 * agm(1.0, k_complement(k)));
}

double elliptic_E(double k) {
    check_modulus(k);
    double a = 1.0, b = k_complement(k), c = k;
    double sum = 0.5 * c * c;
    double pow2 = 0.5;
    for (int n = 0; n < 64 && std::abs(c) > 1e-18; ++n) {
        c = 0.5 * (a - b);
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    double K = kPi / (2.0 * a);
    return K * (1.0 - sum);
}

EllipticValues elliptic_values(double k) {
    check_modulus(k);
    EllipticValues v;
    v.k = k;
    v.k_prime = k_complement(k);
    v.K = elliptic_K(k);
    v.K_prime = kPi / (2.0 * agm(1.0, k));  // K(k') with sqrt(1-k'^2) = k
    v.E = elliptic_E(k);
    v.E_prime = elliptic_E(v.k_prime);
    v.alpha_ratio = v.K_prime / v.K;
    v.q = std::exp(-kPi * v.alpha_ratio);
    return v;
}

double modulus_from_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("alpha must be positive and finite");
    auto ratio = [](double k) {
        return agm(1.0, k_complement(k)) / agm(1.0, k);  // K'/K
    };
    double lo = 1e-13, hi = 1.0 - 1e-13;
    if (!(ratio(lo) > alpha) || !(ratio(hi) < alpha))
        throw NonConvergence("modulus recovery: alpha outside the resolvable range");
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double r = ratio(mid);
        if (std::abs(r - alpha) <= 1e-14 * std::max(1.0, alpha)) return mid;
        if (r > alpha)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= std::numeric_limits<double>::epsilon() * hi) break;
    }
    return 0.5 * (lo + hi);
}

namespace {

// Bilateral sum with exponentially decaying even summand.
template <typename F>
double even_bilateral(F&& term) {
    mordellkit::detail::Kahan acc;
    acc.add(term(0));
    for (long long n = 1; n < 2000000; ++n) {
        double t = term(n);
        acc.add(2.0 * t);
        if (std::abs(t) < 1e-18 * (std::abs(acc.value()) + 1e-300) && n > 4) break;
    }
    return acc.value();
}

}  // namespace

std::pair<double, double> series_K_check(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    double series =
        0.5 * kPi * even_bilateral([alpha](long long n) { return sech(kPi * alpha * n); });
    double k = modulus_from_alpha(alpha);
    return {series, elliptic_K(k)};
}

std::pair<double, double> dn_quarter_check(double k) {
    EllipticValues v = elliptic_values(k);
    double a = v.alpha_ratio;
    double series = even_bilateral(
        [a](long long n) { return cosh_ratio(0.5 * kPi * a * n, kPi * a * n); });
    return {0.5 * kPi / v.K * series, std::sqrt(1.0 + k)};
}

// --- Bessel functions ---------------------------------------------------------

namespace detail {

double j0_series(double x) {
    double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return sum;
}

double j0_integral(double x) {
    // (1/pi) int_0^pi cos(x sin t) dt; the integrand extends evenly across both
    // endpoints, so the trapezoid rule converges spectrally.
    int n = std::max(80, static_cast<int>(1.4 * x) + 40);
    mordellkit::detail::Kahan acc;
    acc.add(0.5 * (std::cos(0.0) + std::cos(x * std::sin(kPi))));
    for (int j = 1; j < n; ++j) acc.add(std::cos(x * std::sin(kPi * j / n)));
    return acc.value() / n;
}

double y0_series(double x) {
    double q = 0.25 * x * x;
    double term = 1.0, h = 0.0, sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        h += 1.0 / k;
        sum += -term * h;  // (-1)^{k+1} H_k q^k/(k!)^2
        if (std::abs(term) * h < 1e-18) break;
    }
    return 2.0 / kPi * ((std::log(0.5 * x) + kEulerGamma) * j0_series(x) + sum);
}

double y0_large(double x) {
    auto osc = quad::integrate_finite([x](double t) { return std::sin(x * std::sin(t)); }, 0.0,
                                      kPi, 1e-13, 12);
    quad::Integrand1D damp;
    damp.decay = {x, quad::DecayKind::Exponential};
    damp.eval = [x](double t) {
        double s = std::sinh(t);
        return s * x > 700.0 ? 0.0 : std::exp(-x * s);
    };
    auto exp_part = quad::integrate_semi_infinite(damp, 1e-13);
    return osc.value / kPi - 2.0 / kPi * exp_part.value;
}

double k0_series(double x) {
    double q = 0.25 * x * x;
    double term = 1.0, i0 = 1.0, h = 0.0, sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        h += 1.0 / k;
        i0 += term;
        sum += term * h;
        if (term * std::max(1.0, h) < 1e-18) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * i0 + sum;
}

double k0_integral(double x) {
    quad::Integrand1D f;
    f.decay = {0.5 * x, quad::DecayKind::Gaussian};
    f.eval = [x](double t) {
        double c = std::cosh(t);
        return c * x > 700.0 ? 0.0 : std::exp(-x * c);
    };
    return quad::integrate_semi_infinite(f, 1e-13).value;
}

}  // namespace detail

double bessel_j0(double x) {
    if (!(x >= 0.0)) throw DomainError("bessel_j0 requires x >= 0");
    return x < 8.0 ? detail::j0_series(x) : detail::j0_integral(x);
}

double bessel_y0(double x) {
    if (!(x > 0.0)) throw DomainError("bessel_y0 requires x > 0");
    return x < 8.0 ? detail::y0_series(x) : detail::y0_large(x);
}

double bessel_k0(double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k0 requires x > 0");
    return x < 2.0 ? detail::k0_series(x) : detail::k0_integral(x);
}

}  // namespace mordellkit::specfun
