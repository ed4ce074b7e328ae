#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "mordellkit/identities.hpp"
#include "mordellkit/quad.hpp"
#include "mordellkit/series.hpp"
#include "mordellkit/specfun.hpp"
#include "mordellkit/transforms.hpp"

namespace mordellkit::identities {

namespace {

namespace sf = specfun;
namespace tr = transforms;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrtPi = std::sqrt(kPi);
const double kSqrtHalfPi = std::sqrt(kPi / 2.0);
const double kSqrt3 = std::sqrt(3.0);

double tol_1d(double tol) { return std::clamp(0.05 * tol, 1e-13, 1e-8); }
double tol_2d(double tol) { return std::clamp(0.2 * tol, 1e-10, 5e-8); }
double tol_series(double tol) { return std::clamp(0.1 * tol, 1e-14, 1e-8); }

SideValue from_quad(const quad::QuadResult& r) {
    return {r.value, r.abs_error_estimate, r.evaluations};
}

SideValue exact(double v) { return {v, 0.0, 0}; }

quad::QuadResult integ1(std::function<double(double)> f, quad::Decay d, double osc, double tol) {
    quad::Integrand1D g{std::move(f), d, osc};
    return quad::integrate_semi_infinite(g, tol);
}

quad::QuadResult integ2(std::function<double(double, double)> f, quad::Decay dx, quad::Decay dy,
                        double osc, double tol) {
    quad::Integrand2D g{std::move(f), dx, dy, osc};
    return quad::integrate_quadrant(g, tol);
}

// int_0^inf kernel(x) dx for a catalog kernel with declared decay
quad::QuadResult kernel_integral(const sf::KernelDescriptor& k, double tol) {
    return integ1([k](double x) { return sf::kernel_eval_1d(k, x); }, sf::kernel_decay_1d(k),
                  sf::kernel_osc_frequency(k), tol);
}

// Ramanujan corollary building blocks I1..I4 at weight parameter n
quad::QuadResult ram_i(int which, double n, double tol) {
    bool odd = which >= 3;  // I3, I4 carry the x sinh weight
    bool sine = which == 2 || which == 4;
    double osc = kPi * n * quad::truncation_cutoff(kPi / 2.0, quad::DecayKind::Exponential, tol);
    return integ1(
        [n, odd, sine](double x) {
            double w = odd ? x * sf::sinh_cosh_ratio(0.5 * kPi * x, kPi * x)
                           : sf::cosh_ratio(0.5 * kPi * x, kPi * x);
            double ph = 0.5 * kPi * n * x * x;
            return w * (sine ? std::sin(ph) : std::cos(ph));
        },
        {kPi / 2.0, quad::DecayKind::Exponential, 8.0}, osc, tol);
}

// 2D corollary integrals: trig_quad((pi/2)(n x^2 - y^2/n)) * mix(pi x y) * [xy]
SideValue corollary_lhs(bool quad_cos, bool mix_sin, bool xy_weight, double n, double tol) {
    auto r = integ2(
        [=](double x, double y) {
            double env = sf::sech(kPi * x) * sf::sech(kPi * y);
            if (env == 0.0) return 0.0;
            double A = 0.5 * kPi * (n * x * x - y * y / n);
            double q = quad_cos ? std::cos(A) : std::sin(A);
            double m = mix_sin ? std::sin(kPi * x * y) : std::cos(kPi * x * y);
            double w = xy_weight ? x * y : 1.0;
            return w * q * m * env;
        },
        {kPi, quad::DecayKind::Exponential, 8.0}, {kPi, quad::DecayKind::Exponential, 8.0},
        30.0 * std::max(n, 1.0 / n), tol);
    return from_quad(r);
}

// int cosh(a x/2)/cosh(a x) e^{-x^2} dx
quad::QuadResult mordell_gauss_cosh(double a, double tol) {
    return kernel_integral(sf::make_kernel(sf::KernelId::Khr2, {{"alpha", a}}), tol);
}

// int sinh(a x/2)/cosh(a x) x e^{-x^2} dx
quad::QuadResult mordell_gauss_sinh(double a, double tol) {
    return kernel_integral(sf::make_kernel(sf::KernelId::Khr3, {{"alpha", a}}), tol);
}

// int trig(a x^2) sech(pi x) dx
quad::QuadResult mordell_sech(bool sine, double a, double tol) {
    auto id = sine ? sf::KernelId::MordellSechSin : sf::KernelId::MordellSechCos;
    return kernel_integral(sf::make_kernel(id, {{"alpha", a}}), tol);
}

// int cosh(pi x/2) cosh(t x)/cosh(pi x) exp(-pi x^2/(2a)) dx
quad::QuadResult phi_mordell(double a, double t, double tol) {
    quad::Decay d{0.5 * kPi / a, quad::DecayKind::Gaussian, 2.0, std::abs(t)};
    return integ1(
        [a, t](double x) {
            if (x > 60.0) return 0.0;
            double q = -0.5 * kPi * x * x / a;
            return sf::cosh_ratio(0.5 * kPi * x, kPi * x) * sf::cosh_mul_exp(t * x, q);
        },
        d, 0.0, tol);
}

SideValue sr_residual(sf::KernelId id, double tol) {
    auto k = sf::make_kernel(id);
    double res = tr::self_reciprocity_residual(k, tr::sr_kind(id), tr::default_residual_grid(),
                                               tol_1d(tol));
    return {res, 0.0, 0};
}

SideValue sum_value(const series::SeriesResult& r, double scale) {
    return {scale * r.value, std::abs(scale) * r.tail_bound, r.terms_used};
}

// sum over n >= 0 of 1/(1/2 + cosh(pi a (2n+1)/sqrt(3)))
double ell2_half_sum(double a) {
    double s = 0.0;
    for (int n = 0; n < 4000; ++n) {
        double u = kPi * a * (2 * n + 1) / kSqrt3;
        double t = u > 650.0 ? 2.0 * std::exp(-u) : 1.0 / (0.5 + std::cosh(u));
        s += t;
        if (t < 1e-18 * (s + 1e-300)) break;
    }
    return s;
}

// sum over n >= 1 of chi(n) cosh(pi a n/(2 sqrt(3)))/sinh(pi a n sqrt(3)/2)
double ell2_char_sum(double a) {
    double s = 0.0;
    double sign = 1.0;
    for (int n = 1; n < 8000; n += 2) {
        double num = kPi * a * n / (2.0 * kSqrt3);
        double den = 0.5 * kPi * a * n * kSqrt3;
        double t = std::exp(num - den) * (1.0 + std::exp(-2.0 * num)) /
                   (1.0 - std::exp(-2.0 * den));
        s += sign * t;
        sign = -sign;
        if (t < 1e-18 * (std::abs(s) + 1e-300)) break;
    }
    return s;
}

// lhs of the 3.364.3 relation (the +i x^2 branch), real or imaginary part
quad::QuadResult lat_k0_lhs(double m, double n, bool real_part, double tol) {
    return integ1(
        [m, n, real_part](double x) {
            if (x > 40.0) return 0.0;
            std::complex<double> w(kPi * (2.0 * m + 1.0), x * x);
            std::complex<double> v = std::exp(-(2.0 * n + 1.0) * x * x) / std::sqrt(w);
            return real_part ? v.real() : v.imag();
        },
        {2.0 * n + 1.0, quad::DecayKind::Gaussian}, 0.0, tol);
}

// Mehler-Sonine integrals int_0^inf {cos|sin}(x cosh t) dt via u = 1 + v^2
quad::QuadResult mehler_sonine(bool sine, double x, double tol) {
    auto h = [](double v) { return 1.0 / std::sqrt(2.0 + v * v); };
    auto pc = quad::regularized_quadratic_phase(h, quad::Trig::Cos, x,
                                                quad::geometric_eps_ladder(), tol);
    auto ps = quad::regularized_quadratic_phase(h, quad::Trig::Sin, x,
                                                quad::geometric_eps_ladder(), tol);
    double value = sine ? 2.0 * (std::sin(x) * pc.value + std::cos(x) * ps.value)
                        : 2.0 * (std::cos(x) * pc.value - std::sin(x) * ps.value);
    return {value, 2.0 * (pc.abs_error_estimate + ps.abs_error_estimate),
            pc.evaluations + ps.evaluations};
}

ParamSpec positive(const char* name, double def, double max = kInf) {
    return {name, def, 0.0, max, false};
}
ParamSpec derived(const char* name) { return {name, 0.0, 0.0, kInf, true}; }
ParamSpec probe(const char* name, double def, double max = 50.0) {
    return {name, def, -1e-12, max, false};
}

ConstraintSpec product_constraint(const char* display, const char* free, const char* bound,
                                  double product) {
    return {display, free, bound, product};
}

std::vector<IdentityRecord> build_registry() {
    std::vector<IdentityRecord> regs;
    auto add = [&regs](IdentityRecord rec) { regs.push_back(std::move(rec)); };

    // --- 1D self-reciprocal kernels ---------------------------------------
    struct SrEntry {
        const char* id;
        sf::KernelId kernel;
        const char* text;
    };
    const SrEntry sr_entries[] = {
        {"SR-C1", sf::KernelId::Src1, "sech(sqrt(pi/2) x) equals its cosine transform"},
        {"SR-C2", sf::KernelId::Src2,
         "cosh(sqrt(pi) x/2)/cosh(sqrt(pi) x) equals its cosine transform"},
        {"SR-C3", sf::KernelId::Src3,
         "1/(1 + 2 cosh(sqrt(2 pi/3) x)) equals its cosine transform"},
        {"SR-C4", sf::KernelId::Src4,
         "cosh(sqrt(3 pi) x/2)/(2 cosh(sqrt(4 pi/3) x) - 1) equals its cosine transform"},
        {"SR-C5", sf::KernelId::Src5,
         "cosh(sqrt(3 pi/2) x)/(cosh(sqrt(2 pi) x) - cos(sqrt(3) pi)) equals its cosine "
         "transform"},
        {"SR-S1", sf::KernelId::Srs1,
         "sinh(sqrt(pi) x/2)/cosh(sqrt(pi) x) equals its sine transform"},
        {"SR-S2", sf::KernelId::Srs2,
         "sinh(sqrt(pi/6) x)/(2 cosh(sqrt(2 pi/3) x) - 1) equals its sine transform"},
        {"SR-S3", sf::KernelId::Srs3,
         "sinh(sqrt(2 pi/3) x)/cosh(sqrt(3 pi/2) x) equals its sine transform"},
        {"SR-S4", sf::KernelId::Srs4,
         "sinh(sqrt(pi) x)/(cosh(sqrt(2 pi) x) - cos(sqrt(2) pi)) equals its sine transform"},
    };
    for (const auto& e : sr_entries) {
        IdentityRecord r;
        r.id = e.id;
        r.description = std::string(e.text) + " (max residual over the default grid)";
        r.default_tol = 1e-8;
        r.style = CheckStyle::Residual;
        sf::KernelId kid = e.kernel;
        r.lhs = [kid](const Params&, double tol) { return sr_residual(kid, tol); };
        add(std::move(r));
    }

    // --- Poisson / nome duality of the sech sum ---------------------------
    {
        IdentityRecord r;
        r.id = "POISSON-ELL";
        r.description = "sqrt(a) sum sech(pi a n) = sqrt(b) sum sech(pi b n), a*b = 1";
        r.params = {positive("alpha", 1.0), derived("beta")};
        r.constraint = product_constraint("alpha*beta=1", "alpha", "beta", 1.0);
        r.default_tol = 1e-10;
        auto side = [](double a, double tol) {
            series::SeriesTerm t{[a](long long n) { return sf::sech(kPi * a * n); }, kPi * a};
            return sum_value(series::sum_bilateral(t, tol_series(tol)), std::sqrt(a));
        };
        r.lhs = [side](const Params& p, double tol) { return side(p.at("alpha"), tol); };
        r.rhs = [side](const Params& p, double tol) { return side(p.at("beta"), tol); };
        add(std::move(r));
    }

    // --- Lerch-type conditionally convergent sum ---------------------------
    {
        IdentityRecord r;
        r.id = "LERCH";
        r.description =
            "sum sin(sqrt(2) pi n/p)/|n + p/sqrt(2)|^(1/2) is invariant under p -> 1/p";
        r.params = {{"p", 1.2, 1.0 / std::sqrt(2.0), std::sqrt(2.0), false}};
        r.default_tol = 1e-4;
        r.lhs = [](const Params& p, double tol) {
            auto s = series::sum_lerch(p.at("p"), tol);
            return SideValue{s.value, s.tail_bound, s.terms_used};
        };
        r.rhs = [](const Params& p, double tol) {
            auto s = series::sum_lerch(1.0 / p.at("p"), tol);
            return SideValue{s.value, s.tail_bound, s.terms_used};
        };
        add(std::move(r));
    }

    // --- 2D self-reciprocal kernels ----------------------------------------
    struct Sr2dEntry {
        const char* id;
        sf::KernelId kernel;
        const char* text;
    };
    const Sr2dEntry sr2d_entries[] = {
        {"SR2D-COS1", sf::KernelId::K2dCos1,
         "1/(cosh sqrt(pi) x + cosh sqrt(pi) y) reproduces itself under the cos-cos transform"},
        {"SR2D-SINSIN", sf::KernelId::K2dSinSin,
         "sin(xy)/(sinh sqrt(pi) x sinh sqrt(pi) y) reproduces itself under the cos-cos "
         "transform"},
        {"SR2D-ONEMINUSCOS", sf::KernelId::K2dOneMinusCos,
         "(1 - cos xy)/(sinh sqrt(pi) x sinh sqrt(pi) y) reproduces itself under the sin-sin "
         "transform"},
    };
    for (const auto& e : sr2d_entries) {
        IdentityRecord r;
        r.id = e.id;
        r.description = e.text;
        r.params = {probe("a", 0.4), probe("b", 0.9)};
        r.default_tol = 1e-7;
        sf::KernelId kid = e.kernel;
        r.lhs = [kid](const Params& p, double tol) {
            auto k = sf::make_kernel(kid);
            double v = tr::fourier_2d(k, tr::sr_kind(kid), p.at("a"), p.at("b"), tol_2d(tol));
            return SideValue{v, tol_2d(tol), 0};
        };
        r.rhs = [kid](const Params& p, double) {
            return exact(sf::kernel_eval_2d(sf::make_kernel(kid), p.at("a"), p.at("b")));
        };
        add(std::move(r));
    }

    // --- cos(xy) sech sech kernel: transform with a sign flip --------------
    {
        IdentityRecord r;
        r.id = "F1";
        r.description =
            "(2/pi) iint cos(xy) sech(c x) sech(c y) cos(ax) cos(by) = sin(ab)/(sinh(c a) "
            "sinh(c b)), c = sqrt(pi/2)";
        r.params = {probe("a", 0.5), probe("b", 0.5)};
        r.default_tol = 1e-7;
        r.lhs = [](const Params& p, double tol) {
            auto k = sf::make_kernel(sf::KernelId::K2dF1);
            double v = tr::fourier_2d(k, tr::Kind::CosCos, p.at("a"), p.at("b"), tol_2d(tol));
            return SideValue{v, tol_2d(tol), 0};
        };
        r.rhs = [](const Params& p, double) {
            double a = p.at("a"), b = p.at("b");
            double v = sf::sinc(a * b) /
                       (0.5 * kPi * sf::sinhc(kSqrtHalfPi * a) * sf::sinhc(kSqrtHalfPi * b));
            return exact(v);
        };
        add(std::move(r));
    }

    // --- Gaussian hyperbolic transformations --------------------------------
    struct HrEntry {
        const char* id;
        sf::KernelId kernel;
        double product;
        const char* display;
        const char* text;
    };
    const HrEntry hr_entries[] = {
        {"HR-1", sf::KernelId::Khr1, kPi, "alpha*beta=pi",
         "sqrt(a) int e^{-x^2} sech(a x) dx is invariant under a*b = pi"},
        {"HR-2", sf::KernelId::Khr2, 2.0 * kPi, "alpha*beta=2*pi",
         "sqrt(a) int cosh(a x/2)/cosh(a x) e^{-x^2} dx is invariant under a*b = 2 pi"},
        {"HR-3", sf::KernelId::Khr3, 2.0 * kPi, "alpha*beta=2*pi",
         "sqrt(a) int sinh(a x/2)/cosh(a x) x e^{-x^2} dx is invariant under a*b = 2 pi"},
    };
    for (const auto& e : hr_entries) {
        IdentityRecord r;
        r.id = e.id;
        r.description = e.text;
        r.params = {positive("alpha", 1.0), derived("beta")};
        r.constraint = product_constraint(e.display, "alpha", "beta", e.product);
        r.default_tol = 1e-9;
        sf::KernelId kid = e.kernel;
        auto side = [kid](double a, double tol) {
            auto res = kernel_integral(sf::make_kernel(kid, {{"alpha", a}}), tol_1d(tol));
            return SideValue{std::sqrt(a) * res.value, std::sqrt(a) * res.abs_error_estimate,
                             res.evaluations};
        };
        r.lhs = [side](const Params& p, double tol) { return side(p.at("alpha"), tol); };
        r.rhs = [side](const Params& p, double tol) { return side(p.at("beta"), tol); };
        add(std::move(r));
    }

    // --- mixed-argument 2D transform closed forms ---------------------------
    {
        IdentityRecord r;
        r.id = "I1";
        r.description =
            "(2/pi) iint cos(xy) cos(ax) cos(by)/(cosh(p x) cosh(pi y/p)) in closed form";
        r.params = {positive("p", kSqrtPi, 40.0), probe("a", 0.4), probe("b", 0.7)};
        r.default_tol = 1e-7;
        r.lhs = [](const Params& p, double tol) {
            auto k = sf::make_kernel(sf::KernelId::KI1, {{"p", p.at("p")}});
            double v = tr::fourier_2d(k, tr::Kind::CosCos, p.at("a"), p.at("b"), tol_2d(tol));
            return SideValue{v, tol_2d(tol), 0};
        };
        r.rhs = [](const Params& pm, double) {
            double p = pm.at("p"), a = pm.at("a"), b = pm.at("b");
            double den = std::cosh(kPi * a / p) * std::cosh(p * b);
            double v = std::sqrt(2.0) * std::cosh(0.5 * kPi * a / p) * std::cosh(0.5 * p * b) /
                           den -
                       std::cos(a * b) / den;
            return exact(v);
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "I2";
        r.description =
            "(2/pi) iint sin(xy) sin(ax) sin(by)/(cosh(p x) cosh(pi y/p)) in closed form";
        r.params = {positive("p", kSqrtPi, 40.0), probe("a", 0.4), probe("b", 0.7)};
        r.default_tol = 1e-7;
        r.lhs = [](const Params& p, double tol) {
            auto k = sf::make_kernel(sf::KernelId::KI2, {{"p", p.at("p")}});
            double v = tr::fourier_2d(k, tr::Kind::SinSin, p.at("a"), p.at("b"), tol_2d(tol));
            return SideValue{v, tol_2d(tol), 0};
        };
        r.rhs = [](const Params& pm, double) {
            double p = pm.at("p"), a = pm.at("a"), b = pm.at("b");
            double den = std::cosh(kPi * a / p) * std::cosh(p * b);
            double v = std::sqrt(2.0) * std::sinh(0.5 * kPi * a / p) * std::sinh(0.5 * p * b) /
                           den -
                       std::sin(a * b) / den;
            return exact(v);
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "I3";
        r.description =
            "(4/pi) iint cos(xy) cos(ax) cos(by)/((1+2cosh x)(1+2cosh(2 pi y/3))) in closed form";
        r.params = {{"a", 0.4, 1e-6, 50.0, false}, {"b", 0.7, 1e-6, 50.0, false}};
        r.default_tol = 1e-7;
        r.lhs = [](const Params& p, double tol) {
            auto k = sf::make_kernel(sf::KernelId::KI3);
            double v =
                2.0 * tr::fourier_2d(k, tr::Kind::CosCos, p.at("a"), p.at("b"), tol_2d(tol));
            return SideValue{v, 2.0 * tol_2d(tol), 0};
        };
        r.rhs = [](const Params& pm, double) {
            double a = pm.at("a"), b = pm.at("b");
            double v = kSqrt3 * std::sin(a * b) * std::cosh(0.5 * b) / std::sinh(1.5 * b) *
                           std::cosh(kPi * a / 3.0) / std::sinh(kPi * a) -
                       (1.0 + std::cos(a * b)) / ((1.0 + 2.0 * std::cosh(2.0 * kPi * a / 3.0)) *
                                                  (1.0 + 2.0 * std::cosh(b)));
            return exact(v);
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "I4";
        r.description =
            "(4/pi) iint sin(xy) sin(ax) sin(by)/((1+2cosh x)(1+2cosh(2 pi y/3))) in closed form";
        r.params = {{"a", 0.4, 1e-6, 50.0, false}, {"b", 0.7, 1e-6, 50.0, false}};
        r.default_tol = 1e-7;
        r.lhs = [](const Params& p, double tol) {
            auto k = sf::make_kernel(sf::KernelId::KI4);
            double v =
                2.0 * tr::fourier_2d(k, tr::Kind::SinSin, p.at("a"), p.at("b"), tol_2d(tol));
            return SideValue{v, 2.0 * tol_2d(tol), 0};
        };
        r.rhs = [](const Params& pm, double) {
            double a = pm.at("a"), b = pm.at("b");
            double v = kSqrt3 * (1.0 - std::cos(a * b)) * std::cosh(0.5 * b) *
                           std::cosh(kPi * a / 3.0) /
                           (std::sinh(1.5 * b) * std::sinh(kPi * a)) -
                       std::sin(a * b) / ((1.0 + 2.0 * std::cosh(2.0 * kPi * a / 3.0)) *
                                          (1.0 + 2.0 * std::cosh(b)));
            return exact(v);
        };
        add(std::move(r));
    }

    // --- series identities ----------------------------------------------------
    {
        IdentityRecord r;
        r.id = "LEGENDRE";
        r.description =
            "sech-sum product equals 2/pi + 4 sum n a/sinh(pi n a) + 4 sum n b/sinh(pi n b), "
            "a*b = 1 (the Legendre relation in series form)";
        r.params = {positive("alpha", 1.0), derived("beta")};
        r.constraint = product_constraint("alpha*beta=1", "alpha", "beta", 1.0);
        r.default_tol = 1e-10;
        r.lhs = [](const Params& p, double tol) {
            auto s = series::legendre_sum_check(p.at("alpha"), tol_series(tol));
            return SideValue{s.lhs, 0.0, s.terms};
        };
        r.rhs = [](const Params& p, double tol) {
            auto s = series::legendre_sum_check(p.at("alpha"), tol_series(tol));
            return SideValue{s.rhs, 0.0, s.terms};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "LANDEN";
        r.description =
            "sqrt(2) product of sech sums equals the product of cosh-half quotient sums, "
            "a*b = 2 (modulus-halving transformation in series form)";
        r.params = {positive("alpha", std::sqrt(2.0)), derived("beta")};
        r.constraint = product_constraint("alpha*beta=2", "alpha", "beta", 2.0);
        r.default_tol = 1e-10;
        r.lhs = [](const Params& p, double tol) {
            auto s = series::landen_sum_check(p.at("alpha"), tol_series(tol));
            return SideValue{s.lhs, 0.0, s.terms};
        };
        r.rhs = [](const Params& p, double tol) {
            auto s = series::landen_sum_check(p.at("alpha"), tol_series(tol));
            return SideValue{s.rhs, 0.0, s.terms};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "ELL1";
        r.description =
            "a-weighted n cosh/sinh sums equal -1/(2 pi sqrt(3)) plus (a/4) times the squared "
            "(cosh + 1/2)^{-1} sum";
        r.params = {positive("alpha", 1.0)};
        r.default_tol = 1e-9;
        r.lhs = [](const Params& p, double tol) {
            auto s = series::elliptic1_check(p.at("alpha"), tol_series(tol));
            return SideValue{s.lhs, 0.0, s.terms};
        };
        r.rhs = [](const Params& p, double tol) {
            auto s = series::elliptic1_check(p.at("alpha"), tol_series(tol));
            return SideValue{s.rhs, 0.0, s.terms};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "ELL2";
        r.description =
            "exploratory: (sqrt(3)/4) product of odd (cosh + 1/2)^{-1} sums against the product "
            "of chi-weighted cosh/sinh sums; no parameter relation assumed";
        r.params = {positive("alpha", 1.0), positive("beta", 1.0)};
        r.default_tol = 1e-6;
        r.asserted = false;
        r.lhs = [](const Params& p, double) {
            return exact(0.25 * kSqrt3 * ell2_half_sum(p.at("alpha")) *
                         ell2_half_sum(p.at("beta")));
        };
        r.rhs = [](const Params& p, double) {
            return exact(ell2_char_sum(p.at("alpha")) * ell2_char_sum(p.at("beta")));
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "FBETA";
        r.description =
            "f(t) = sum 1/(cosh b n - cos t): f^2(t) - 2 cos t f(t) f(2t) + cos t/sin^2 t f(t) "
            "equals its quadratic series representation";
        r.params = {positive("beta", 2.0), {"theta", kPi / 3.0, 0.0, kPi, false}};
        r.default_tol = 1e-9;
        r.lhs = [](const Params& p, double tol) {
            auto s = series::fbeta_check(p.at("beta"), p.at("theta"), tol_series(tol));
            return SideValue{s.lhs, 0.0, s.terms};
        };
        r.rhs = [](const Params& p, double tol) {
            auto s = series::fbeta_check(p.at("beta"), p.at("theta"), tol_series(tol));
            return SideValue{s.rhs, 0.0, s.terms};
        };
        add(std::move(r));
    }

    // --- two-dimensional Mordell integrals -----------------------------------
    {
        IdentityRecord r;
        r.id = "LANDEN2";
        r.description =
            "sqrt(2) iint cos(2xy) e^{-x^2-y^2} sech(a x) sech(b y) equals the product of the "
            "two 1D cosh-half Mordell integrals, a*b = 2 pi";
        r.params = {positive("alpha", 2.0), derived("beta")};
        r.constraint = product_constraint("alpha*beta=2*pi", "alpha", "beta", 2.0 * kPi);
        r.default_tol = 1e-7;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha"), b = p.at("beta");
            auto v = integ2(
                [a, b](double x, double y) {
                    if (x > 30.0 || y > 30.0) return 0.0;
                    return std::cos(2.0 * x * y) * sf::sech(a * x) * sf::sech(b * y) *
                           std::exp(-x * x - y * y);
                },
                {1.0, quad::DecayKind::Gaussian}, {1.0, quad::DecayKind::Gaussian}, 12.0,
                tol_2d(tol));
            return SideValue{std::sqrt(2.0) * v.value,
                             std::sqrt(2.0) * v.abs_error_estimate, v.evaluations};
        };
        r.rhs = [](const Params& p, double tol) {
            auto m1 = mordell_gauss_cosh(p.at("alpha"), tol_1d(tol));
            auto m2 = mordell_gauss_cosh(p.at("beta"), tol_1d(tol));
            return SideValue{m1.value * m2.value,
                             std::abs(m1.value) * m2.abs_error_estimate +
                                 std::abs(m2.value) * m1.abs_error_estimate,
                             m1.evaluations + m2.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "FACT1";
        r.description =
            "iint e^{-x^2-y^2} cos(2xy) sech(a x) sech(2 pi y/a) equals (a/(2 sqrt(pi))) times "
            "the squared cosh-half Mordell integral";
        r.params = {positive("alpha", std::sqrt(2.0 * kPi)), derived("beta")};
        r.constraint = product_constraint("alpha*beta=2*pi", "alpha", "beta", 2.0 * kPi);
        r.default_tol = 1e-7;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha"), b = p.at("beta");
            auto v = integ2(
                [a, b](double x, double y) {
                    if (x > 30.0 || y > 30.0) return 0.0;
                    return std::exp(-x * x - y * y) * std::cos(2.0 * x * y) * sf::sech(a * x) *
                           sf::sech(b * y);
                },
                {1.0, quad::DecayKind::Gaussian}, {1.0, quad::DecayKind::Gaussian}, 12.0,
                tol_2d(tol));
            return from_quad(v);
        };
        r.rhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            auto m = mordell_gauss_cosh(a, tol_1d(tol));
            double scale = a / (2.0 * kSqrtPi);
            return SideValue{scale * m.value * m.value,
                             2.0 * scale * std::abs(m.value) * m.abs_error_estimate,
                             m.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "FACT2";
        r.description =
            "iint xy e^{-x^2-y^2} sin(2xy) sech(a x) sech(2 pi y/a) equals (a/(2 sqrt(pi))) "
            "times the squared x sinh-half Mordell integral";
        r.params = {positive("alpha", std::sqrt(2.0 * kPi)), derived("beta")};
        r.constraint = product_constraint("alpha*beta=2*pi", "alpha", "beta", 2.0 * kPi);
        r.default_tol = 1e-7;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha"), b = p.at("beta");
            auto v = integ2(
                [a, b](double x, double y) {
                    if (x > 30.0 || y > 30.0) return 0.0;
                    return x * y * std::exp(-x * x - y * y) * std::sin(2.0 * x * y) *
                           sf::sech(a * x) * sf::sech(b * y);
                },
                {1.0, quad::DecayKind::Gaussian}, {1.0, quad::DecayKind::Gaussian}, 12.0,
                tol_2d(tol));
            return from_quad(v);
        };
        r.rhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            auto m = mordell_gauss_sinh(a, tol_1d(tol));
            double scale = a / (2.0 * kSqrtPi);
            return SideValue{scale * m.value * m.value,
                             2.0 * scale * std::abs(m.value) * m.abs_error_estimate,
                             m.evaluations};
        };
        add(std::move(r));
    }

    // --- corollaries with Ramanujan's I1..I4 ----------------------------------
    struct CorEntry {
        const char* id;
        bool quad_cos;
        bool xy_weight;
        const char* text;
    };
    const CorEntry cor_entries[] = {
        {"COR1a", true, false,
         "iint cos((pi/2)(n x^2 - y^2/n)) cos(pi x y) sech sech = (sqrt(n)/2)(I1^2 - I2^2 + "
         "2 I1 I2)"},
        {"COR1b", false, false,
         "iint sin((pi/2)(n x^2 - y^2/n)) cos(pi x y) sech sech = (sqrt(n)/2)(I2^2 - I1^2 + "
         "2 I1 I2)"},
        {"COR2a", true, true,
         "iint xy cos((pi/2)(n x^2 - y^2/n)) sin(pi x y) sech sech = (sqrt(n^3)/2)(I4^2 - I3^2 "
         "+ 2 I3 I4)"},
        {"COR2b", false, true,
         "iint xy sin((pi/2)(n x^2 - y^2/n)) sin(pi x y) sech sech = (sqrt(n^3)/2)(I4^2 - I3^2 "
         "- 2 I3 I4)"},
    };
    for (const auto& e : cor_entries) {
        IdentityRecord r;
        r.id = e.id;
        r.description = e.text;
        r.params = {positive("n", 1.0, 10.0)};
        r.default_tol = 1e-6;
        bool quad_cos = e.quad_cos, xy = e.xy_weight;
        r.lhs = [quad_cos, xy](const Params& p, double tol) {
            return corollary_lhs(quad_cos, xy, xy, p.at("n"), tol_2d(tol));
        };
        std::string id = e.id;
        r.rhs = [id](const Params& p, double tol) {
            double n = p.at("n");
            double t1 = tol_1d(tol);
            if (id[3] == '1') {
                auto i1 = ram_i(1, n, t1), i2 = ram_i(2, n, t1);
                double a = i1.value, b = i2.value;
                double v = (id == "COR1a") ? a * a - b * b + 2.0 * a * b
                                           : b * b - a * a + 2.0 * a * b;
                return SideValue{0.5 * std::sqrt(n) * v, 2.0 * t1,
                                 i1.evaluations + i2.evaluations};
            }
            auto i3 = ram_i(3, n, t1), i4 = ram_i(4, n, t1);
            double a = i3.value, b = i4.value;
            double v = (id == "COR2a") ? b * b - a * a + 2.0 * a * b
                                       : b * b - a * a - 2.0 * a * b;
            return SideValue{0.5 * std::sqrt(n * n * n) * v, 2.0 * t1,
                             i3.evaluations + i4.evaluations};
        };
        add(std::move(r));
    }

    // --- rational-n closed forms ------------------------------------------------
    {
        IdentityRecord r;
        r.id = "EX1";
        r.description =
            "iint cos((pi/2)(3x^2 - y^2/3)) cos(pi x y) sech sech = (sqrt(3)-1)/(2 sqrt(6))";
        r.default_tol = 1e-6;
        r.lhs = [](const Params&, double tol) {
            return corollary_lhs(true, false, false, 3.0, tol_2d(tol));
        };
        r.rhs = [](const Params&, double) {
            return exact((kSqrt3 - 1.0) / (2.0 * std::sqrt(6.0)));
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "EX2";
        r.description =
            "iint sin((pi/2)(3x^2 - y^2/3)) cos(pi x y) sech sech = (2-sqrt(3))/(4 sqrt(2))";
        r.default_tol = 1e-6;
        r.lhs = [](const Params&, double tol) {
            return corollary_lhs(false, false, false, 3.0, tol_2d(tol));
        };
        r.rhs = [](const Params&, double) {
            return exact((2.0 - kSqrt3) / (4.0 * std::sqrt(2.0)));
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "EX3";
        r.description =
            "iint xy cos((pi/2)(x^2 - y^2)) sin(pi x y) sech sech = 1/(8 sqrt(2) pi^2)";
        r.default_tol = 1e-6;
        r.lhs = [](const Params&, double tol) {
            return corollary_lhs(true, true, true, 1.0, tol_2d(tol));
        };
        r.rhs = [](const Params&, double) {
            return exact(1.0 / (8.0 * std::sqrt(2.0) * kPi * kPi));
        };
        add(std::move(r));
    }

    // --- theta-analog machinery ---------------------------------------------
    {
        IdentityRecord r;
        r.id = "PHI-FUNC";
        r.description =
            "sqrt(ab) e^{(t^2/a + f^2/b)/(2 pi)} Phi_{a,b}(t,f) + Phi_{1/a,1/b}(it/a, if/b) "
            "factorizes into two 1D Mordell integrals";
        r.params = {positive("alpha", 1.0), positive("beta", 1.0),
                    {"theta", 0.3, -kInf, kInf, false}, {"phi", 0.3, -kInf, kInf, false}};
        r.default_tol = 1e-6;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha"), b = p.at("beta");
            double t = p.at("theta"), f = p.at("phi");
            auto first = phi(a, b, {t, 0.0}, {f, 0.0}, tol_2d(tol));
            auto second = phi(1.0 / a, 1.0 / b, {0.0, t / a}, {0.0, f / b}, tol_2d(tol));
            double v = std::sqrt(a * b) * std::exp((t * t / a + f * f / b) / (2.0 * kPi)) *
                           first.re +
                       second.re;
            return SideValue{v, 4.0 * tol_2d(tol), 0};
        };
        r.rhs = [](const Params& p, double tol) {
            double a = p.at("alpha"), b = p.at("beta");
            auto m1 = phi_mordell(a, p.at("theta") / a, tol_1d(tol));
            auto m2 = phi_mordell(b, p.at("phi") / b, tol_1d(tol));
            return SideValue{std::sqrt(2.0) * m1.value * m2.value, 4.0 * tol_1d(tol),
                             m1.evaluations + m2.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "PHI-SHIFT";
        r.description =
            "Phi_{a,b}(t + i pi, f) + Phi_{a,b}(t - i pi, f) reduces to a single 1D integral "
            "(the cosh(pi x) factors cancel)";
        r.params = {positive("alpha", 1.0), positive("beta", 1.0),
                    {"theta", 0.4, -kInf, kInf, false}, {"phi", 0.2, -kInf, kInf, false}};
        r.default_tol = 1e-6;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha"), b = p.at("beta");
            double t = p.at("theta"), f = p.at("phi");
            // cos((t+i pi)x) + cos((t-i pi)x) = 2 cos(tx) cosh(pi x)
            auto v = integ2(
                [a, b, t, f](double x, double y) {
                    if (x > 40.0 || y > 40.0) return 0.0;
                    double q = -0.5 * kPi * (a * x * x + b * y * y);
                    return 2.0 * std::cos(t * x) * std::cos(f * y) * std::cos(kPi * x * y) *
                           sf::sech(kPi * y) * std::exp(q);
                },
                {0.5 * kPi * a, quad::DecayKind::Gaussian, 2.0},
                {0.5 * kPi * b, quad::DecayKind::Gaussian, 2.0}, 12.0, tol_2d(tol));
            return from_quad(v);
        };
        r.rhs = [](const Params& p, double tol) {
            double a = p.at("alpha"), b = p.at("beta");
            double t = p.at("theta"), f = p.at("phi");
            auto v = integ1(
                [a, b, t, f](double y) {
                    if (y > 60.0) return 0.0;
                    double q = -0.5 * kPi * (b + 1.0 / a) * y * y;
                    return std::cos(f * y) * sf::sech(kPi * y) * sf::cosh_mul_exp(t * y / a, q);
                },
                {0.5 * kPi * (b + 1.0 / a), quad::DecayKind::Gaussian, 2.0, std::abs(t) / a},
                0.0, tol_1d(tol));
            double scale = std::exp(-t * t / (2.0 * kPi * a)) * std::sqrt(2.0 / a);
            return SideValue{scale * v.value, scale * v.abs_error_estimate, v.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "PHI-COMBINED";
        r.description =
            "exploratory: combined real-shift reduction of Phi to one-dimensional Mordell "
            "integrals, exactly as displayed";
        r.params = {positive("alpha", 1.0), positive("beta", 1.0),
                    {"theta", 0.4, -kInf, kInf, false}, {"phi", 0.2, -kInf, kInf, false}};
        r.default_tol = 1e-6;
        r.asserted = false;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha"), b = p.at("beta");
            double t = p.at("theta"), f = p.at("phi");
            auto up = phi(a, b, {t + kPi * a, 0.0}, {f, 0.0}, tol_2d(tol));
            auto dn = phi(a, b, {t - kPi * a, 0.0}, {f, 0.0}, tol_2d(tol));
            double v = std::sqrt(0.5 * b) * std::exp(f * f / (2.0 * kPi * b)) *
                       (std::exp((t + kPi * a) * (t + kPi * a) / (2.0 * kPi * a)) * up.re +
                        std::exp((t - kPi * a) * (t - kPi * a) / (2.0 * kPi * a)) * dn.re);
            return SideValue{v, 4.0 * tol_2d(tol), 0};
        };
        r.rhs = [](const Params& p, double tol) {
            double a = p.at("alpha"), b = p.at("beta");
            double t = p.at("theta"), f = p.at("phi");
            auto first = integ1(
                [a, b, t, f](double y) {
                    if (y > 60.0) return 0.0;
                    double q = -0.5 * kPi * (a + 1.0 / b) * y * y;
                    return std::cos(t * y) * sf::sech(kPi * y) * sf::cosh_mul_exp(f * y / a, q);
                },
                {0.5 * kPi * (a + 1.0 / b), quad::DecayKind::Gaussian, 2.0, std::abs(f) / a},
                0.0, tol_1d(tol));
            auto second = phi_mordell(b, f / b, tol_1d(tol));
            double v = -std::exp(t * t / (2.0 * kPi * a)) * first.value +
                       std::sqrt(2.0) * std::exp(kPi * a / 8.0 + t * t / (2.0 * kPi * a)) *
                           std::cosh(0.5 * t) * second.value;
            return SideValue{v, 4.0 * tol_1d(tol), first.evaluations + second.evaluations};
        };
        add(std::move(r));
    }

    // --- absolute value of the Mordell integral and relatives -----------------
    {
        IdentityRecord r;
        r.id = "ABS";
        r.description =
            "int sin(a x^2)/(sinh(pi x) sinh(a x)) equals the squared modulus of the "
            "int e^{i a x^2} sech(pi x) Mordell integral";
        r.params = {positive("alpha", 1.0, 40.0)};
        r.default_tol = 1e-8;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            double osc = a * quad::truncation_cutoff(kPi + a, quad::DecayKind::Exponential,
                                                     tol_1d(tol));
            auto v = integ1(
                [a](double x) {
                    double den = (kPi * x) * sf::sinhc(kPi * x) * (a * x) * sf::sinhc(a * x);
                    return std::isfinite(den) ? std::sin(a * x * x) / den : 0.0;
                },
                {kPi + a, quad::DecayKind::Exponential, 4.0}, osc, tol_1d(tol));
            return from_quad(v);
        };
        r.rhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            auto c = mordell_sech(false, a, tol_1d(tol));
            auto s = mordell_sech(true, a, tol_1d(tol));
            return SideValue{c.value * c.value + s.value * s.value,
                             2.0 * (std::abs(c.value) * c.abs_error_estimate +
                                    std::abs(s.value) * s.abs_error_estimate),
                             c.evaluations + s.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "HALF";
        r.description =
            "three equal evaluations: int sin(2a x^2)/(sinh pi x sinh a x), int cos(2a x^2) "
            "sech(pi x) sech(a x), and |int cosh(pi x/2)/cosh(pi x) e^{i a x^2/2}|^2";
        r.params = {positive("alpha", 1.0, 40.0)};
        r.default_tol = 1e-8;
        r.style = CheckStyle::ThreeWay;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            double osc = 2.0 * a * quad::truncation_cutoff(kPi + a,
                                                           quad::DecayKind::Exponential,
                                                           tol_1d(tol));
            auto v = integ1(
                [a](double x) {
                    double den = (kPi * x) * sf::sinhc(kPi * x) * (a * x) * sf::sinhc(a * x);
                    return std::isfinite(den) ? std::sin(2.0 * a * x * x) / den : 0.0;
                },
                {kPi + a, quad::DecayKind::Exponential, 4.0}, osc, tol_1d(tol));
            return from_quad(v);
        };
        r.rhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            double osc = 2.0 * a * quad::truncation_cutoff(kPi + a,
                                                           quad::DecayKind::Exponential,
                                                           tol_1d(tol));
            auto v = integ1(
                [a](double x) {
                    return std::cos(2.0 * a * x * x) * sf::sech(kPi * x) * sf::sech(a * x);
                },
                {kPi + a, quad::DecayKind::Exponential, 4.0}, osc, tol_1d(tol));
            return from_quad(v);
        };
        r.third = [](const Params& p, double tol) {
            double a = p.at("alpha");
            double osc = a * quad::truncation_cutoff(kPi / 2.0, quad::DecayKind::Exponential,
                                                     tol_1d(tol));
            auto c = integ1(
                [a](double x) {
                    return sf::cosh_ratio(0.5 * kPi * x, kPi * x) * std::cos(0.5 * a * x * x);
                },
                {kPi / 2.0, quad::DecayKind::Exponential, 2.0}, osc, tol_1d(tol));
            auto s = integ1(
                [a](double x) {
                    return sf::cosh_ratio(0.5 * kPi * x, kPi * x) * std::sin(0.5 * a * x * x);
                },
                {kPi / 2.0, quad::DecayKind::Exponential, 2.0}, osc, tol_1d(tol));
            return SideValue{c.value * c.value + s.value * s.value,
                             2.0 * (std::abs(c.value) * c.abs_error_estimate +
                                    std::abs(s.value) * s.abs_error_estimate),
                             c.evaluations + s.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "CUBE";
        r.description =
            "pi int [sin(3a x^2/(4 pi)) coth(x/2) coth(a x/2) - cos(3a x^2/(4 pi))/sqrt(3)] / "
            "((1+2cosh x)(1+2cosh a x)) equals |int e^{3 i a x^2/(4 pi)}/(1+2cosh x)|^2";
        r.params = {positive("alpha", 1.0, 40.0)};
        r.default_tol = 1e-8;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            double c = 3.0 * a / (4.0 * kPi);
            double osc =
                2.0 * c * quad::truncation_cutoff(1.0 + a, quad::DecayKind::Exponential,
                                                  tol_1d(tol));
            auto v = integ1(
                [a, c](double x) {
                    double inv = sf::inv_one_plus_two_cosh(x) * sf::inv_one_plus_two_cosh(a * x);
                    if (inv == 0.0) return 0.0;
                    double t = c * x * x;
                    double coth2 = (std::cosh(0.5 * x) / (0.5 * x * sf::sinhc(0.5 * x))) *
                                   (std::cosh(0.5 * a * x) /
                                    (0.5 * a * x * sf::sinhc(0.5 * a * x)));
                    double osc_part = t * sf::sinc(t) * coth2;  // sin(t) coth coth, exact at 0
                    return (osc_part - std::cos(t) / kSqrt3) * inv;
                },
                {1.0 + a, quad::DecayKind::Exponential, 4.0}, osc, tol_1d(tol));
            return SideValue{kPi * v.value, kPi * v.abs_error_estimate, v.evaluations};
        };
        r.rhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            auto cc = kernel_integral(sf::make_kernel(sf::KernelId::CubeCos, {{"alpha", a}}),
                                      tol_1d(tol));
            auto ss = kernel_integral(sf::make_kernel(sf::KernelId::CubeSin, {{"alpha", a}}),
                                      tol_1d(tol));
            return SideValue{cc.value * cc.value + ss.value * ss.value,
                             2.0 * (std::abs(cc.value) * cc.abs_error_estimate +
                                    std::abs(ss.value) * ss.abs_error_estimate),
                             cc.evaluations + ss.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "ZERO";
        r.description = "int tanh(pi x) tanh(a x) cos(2 a x^2) dx = 0";
        r.params = {positive("alpha", 1.0, 40.0)};
        r.default_tol = 1e-8;
        r.style = CheckStyle::Residual;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            quad::OscillatorySettled s;
            s.h = [a](double x) { return std::tanh(kPi * x) * std::tanh(a * x); };
            s.limit = 1.0;
            s.remainder_decay_rate = 2.0 * std::min(kPi, a);
            s.trig = quad::Trig::Cos;
            s.omega = 2.0 * a;
            return from_quad(quad::regularized_settled(s, quad::fine_eps_ladder(), tol_1d(tol)));
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "BYPRODUCT";
        r.description =
            "int 2 sin(a x^2/2)/(sinh pi x sinh a x) equals the regularized "
            "int tanh(pi x) tanh(a x) sin(2 a x^2)";
        r.params = {positive("alpha", 1.0, 40.0)};
        r.default_tol = 1e-8;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            double osc = a * quad::truncation_cutoff(kPi + a, quad::DecayKind::Exponential,
                                                     tol_1d(tol));
            auto v = integ1(
                [a](double x) {
                    double den = (kPi * x) * sf::sinhc(kPi * x) * (a * x) * sf::sinhc(a * x);
                    return std::isfinite(den) ? 2.0 * std::sin(0.5 * a * x * x) / den : 0.0;
                },
                {kPi + a, quad::DecayKind::Exponential, 4.0}, osc, tol_1d(tol));
            return from_quad(v);
        };
        r.rhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            quad::OscillatorySettled s;
            s.h = [a](double x) { return std::tanh(kPi * x) * std::tanh(a * x); };
            s.limit = 1.0;
            s.remainder_decay_rate = 2.0 * std::min(kPi, a);
            s.trig = quad::Trig::Sin;
            s.omega = 2.0 * a;
            return from_quad(quad::regularized_settled(s, quad::fine_eps_ladder(), tol_1d(tol)));
        };
        add(std::move(r));
    }
    for (bool sine : {false, true}) {
        IdentityRecord r;
        r.id = sine ? "GAUSS-SIN" : "GAUSS-COS";
        r.description =
            sine ? "int sin(xa) sin(a y a') e^{i a' a^2/2} da = i sqrt(pi i/(2 a')) "
                   "e^{-i(x^2+a'^2 y^2)/(2a')} sin(xy), real and imaginary parts"
                 : "int cos(xa) cos(a y a') e^{i a' a^2/2} da = sqrt(pi i/(2 a')) "
                   "e^{-i(x^2+a'^2 y^2)/(2a')} cos(xy), real and imaginary parts";
        r.params = {probe("x", 0.7), probe("y", 0.4), positive("alpha", 1.3, 40.0)};
        r.default_tol = 1e-9;
        r.style = CheckStyle::Residual;
        r.lhs = [sine](const Params& p, double tol) {
            double x = p.at("x"), y = p.at("y"), al = p.at("alpha");
            double omega = 0.5 * al;
            double linf = std::abs(x) + al * std::abs(y);
            auto h = [x, y, al, sine](double a) {
                return sine ? std::sin(x * a) * std::sin(al * y * a)
                            : std::cos(x * a) * std::cos(al * y * a);
            };
            double ptol = std::clamp(0.02 * tol, 1e-13, 1e-10);
            auto re = quad::regularized_quadratic_phase(h, quad::Trig::Cos, omega,
                                                        quad::geometric_eps_ladder(), ptol, linf);
            auto im = quad::regularized_quadratic_phase(h, quad::Trig::Sin, omega,
                                                        quad::geometric_eps_ladder(), ptol, linf);
            std::complex<double> i(0.0, 1.0);
            std::complex<double> pref = std::sqrt(kPi * i / (2.0 * al));
            std::complex<double> rhs =
                pref * std::exp(-i * (x * x + al * al * y * y) / (2.0 * al));
            rhs *= sine ? i * std::sin(x * y) : std::complex<double>(std::cos(x * y));
            double resid = std::max(std::abs(re.value - rhs.real()),
                                    std::abs(im.value - rhs.imag()));
            return SideValue{resid, re.abs_error_estimate + im.abs_error_estimate,
                             re.evaluations + im.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "RAM";
        r.description = "int cosh(a x)/cosh(pi x) cos(a x^2) dx = cos(a/4)/2 for 0 < a <= pi";
        r.params = {{"alpha", 1.0, 0.0, kPi * (1.0 + 1e-12), false}};
        r.default_tol = 1e-9;
        r.lhs = [](const Params& p, double tol) {
            double a = p.at("alpha");
            if (kPi - a < 0.5) {
                // slow envelope: evaluate through the regularized phase-panel rule
                auto h = [a](double x) { return sf::cosh_ratio(a * x, kPi * x); };
                double ptol = std::clamp(0.02 * tol, 1e-13, 1e-10);
                return from_quad(quad::regularized_quadratic_phase(
                    h, quad::Trig::Cos, a, quad::geometric_eps_ladder(), ptol));
            }
            auto k = sf::make_kernel(sf::KernelId::CoshRatioCos, {{"alpha", a}});
            return from_quad(kernel_integral(k, tol_1d(tol)));
        };
        r.rhs = [](const Params& p, double) { return exact(0.5 * std::cos(0.25 * p.at("alpha"))); };
        add(std::move(r));
    }
    for (bool sine : {false, true}) {
        IdentityRecord r;
        r.id = sine ? "SQRT2-SIN" : "SQRT2-COS";
        r.description = sine ? "sqrt(2) int sin(a x^2) sech(pi x) sech(a x) = int sinh(pi x/2) "
                               "sinh(a x/2) sech(pi x) sech(a x)"
                             : "sqrt(2) int cos(a x^2) sech(pi x) sech(a x) = int cosh(pi x/2) "
                               "cosh(a x/2) sech(pi x) sech(a x)";
        r.params = {positive("alpha", 1.0, 40.0)};
        r.default_tol = 1e-8;
        r.lhs = [sine](const Params& p, double tol) {
            double a = p.at("alpha");
            double osc = a * quad::truncation_cutoff(kPi + a, quad::DecayKind::Exponential,
                                                     tol_1d(tol));
            auto v = integ1(
                [a, sine](double x) {
                    double ph = a * x * x;
                    double t = sine ? std::sin(ph) : std::cos(ph);
                    return t * sf::sech(kPi * x) * sf::sech(a * x);
                },
                {kPi + a, quad::DecayKind::Exponential, 4.0}, osc, tol_1d(tol));
            return SideValue{std::sqrt(2.0) * v.value, std::sqrt(2.0) * v.abs_error_estimate,
                             v.evaluations};
        };
        r.rhs = [sine](const Params& p, double tol) {
            double a = p.at("alpha");
            auto v = integ1(
                [a, sine](double x) {
                    double num = sine ? sf::sinh_cosh_ratio(0.5 * kPi * x, kPi * x) *
                                            sf::sinh_cosh_ratio(0.5 * a * x, a * x)
                                      : sf::cosh_ratio(0.5 * kPi * x, kPi * x) *
                                            sf::cosh_ratio(0.5 * a * x, a * x);
                    return num;
                },
                {0.5 * (kPi + a), quad::DecayKind::Exponential, 2.0}, 0.0, tol_1d(tol));
            return from_quad(v);
        };
        add(std::move(r));
    }

    // --- lattice kernels -------------------------------------------------------
    for (bool sine : {false, true}) {
        IdentityRecord r;
        r.id = sine ? "LAT2" : "LAT1";
        r.description = sine ? "sqrt(2) iint sin(x^2 y^2/pi) sech(x^2) sech(y^2) equals the "
                               "squared int sinh(x^2/2)/cosh(x^2)"
                             : "sqrt(2) iint cos(x^2 y^2/pi) sech(x^2) sech(y^2) equals the "
                               "squared int cosh(x^2/2)/cosh(x^2)";
        r.default_tol = 1e-6;
        r.lhs = [sine](const Params&, double tol) {
            auto k = sf::make_kernel(sine ? sf::KernelId::LatticeSin2d
                                          : sf::KernelId::LatticeCos2d);
            auto [dx, dy] = sf::kernel_decay_2d(k);
            auto v = integ2([k](double x, double y) { return sf::kernel_eval_2d(k, x, y); }, dx,
                            dy, sf::kernel_osc_frequency(k), tol_2d(tol));
            return SideValue{std::sqrt(2.0) * v.value, std::sqrt(2.0) * v.abs_error_estimate,
                             v.evaluations};
        };
        r.rhs = [sine](const Params&, double tol) {
            auto k = sf::make_kernel(sine ? sf::KernelId::LatSinhHalf : sf::KernelId::LatCoshHalf);
            auto v = kernel_integral(k, tol_1d(tol));
            return SideValue{v.value * v.value,
                             2.0 * std::abs(v.value) * v.abs_error_estimate, v.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "LAT-INNER";
        r.description =
            "int e^{-(2n+1) y^2} cos(x^2 y^2/pi) dy = (pi/4)[ (pi(2n+1)+i x^2)^{-1/2} + "
            "(pi(2n+1)-i x^2)^{-1/2} ]";
        r.params = {{"n", 0.0, -0.5, 40.0, false}, positive("x", 1.0, 12.0)};
        r.default_tol = 1e-10;
        r.lhs = [](const Params& p, double tol) {
            double n = p.at("n"), x = p.at("x");
            auto v = integ1(
                [n, x](double y) {
                    if (y > 40.0) return 0.0;
                    return std::exp(-(2.0 * n + 1.0) * y * y) *
                           std::cos(x * x * y * y / kPi);
                },
                {2.0 * n + 1.0, quad::DecayKind::Gaussian}, x * x, tol_1d(tol));
            return from_quad(v);
        };
        r.rhs = [](const Params& p, double) {
            double n = p.at("n"), x = p.at("x");
            std::complex<double> w(kPi * (2.0 * n + 1.0), x * x);
            return exact(0.25 * kPi * 2.0 * (1.0 / std::sqrt(w)).real());
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "LAT-K0";
        r.description =
            "int e^{-(2n+1)x^2}/sqrt(pi(2m+1) + i x^2) dx = (1/2)(-1)^{m+n} e^{-3 pi i/4} "
            "K0(-i pi (2m+1)(2n+1)/2), via K0 at imaginary argument";
        r.params = {{"m", 0.0, -0.5, 20.0, false}, {"n", 0.0, -0.5, 20.0, false}};
        r.default_tol = 1e-8;
        r.style = CheckStyle::Residual;
        r.lhs = [](const Params& p, double tol) {
            double m = p.at("m"), n = p.at("n");
            auto re = lat_k0_lhs(m, n, true, tol_1d(tol));
            auto im = lat_k0_lhs(m, n, false, tol_1d(tol));
            double z = 0.5 * kPi * (2.0 * m + 1.0) * (2.0 * n + 1.0);
            std::complex<double> i(0.0, 1.0);
            std::complex<double> k0_minus_iz =
                -0.5 * kPi * (sf::bessel_y0(z) - i * sf::bessel_j0(z));
            std::complex<double> rhs = 0.5 * std::pow(-1.0, int(m + n)) *
                                       std::exp(-0.75 * kPi * i) * k0_minus_iz;
            double resid = std::max(std::abs(re.value - rhs.real()),
                                    std::abs(im.value - rhs.imag()));
            return SideValue{resid, re.abs_error_estimate + im.abs_error_estimate,
                             re.evaluations + im.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "K0-JY";
        r.description =
            "K0(ix) = -(pi/2)(Y0(x) + i J0(x)): int cos(x cosh t) dt = -(pi/2) Y0(x) and "
            "int sin(x cosh t) dt = (pi/2) J0(x)";
        r.params = {positive("x", 2.0, 60.0)};
        r.default_tol = 1e-9;
        r.style = CheckStyle::Residual;
        r.lhs = [](const Params& p, double tol) {
            double x = p.at("x");
            double ptol = std::clamp(0.02 * tol, 1e-13, 1e-10);
            auto c = mehler_sonine(false, x, ptol);
            auto s = mehler_sonine(true, x, ptol);
            double resid = std::max(std::abs(c.value + 0.5 * kPi * sf::bessel_y0(x)),
                                    std::abs(s.value - 0.5 * kPi * sf::bessel_j0(x)));
            return SideValue{resid, c.abs_error_estimate + s.abs_error_estimate,
                             c.evaluations + s.evaluations};
        };
        add(std::move(r));
    }
    {
        IdentityRecord r;
        r.id = "BESSEL-DOUBLESUM";
        r.description =
            "exploratory: (pi^2/2) partial sums of (J0+Y0)((pi/2)(2m+1)(2n+1)) against the "
            "lattice integral value (formal reduction; conditionally convergent at best)";
        r.params = {{"N", 6.0, 0.5, 12.5, false}};
        r.default_tol = 1e-2;
        r.asserted = false;
        r.lhs = [](const Params& p, double) {
            int N = static_cast<int>(p.at("N"));
            double s = 0.0;
            std::int64_t evals = 0;
            for (int m = 0; m <= N; ++m)
                for (int n = 0; n <= N; ++n) {
                    double z = 0.5 * kPi * (2.0 * m + 1.0) * (2.0 * n + 1.0);
                    s += sf::bessel_j0(z) + sf::bessel_y0(z);
                    ++evals;
                }
            return SideValue{0.5 * kPi * kPi * s, 0.0, evals};
        };
        r.rhs = [](const Params&, double tol) {
            auto k = sf::make_kernel(sf::KernelId::LatCoshHalf);
            auto v = kernel_integral(k, tol_1d(tol));
            return SideValue{v.value * v.value,
                             2.0 * std::abs(v.value) * v.abs_error_estimate, v.evaluations};
        };
        add(std::move(r));
    }

    std::sort(regs.begin(), regs.end(),
              [](const IdentityRecord& a, const IdentityRecord& b) { return a.id < b.id; });
    return regs;
}

}  // namespace

const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> regs = build_registry();
    return regs;
}

}  // namespace mordellkit::identities
