#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mordellkit/specfun.hpp"

using namespace mordellkit;
using namespace mordellkit::specfun;

namespace {

constexpr double kPi = std::numbers::pi;

// Composite Simpson oracle for K(k) = int_0^{pi/2} dt/sqrt(1-k^2 sin^2 t).
double elliptic_K_oracle(double k) {
    const int n = 100000;  // even
    double h = 0.5 * kPi / n;
    auto f = [k](double t) {
        double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - k * k * s * s);
    };
    double sum = f(0.0) + f(0.5 * kPi);
    for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return sum * h / 3.0;
}

// Theta-quotient oracle for the modulus attached to the nome q = e^{-pi a}:
// k = theta2(q)^2 / theta3(q)^2.
double modulus_oracle(double alpha) {
    double q = std::exp(-kPi * alpha);
    double t2 = 0.0, t3 = 1.0;
    for (int n = 0; n < 400; ++n) {
        double e2 = std::pow(q, n * (n + 1.0));
        t2 += 2.0 * std::pow(q, 0.25) * e2;
        if (n >= 1) t3 += 2.0 * std::pow(q, static_cast<double>(n) * n);
        if (n > 3 && e2 < 1e-18) break;
    }
    return (t2 * t2) / (t3 * t3);
}

}  // namespace

TEST_CASE("kernel point values at removable singularities") {
    auto src1 = make_kernel(KernelId::Src1);
    CHECK(kernel_eval_1d(src1, 0.0) == doctest::Approx(1.0));
    auto srs1 = make_kernel(KernelId::Srs1);
    CHECK(kernel_eval_1d(srs1, 0.0) == 0.0);
    auto fb = make_kernel(KernelId::KFBeta, {{"beta", 1.0}, {"theta", kPi / 2.0}});
    CHECK(kernel_eval_1d(fb, 0.0) == doctest::Approx(1.0));

    auto sinsin = make_kernel(KernelId::K2dSinSin);
    // limit in x at y = 1 must match a plain evaluation just off the axis
    double lim = kernel_eval_2d(sinsin, 0.0, 1.0);
    double near = std::sin(1e-6) / (std::sinh(std::sqrt(kPi) * 1e-6) * std::sinh(std::sqrt(kPi)));
    CHECK(std::abs(kernel_eval_2d(sinsin, 1e-6, 1.0) - near) < 1e-12);
    CHECK(std::abs(lim - 1.0 / (std::sqrt(kPi) * std::sinh(std::sqrt(kPi)))) < 1e-12);

    auto cos1 = make_kernel(KernelId::K2dCos1);
    CHECK(kernel_eval_2d(cos1, 0.0, 0.0) == doctest::Approx(0.5));
    auto f1 = make_kernel(KernelId::K2dF1);
    for (double x : {0.0, 0.7, 2.0})
        CHECK(kernel_eval_2d(f1, x, 0.0) ==
              doctest::Approx(1.0 / std::cosh(std::sqrt(kPi / 2.0) * x)));
    auto omc = make_kernel(KernelId::K2dOneMinusCos);
    CHECK(kernel_eval_2d(omc, 0.0, 1.3) == 0.0);
}

TEST_CASE("every catalog kernel is finite on a wide log grid") {
    std::vector<double> grid;
    for (double x = 1e-8; x <= 50.0; x *= 1.9) grid.push_back(x);
    grid.push_back(0.0);
    grid.push_back(50.0);
    for (KernelId id : kernel_catalog()) {
        ParamMap params;
        switch (id) {
            case KernelId::KI1:
            case KernelId::KI2: params = {{"p", std::sqrt(kPi)}}; break;
            case KernelId::KFBeta: params = {{"beta", 2.0}, {"theta", kPi / 3.0}}; break;
            case KernelId::CoshRatioCos: params = {{"alpha", 1.0}}; break;
            case KernelId::PhiWeight:
            case KernelId::PsiWeight:
                params = {{"alpha", 1.0}, {"beta", 1.0}, {"theta", 0.3}, {"phi", 0.2}};
                break;
            case KernelId::Khr1:
            case KernelId::Khr2:
            case KernelId::Khr3:
            case KernelId::MordellSechCos:
            case KernelId::MordellSechSin:
            case KernelId::TanhTanhCos:
            case KernelId::TanhTanhSin:
            case KernelId::CubeCos:
            case KernelId::CubeSin: params = {{"alpha", 1.5}}; break;
            default: break;
        }
        auto desc = make_kernel(id, params);
        if (kernel_is_2d(id)) {
            for (double x : grid)
                for (double y : {1e-8, 0.5, 1.0, 7.0, 50.0, 0.0}) {
                    CHECK(std::isfinite(kernel_eval_2d(desc, x, y)));
                    CHECK(std::isfinite(kernel_eval_2d(desc, y, x)));
                }
        } else {
            for (double x : grid) CHECK(std::isfinite(kernel_eval_1d(desc, x)));
        }
    }
}

TEST_CASE("self-reciprocal kernels have the right parity") {
    for (KernelId id : {KernelId::Src1, KernelId::Src2, KernelId::Src3, KernelId::Src4,
                        KernelId::Src5}) {
        auto d = make_kernel(id);
        for (double x : {0.3, 1.1, 4.0})
            CHECK(kernel_eval_1d(d, -x) == doctest::Approx(kernel_eval_1d(d, x)));
    }
    for (KernelId id : {KernelId::Srs1, KernelId::Srs2, KernelId::Srs3, KernelId::Srs4}) {
        auto d = make_kernel(id);
        for (double x : {0.3, 1.1, 4.0})
            CHECK(kernel_eval_1d(d, -x) == doctest::Approx(-kernel_eval_1d(d, x)));
    }
    // the defining formulas agree with the stable evaluators
    auto src2 = make_kernel(KernelId::Src2);
    double x = 1.7;
    CHECK(kernel_eval_1d(src2, x) ==
          doctest::Approx(std::cosh(std::sqrt(kPi) * x / 2.0) / std::cosh(std::sqrt(kPi) * x)));
    auto srs4 = make_kernel(KernelId::Srs4);
    CHECK(kernel_eval_1d(srs4, x) ==
          doctest::Approx(std::sinh(std::sqrt(kPi) * x) /
                          (std::cosh(std::sqrt(2.0 * kPi) * x) -
                           std::cos(std::sqrt(2.0) * kPi))));
}

TEST_CASE("kernel parameter validation happens at construction") {
    CHECK_THROWS_AS(make_kernel(KernelId::KI1), DomainError);
    CHECK_THROWS_AS(make_kernel(KernelId::KFBeta, {{"beta", 1.0}, {"theta", 4.0}}), DomainError);
    CHECK_THROWS_AS(make_kernel(KernelId::Khr1, {{"alpha", -1.0}}), DomainError);
    CHECK_THROWS_AS(make_kernel(KernelId::CoshRatioCos, {{"alpha", 3.5}}), DomainError);
    auto d = make_kernel(KernelId::Src1);
    CHECK_THROWS_AS(kernel_eval_2d(d, 1.0, 1.0), DomainError);
    auto d2 = make_kernel(KernelId::K2dCos1);
    CHECK_THROWS_AS(kernel_eval_1d(d2, 1.0), DomainError);
}

TEST_CASE("agm: fixed points, recurrence, quadratic convergence") {
    CHECK(agm(1.0, 1.0) == doctest::Approx(1.0));
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> logu(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        double a = std::pow(10.0, logu(rng)), b = std::pow(10.0, logu(rng));
        int iters = 0;
        double m = agm(a, b, &iters);
        CHECK(iters <= 8);
        CHECK(m == doctest::Approx(agm(0.5 * (a + b), std::sqrt(a * b))));
    }
    // agm(1, k') = pi/(2K) at k = 1/sqrt(2), K = Gamma(1/4)^2/(4 sqrt(pi))
    double k = 1.0 / std::sqrt(2.0);
    double K = elliptic_K(k);
    CHECK(std::abs(K - 1.8540746773013719) < 1e-13);
    CHECK(agm(1.0, k) == doctest::Approx(kPi / (2.0 * K)).epsilon(1e-14));
}

TEST_CASE("elliptic integrals against quadrature oracle and Legendre relation") {
    CHECK(std::abs(elliptic_K(1e-8) - kPi / 2.0) < 1e-12);
    CHECK(std::abs(elliptic_E(1e-8) - kPi / 2.0) < 1e-12);
    CHECK(std::abs(elliptic_K(1.0 / std::sqrt(2.0)) -
                   elliptic_K_oracle(1.0 / std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(elliptic_K(0.3) - elliptic_K_oracle(0.3)) < 1e-12);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ku(0.02, 0.98);
    for (int i = 0; i < 20; ++i) {
        double k = ku(rng);
        auto v = elliptic_values(k);
        CHECK(std::abs(v.k * v.k + v.k_prime * v.k_prime - 1.0) < 1e-14);
        CHECK(std::abs(v.E * v.K_prime + v.E_prime * v.K - v.K * v.K_prime - kPi / 2.0) < 1e-12);
        CHECK(std::abs(v.q - std::exp(-kPi * v.alpha_ratio)) == 0.0);
    }
    CHECK_THROWS_AS(elliptic_K(0.0), DomainError);
    CHECK_THROWS_AS(elliptic_K(1.0), DomainError);
    CHECK_THROWS_AS(elliptic_E(-0.5), DomainError);
}

TEST_CASE("modulus recovery matches the theta-quotient oracle") {
    for (double alpha : {0.6, 1.0, 2.0, 3.5}) {
        double k = modulus_from_alpha(alpha);
        CHECK(std::abs(k - modulus_oracle(alpha)) < 1e-12);
    }
    CHECK(std::abs(modulus_from_alpha(1.0) - 1.0 / std::sqrt(2.0)) < 1e-13);
}

TEST_CASE("sech series equals K recovered from the nome") {
    auto [s1, k1] = series_K_check(1.0);
    CHECK(std::abs(s1 - elliptic_K(1.0 / std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(s1 - k1) < 1e-10);
    auto [s2, k2] = series_K_check(2.0);
    CHECK(std::abs(s2 - k2) < 1e-10);
    double prev = 1e300;
    for (double a : {0.5, 0.8, 1.0, 1.7, 2.5}) {
        double s = series_K_check(a).first;
        CHECK(s < prev);
        prev = s;
    }
}

TEST_CASE("quarter-period dn value from its theta series") {
    auto [lhs, rhs] = dn_quarter_check(1.0 / std::sqrt(2.0));
    CHECK(rhs == doctest::Approx(1.3065629648763766).epsilon(1e-14));
    CHECK(std::abs(lhs - rhs) < 1e-10);
    auto [l0, r0] = dn_quarter_check(1e-5);
    CHECK(std::abs(l0 - 1.0) < 1e-4);
    CHECK(std::abs(r0 - 1.0) < 1e-4);
    auto [l6, r6] = dn_quarter_check(0.6);
    CHECK(std::abs(l6 - r6) < 1e-10);
}

TEST_CASE("bessel values against reference points") {
    CHECK(bessel_j0(0.0) == doctest::Approx(1.0));
    CHECK(std::abs(bessel_j0(1.0) - 0.7651976865579666) < 1e-12);
    CHECK(std::abs(bessel_j0(2.0) - 0.22389077914123567) < 1e-12);
    CHECK(std::abs(bessel_j0(5.0) - (-0.17759677131433830)) < 1e-12);
    CHECK(std::abs(bessel_j0(10.0) - (-0.24593576445134835)) < 1e-12);
    CHECK(std::abs(bessel_y0(1.0) - 0.08825696421567696) < 1e-12);
    CHECK(std::abs(bessel_y0(2.0) - 0.51037567264974512) < 1e-12);
    CHECK(std::abs(bessel_y0(5.0) - (-0.30851762524903376)) < 1e-12);
    CHECK(std::abs(bessel_y0(10.0) - 0.055671167283599395) < 1e-11);
    CHECK(std::abs(bessel_k0(0.5) - 0.92441907122766586) < 1e-12);
    CHECK(std::abs(bessel_k0(1.0) - 0.42102443824070834) < 1e-12);
    CHECK(std::abs(bessel_k0(2.0) - 0.11389387274953344) < 1e-12);
    CHECK(std::abs(bessel_k0(5.0) - 0.0036910983340425947) < 1e-13);
    CHECK_THROWS_AS(bessel_y0(0.0), DomainError);
    CHECK_THROWS_AS(bessel_k0(-1.0), DomainError);
}

TEST_CASE("bessel regimes agree at their crossover points") {
    CHECK(std::abs(detail::j0_series(8.0) - detail::j0_integral(8.0)) <= 1e-11);
    CHECK(std::abs(detail::y0_series(8.0) - detail::y0_large(8.0)) <= 1e-11);
    CHECK(std::abs(detail::k0_series(2.0) - detail::k0_integral(2.0)) <= 1e-11);
}

TEST_CASE("k0 against the independent trapezoid oracle") {
    // dense trapezoid on the cosh integral representation, fixed grid
    auto oracle = [](double x) {
        const long n = 400000;
        const double cut = 40.0;
        double h = cut / n;
        double sum = 0.5 * (std::exp(-x) + 0.0);
        for (long i = 1; i < n; ++i) sum += std::exp(-x * std::cosh(i * h));
        return sum * h;
    };
    CHECK(std::abs(bessel_k0(1.0) - oracle(1.0)) < 1e-10);
    CHECK(std::abs(bessel_k0(3.0) - oracle(3.0)) < 1e-10);
}
