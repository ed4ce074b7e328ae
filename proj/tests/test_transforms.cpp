#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "mordellkit/specfun.hpp"
#include "mordellkit/transforms.hpp"

using namespace mordellkit;
using namespace mordellkit::transforms;
namespace sf = mordellkit::specfun;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_CASE("gaussian is a fixed point of the cosine transform") {
    quad::Integrand1D g;
    g.eval = [](double x) { return std::exp(-0.5 * x * x); };
    g.decay = {0.5, quad::DecayKind::Gaussian};
    double t = 1.3;
    CHECK(std::abs(fourier_1d(g, Kind::Cosine, t, 1e-11) - std::exp(-0.5 * t * t)) < 1e-10);
    std::vector<double> grid = {0.0, 0.5, 1.0, 2.0, 4.0};
    double worst = 0.0;
    for (double u : grid)
        worst = std::max(worst,
                         std::abs(fourier_1d(g, Kind::Cosine, u, 1e-11) - std::exp(-0.5 * u * u)));
    CHECK(worst < 1e-10);
}

TEST_CASE("catalog kernels transform onto themselves pointwise") {
    auto src1 = sf::make_kernel(sf::KernelId::Src1);
    CHECK(std::abs(fourier_1d(src1, Kind::Cosine, 0.7, 1e-10) -
                   sf::kernel_eval_1d(src1, 0.7)) < 1e-9);
    auto srs1 = sf::make_kernel(sf::KernelId::Srs1);
    CHECK(std::abs(fourier_1d(srs1, Kind::Sine, 1.1, 1e-10) -
                   sf::kernel_eval_1d(srs1, 1.1)) < 1e-9);
}

TEST_CASE("all nine catalog kernels are self-reciprocal on the default grid") {
    for (sf::KernelId id :
         {sf::KernelId::Src1, sf::KernelId::Src2, sf::KernelId::Src3, sf::KernelId::Src4,
          sf::KernelId::Src5, sf::KernelId::Srs1, sf::KernelId::Srs2, sf::KernelId::Srs3,
          sf::KernelId::Srs4}) {
        auto k = sf::make_kernel(id);
        double res = self_reciprocity_residual(k, sr_kind(id), default_residual_grid(), 1e-10);
        CAPTURE(sf::kernel_name(id));
        CHECK(res < 1e-8);
    }
}

TEST_CASE("2D transforms against closed forms") {
    auto cos1 = sf::make_kernel(sf::KernelId::K2dCos1);
    double v = fourier_2d(cos1, Kind::CosCos, 0.4, 0.9, 1e-8);
    double ref = 1.0 / (std::cosh(kSqrtPi * 0.4) + std::cosh(kSqrtPi * 0.9));
    CHECK(std::abs(v - ref) < 1e-7);

    auto f1 = sf::make_kernel(sf::KernelId::K2dF1);
    double w = fourier_2d(f1, Kind::CosCos, 0.5, 0.5, 1e-8);
    double c = std::sqrt(kPi / 2.0);
    CHECK(std::abs(w - std::sin(0.25) / (std::sinh(0.5 * c) * std::sinh(0.5 * c))) < 1e-7);

    // at the origin both sides sit on the same 0/0 limit, value 1/pi
    auto sinsin = sf::make_kernel(sf::KernelId::K2dSinSin);
    CHECK(std::abs(fourier_2d(sinsin, Kind::CosCos, 0.0, 0.0, 1e-8) - 1.0 / kPi) < 1e-7);
    CHECK(sf::kernel_eval_2d(sinsin, 0.0, 0.0) == doctest::Approx(1.0 / kPi));
}

TEST_CASE("partial transform of a symmetric kernel is symmetric") {
    auto cos1 = sf::make_kernel(sf::KernelId::K2dCos1);
    std::vector<std::pair<double, double>> pts = {{0.3, 1.1}};
    CHECK(partial_transform_symmetry_check(cos1, pts, 1e-10) < 1e-8);
    std::vector<std::pair<double, double>> diag = {{0.7, 0.7}};
    CHECK(partial_transform_symmetry_check(cos1, diag, 1e-10) == 0.0);

    // the sinsin kernel's partial transform has the 3.981.8 closed form
    auto sinsin = sf::make_kernel(sf::KernelId::K2dSinSin);
    double a = 0.2, y = 0.9;
    quad::Integrand1D slice;
    slice.decay = {kSqrtPi, quad::DecayKind::Exponential, 2.0};
    slice.eval = [&](double x) { return sf::kernel_eval_2d(sinsin, x, y); };
    double g = fourier_1d(slice, Kind::Cosine, a, 1e-11);
    double closed = std::sqrt(2.0 / kPi) * 0.5 * kSqrtPi * std::sinh(kSqrtPi * y) /
                    ((std::cosh(kSqrtPi * y) + std::cosh(kSqrtPi * a)) *
                     std::sinh(kSqrtPi * y));
    CHECK(std::abs(g - closed) < 1e-8);
    std::vector<std::pair<double, double>> pts2 = {{0.2, 0.9}};
    CHECK(partial_transform_symmetry_check(sinsin, pts2, 1e-10) < 1e-8);
}

TEST_CASE("transform applied twice is the identity") {
    // f = sech(x), transform sqrt(pi/2) sech(pi t/2): both evaluated by quadrature
    quad::Integrand1D f;
    f.eval = [](double x) { return 1.0 / std::cosh(x); };
    f.decay = {1.0, quad::DecayKind::Exponential, 2.0};
    const double tol = 1e-9;
    for (double t : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        quad::Integrand1D once;
        once.decay = {kPi / 2.0, quad::DecayKind::Exponential, 2.0};
        once.eval = [&f, tol](double u) {
            if (u > 45.0) return 0.0;  // below double precision, skip the inner quadrature
            return fourier_1d(f, Kind::Cosine, u, 0.01 * tol);
        };
        double twice = fourier_1d(once, Kind::Cosine, t, tol);
        CHECK(std::abs(twice - f.eval(t)) <= 10.0 * tol);
    }
}

TEST_CASE("2D transform of a factorizable kernel is the product of 1D transforms") {
    quad::Integrand2D f;
    f.eval = [](double x, double y) { return std::exp(-x * x) / std::cosh(y); };
    f.decay_x = {1.0, quad::DecayKind::Gaussian};
    f.decay_y = {1.0, quad::DecayKind::Exponential, 2.0};
    double v2 = fourier_2d(f, Kind::CosCos, 0.7, 1.2, 1e-9);
    quad::Integrand1D gx{[](double x) { return std::exp(-x * x); },
                         {1.0, quad::DecayKind::Gaussian}, 0.0};
    quad::Integrand1D gy{[](double y) { return 1.0 / std::cosh(y); },
                         {1.0, quad::DecayKind::Exponential, 2.0}, 0.0};
    double v1 = fourier_1d(gx, Kind::Cosine, 0.7, 1e-10) * fourier_1d(gy, Kind::Cosine, 1.2, 1e-10);
    CHECK(std::abs(v2 - v1) < 1e-8);
}

TEST_CASE("kind and argument guards") {
    auto src1 = sf::make_kernel(sf::KernelId::Src1);
    CHECK_THROWS_AS(fourier_1d(src1, Kind::CosCos, 1.0, 1e-9), DomainError);
    CHECK_THROWS_AS(fourier_2d(sf::make_kernel(sf::KernelId::K2dCos1), Kind::Cosine, 1.0, 1.0,
                               1e-8),
                    DomainError);
    CHECK_THROWS_AS(sr_kind(sf::KernelId::Khr1), DomainError);
    std::vector<double> empty;
    CHECK_THROWS_AS(self_reciprocity_residual(src1, Kind::Cosine, empty, 1e-9), DomainError);
}
