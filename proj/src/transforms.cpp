#include "mordellkit/transforms.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace mordellkit::transforms {

namespace {

constexpr double kPi = std::numbers::pi;
const double kNorm1d = std::sqrt(2.0 / kPi);

constexpr std::array<double, 6> kDefaultGrid = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0};

double clamp_tol(double tol) { return std::max(tol, 1e-13); }

}  // namespace

Kind sr_kind(specfun::KernelId id) {
    using specfun::KernelId;
    switch (id) {
        case KernelId::Src1:
        case KernelId::Src2:
        case KernelId::Src3:
        case KernelId::Src4:
        case KernelId::Src5:
            return Kind::Cosine;
        case KernelId::Srs1:
        case KernelId::Srs2:
        case KernelId::Srs3:
        case KernelId::Srs4:
            return Kind::Sine;
        case KernelId::K2dCos1:
        case KernelId::K2dSinSin:
            return Kind::CosCos;
        case KernelId::K2dOneMinusCos:
            return Kind::SinSin;
        default:
            throw DomainError("kernel is not in the self-reciprocal catalog");
    }
}

std::span<const double> default_residual_grid() { return kDefaultGrid; }

double fourier_1d(const quad::Integrand1D& f, Kind kind, double t, double tol) {
    if (kind != Kind::Cosine && kind != Kind::Sine)
        throw DomainError("fourier_1d takes a 1D transform kind");
    if (!(t >= 0.0)) throw DomainError("transform target must be non-negative");
    quad::Integrand1D g;
    g.decay = f.decay;
    g.osc_frequency = f.osc_frequency + t;
    const bool cosine = kind == Kind::Cosine;
    g.eval = [&f, t, cosine](double x) {
        double w = cosine ? std::cos(t * x) : std::sin(t * x);
        return f.eval(x) * w;
    };
    return kNorm1d * quad::integrate_semi_infinite(g, clamp_tol(tol)).value;
}

double fourier_1d(const specfun::KernelDescriptor& f, Kind kind, double t, double tol) {
    quad::Integrand1D g;
    g.decay = specfun::kernel_decay_1d(f);
    g.osc_frequency = specfun::kernel_osc_frequency(f);
    g.eval = [f](double x) { return specfun::kernel_eval_1d(f, x); };
    return fourier_1d(g, kind, t, tol);
}

double fourier_2d(const quad::Integrand2D& f, Kind kind, double t, double s, double tol) {
    if (kind != Kind::CosCos && kind != Kind::SinSin)
        throw DomainError("fourier_2d takes a 2D transform kind");
    if (!(t >= 0.0) || !(s >= 0.0)) throw DomainError("transform targets must be non-negative");
    quad::Integrand2D g;
    g.decay_x = f.decay_x;
    g.decay_y = f.decay_y;
    g.osc_frequency = f.osc_frequency + t + s;
    const bool cosine = kind == Kind::CosCos;
    g.eval = [&f, t, s, cosine](double x, double y) {
        double w = cosine ? std::cos(t * x) * std::cos(s * y) : std::sin(t * x) * std::sin(s * y);
        return f.eval(x, y) * w;
    };
    return 2.0 / kPi * quad::integrate_quadrant(g, std::max(tol, 1e-10)).value;
}

double fourier_2d(const specfun::KernelDescriptor& f, Kind kind, double t, double s, double tol) {
    quad::Integrand2D g;
    auto [dx, dy] = specfun::kernel_decay_2d(f);
    g.decay_x = dx;
    g.decay_y = dy;
    g.osc_frequency = specfun::kernel_osc_frequency(f);
    g.eval = [f](double x, double y) { return specfun::kernel_eval_2d(f, x, y); };
    return fourier_2d(g, kind, t, s, tol);
}

double self_reciprocity_residual(const specfun::KernelDescriptor& f, Kind kind,
                                 std::span<const double> grid, double tol) {
    if (grid.empty()) throw DomainError("residual grid must be non-empty");
    double worst = 0.0;
    for (double t : grid) {
        if (!(t >= 0.0)) throw DomainError("residual grid entries must be non-negative");
        double transformed;
        double direct;
        if (specfun::kernel_is_2d(f.id)) {
            transformed = fourier_2d(f, kind, t, t, tol);
            direct = specfun::kernel_eval_2d(f, t, t);
        } else {
            transformed = fourier_1d(f, kind, t, tol);
            direct = specfun::kernel_eval_1d(f, t);
        }
        worst = std::max(worst, std::abs(transformed - direct));
    }
    return worst;
}

double partial_transform_symmetry_check(const specfun::KernelDescriptor& f,
                                        std::span<const std::pair<double, double>> pairs,
                                        double tol) {
    if (!specfun::kernel_is_2d(f.id)) throw DomainError("partial transform needs a 2D kernel");
    auto [dx, dy] = specfun::kernel_decay_2d(f);
    double base_osc = specfun::kernel_osc_frequency(f);
    auto partial = [&](double a, double y) {
        quad::Integrand1D slice;
        slice.decay = dx;
        slice.osc_frequency = base_osc + a + y;
        slice.eval = [&f, y](double x) { return specfun::kernel_eval_2d(f, x, y); };
        return fourier_1d(slice, Kind::Cosine, a, tol);
    };
    double worst = 0.0;
    for (auto [a, y] : pairs) {
        if (!(a >= 0.0) || !(y >= 0.0)) throw DomainError("probe points must be non-negative");
        worst = std::max(worst, std::abs(partial(a, y) - partial(y, a)));
    }
    return worst;
}

}  // namespace mordellkit::transforms
