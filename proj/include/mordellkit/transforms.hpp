#pragma once

#include <span>
#include <utility>

#include "mordellkit/quad.hpp"
#include "mordellkit/specfun.hpp"

namespace mordellkit::transforms {

enum class Kind {
    Cosine,  // sqrt(2/pi) int f(x) cos(tx) dx
    Sine,    // sqrt(2/pi) int f(x) sin(tx) dx
    CosCos,  // (2/pi) int int f(x,y) cos(tx) cos(sy) dx dy
    SinSin,  // (2/pi) int int f(x,y) sin(tx) sin(sy) dx dy
};

// Transform kind under which a catalog kernel reproduces itself. Throws
// DomainError for kernels that are not self-reciprocal.
Kind sr_kind(specfun::KernelId id);

double fourier_1d(const quad::Integrand1D& f, Kind kind, double t, double tol);
double fourier_1d(const specfun::KernelDescriptor& f, Kind kind, double t, double tol);

double fourier_2d(const quad::Integrand2D& f, Kind kind, double t, double s, double tol);
double fourier_2d(const specfun::KernelDescriptor& f, Kind kind, double t, double s, double tol);

// max over the grid of |transform(f)(t) - f(t)|
double self_reciprocity_residual(const specfun::KernelDescriptor& f, Kind kind,
                                 std::span<const double> grid, double tol);
std::span<const double> default_residual_grid();  // {0, 0.25, 0.5, 1, 2, 4}

// For a symmetric 2D kernel: max over pairs of |g(a,y) - g(y,a)| with
// g(a,y) = sqrt(2/pi) int f(x,y) cos(ax) dx.
double partial_transform_symmetry_check(const specfun::KernelDescriptor& f,
                                        std::span<const std::pair<double, double>> pairs,
                                        double tol);

}  // namespace mordellkit::transforms
