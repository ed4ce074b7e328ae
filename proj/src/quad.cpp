#include "mordellkit/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "mordellkit/detail/kahan.hpp"

namespace mordellkit::quad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Half-width of the double-exponential node window in the transformed
// variable. Weights at |t| = 5 are far below double precision for every
// integrand with the declared decay.
constexpr double kWindow = 5.0;
constexpr double kBaseH = 0.5;

void check_decay(const Decay& d) {
    if (!(d.rate > 0.0) || !std::isfinite(d.rate))
        throw InvalidDecay("decay rate must be positive and finite");
    if (d.kind == DecayKind::Exponential && d.growth != 0.0)
        throw InvalidDecay("growth term is only meaningful under Gaussian decay");
    if (!(d.amplitude > 0.0) || !std::isfinite(d.amplitude))
        throw InvalidDecay("decay amplitude must be positive and finite");
}

void check_tol(double tol, double floor) {
    if (!(tol >= floor))
        throw DomainError("tolerance below supported floor");
}

int max_level_for(double osc_frequency) { return osc_frequency > 10.0 ? 12 : 10; }

struct NodeTerm {
    double abscissa;
    double weight;
    bool usable;
};

// Shared nested-trapezoid driver over a transformed axis. node(t) yields the
// abscissa/weight pair; the caller guarantees weights decay doubly
// exponentially toward the window ends.
template <typename NodeFn>
QuadResult de_trapezoid(const std::function<double(double)>& f, NodeFn&& node, double tol,
                        int max_level) {
    std::int64_t evals = 0;
    double max_term = 0.0;

    auto term_at = [&](double t) -> double {
        NodeTerm n = node(t);
        if (!n.usable || n.weight == 0.0) return 0.0;
        double fx = f(n.abscissa);
        ++evals;
        if (!std::isfinite(fx)) throw DomainError("integrand not finite inside the domain");
        double term = fx * n.weight;
        max_term = std::max(max_term, std::abs(term));
        return term;
    };

    // One side of the node ladder starting at |t| = start, step h. Stops after
    // several consecutive negligible terms once past the central region.
    auto sweep_side = [&](detail::Kahan& acc, double start, double step, double sign) {
        int quiet = 0;
        for (double t = start; t <= kWindow; t += step) {
            double term = term_at(sign * t);
            acc.add(term);
            if (t > 1.5 && std::abs(term) < 1e-17 * max_term) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
    };

    double h = kBaseH;
    detail::Kahan sum;
    sum.add(term_at(0.0));
    sweep_side(sum, h, h, +1.0);
    sweep_side(sum, h, h, -1.0);

    double value = h * sum.value();
    double est = std::numeric_limits<double>::infinity();

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        detail::Kahan mid;
        sweep_side(mid, h, 2.0 * h, +1.0);
        sweep_side(mid, h, 2.0 * h, -1.0);
        sum.add(mid.value());
        double refined = h * sum.value();
        est = std::abs(refined - value);
        value = refined;
        double floor_est = 4.0 * kEps * std::abs(value);
        if (level >= 3 && (est <= tol || est <= floor_est)) {
            return {value, std::max(est, floor_est), evals};
        }
    }
    throw NonConvergence("refinement limit reached with estimate above tolerance");
}

// exp-sinh map for (0, inf): x = exp(L sinh t).
QuadResult exp_sinh(const Integrand1D& f, double tol) {
    constexpr double L = kPi / 2.0;
    auto node = [](double t) -> NodeTerm {
        double u = L * std::sinh(t);
        if (u > 700.0) return {0.0, 0.0, false};  // abscissa overflow; weight irrelevant
        double x = std::exp(u);
        double w = L * std::cosh(t) * x;
        return {x, w, w > 0.0 && std::isfinite(w)};
    };
    return de_trapezoid(f.eval, node, tol, max_level_for(f.osc_frequency));
}

// tanh-sinh map for [a, b], with abscissae computed as offsets from the
// nearer endpoint so that endpoint neighborhoods stay resolved.
QuadResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                     int max_level) {
    constexpr double L = kPi / 2.0;
    const double d = 0.5 * (b - a);
    auto node = [&](double t) -> NodeTerm {
        double u = L * std::sinh(t);
        double g = std::exp(-2.0 * std::abs(u));
        double offset = 2.0 * d * g / (1.0 + g);  // distance from the nearer endpoint
        if (offset == 0.0) return {0.0, 0.0, false};
        double x = (u >= 0.0) ? b - offset : a + offset;
        double sech2 = 4.0 * g / ((1.0 + g) * (1.0 + g));
        double w = d * L * std::cosh(t) * sech2;
        return {x, w, w > 0.0 && std::isfinite(w)};
    };
    return de_trapezoid(f, node, tol, max_level);
}

}  // namespace

double truncation_cutoff(double decay_rate, DecayKind kind, double tol) {
    Decay d{decay_rate, kind, 1.0, 0.0};
    return truncation_cutoff(d, tol);
}

double truncation_cutoff(const Decay& decay, double tol) {
    check_decay(decay);
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    const double c = decay.rate;
    // Unit-amplitude tail target: envelope tail past X <= tol/10.
    double target = std::log(10.0 * decay.amplitude / (c * tol));
    if (decay.kind == DecayKind::Exponential) {
        // int_X^inf e^{-cx} dx = e^{-cX}/c
        return target > 0.0 ? target / c : 0.0;
    }
    // int_X^inf e^{gx - cx^2} dx <= e^{gX - cX^2}/(2cX - g) for X past the peak;
    // solve cX^2 - gX = target, which keeps the bound under tol/10 once X >= 1/2.
    if (target <= 0.0) return 0.0;
    double g = decay.growth;
    double x = (g + std::sqrt(g * g + 4.0 * c * target)) / (2.0 * c);
    return std::max(x, 0.5);
}

QuadResult integrate_semi_infinite(const Integrand1D& f, double tol) {
    check_tol(tol, 1e-13);
    check_decay(f.decay);
    if (!f.eval) throw DomainError("integrand has no evaluator");
    if (f.decay.kind == DecayKind::Exponential) return exp_sinh(f, tol);
    double X = truncation_cutoff(f.decay, tol);
    if (X == 0.0) X = 1.0;
    return tanh_sinh(f.eval, 0.0, X, tol, max_level_for(f.osc_frequency));
}

QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            double tol, int max_level) {
    check_tol(tol, 1e-14);
    if (!(a < b)) throw DomainError("integrate_finite requires a < b");
    return tanh_sinh(f, a, b, tol, max_level);
}

QuadResult integrate_quadrant(const Integrand2D& f, double tol) {
    check_tol(tol, 1e-10);
    check_decay(f.decay_x);
    check_decay(f.decay_y);
    if (!f.eval) throw DomainError("integrand has no evaluator");

    const double width = std::max(1.0, truncation_cutoff(f.decay_x, tol));
    const double inner_tol = std::max(1e-13, tol / (2.0 * width));
    std::int64_t inner_evals = 0;

    Integrand1D outer;
    outer.decay = f.decay_x;
    outer.osc_frequency = f.osc_frequency;
    outer.eval = [&](double x) {
        Integrand1D slice;
        slice.decay = f.decay_y;
        slice.osc_frequency = f.osc_frequency;
        slice.eval = [&f, x](double y) { return f.eval(x, y); };
        QuadResult inner = integrate_semi_infinite(slice, inner_tol);
        inner_evals += inner.evaluations;
        return inner.value;
    };

    QuadResult out = integrate_semi_infinite(outer, 0.5 * tol);
    return {out.value, out.abs_error_estimate + 0.5 * tol, inner_evals};
}

double fresnel_gauss(Trig trig, double omega, double eps) {
    if (!(omega > 0.0) || eps < 0.0) throw DomainError("fresnel_gauss needs omega > 0, eps >= 0");
    std::complex<double> s(eps, -omega);
    std::complex<double> v = 0.5 * std::sqrt(kPi / s);
    return trig == Trig::Cos ? v.real() : v.imag();
}

namespace {

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 8> kGLx = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGLw = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

}  // namespace

QuadResult integrate_quadratic_phase(const std::function<double(double)>& h, Trig trig,
                                     double omega, double eps, double tol,
                                     double max_linear_freq) {
    if (!(omega > 0.0)) throw DomainError("quadratic phase frequency must be positive");
    if (!(eps > 0.0)) throw DomainError("direct quadratic-phase rule needs eps > 0");
    check_tol(tol, 1e-14);

    const double X = truncation_cutoff(eps, DecayKind::Gaussian, tol);
    const double dv_gauss = 0.5 / std::sqrt(eps);
    const double dv_lin = max_linear_freq > 0.0 ? kPi / max_linear_freq : X;

    auto integrand = [&](double v) {
        double phase = omega * v * v;
        double osc = trig == Trig::Cos ? std::cos(phase) : std::sin(phase);
        return h(v) * osc * std::exp(-eps * v * v);
    };

    detail::Kahan acc;
    detail::Kahan magnitude;
    std::int64_t evals = 0;
    double v = 0.0;
    while (v < X) {
        // Half-period phase panels; extra caps keep the Gaussian and any
        // linear-phase factors resolved by the 16-point rule.
        double dv_phase = std::sqrt(v * v + kPi / omega) - v;
        double dv = std::min({dv_phase, dv_gauss, dv_lin, X - v});
        double c = v + 0.5 * dv, half = 0.5 * dv;
        double panel = 0.0;
        for (std::size_t i = 0; i < kGLx.size(); ++i) {
            panel += kGLw[i] * (integrand(c - half * kGLx[i]) + integrand(c + half * kGLx[i]));
            evals += 2;
        }
        panel *= half;
        acc.add(panel);
        magnitude.add(std::abs(panel));
        v += dv;
    }
    double est = std::max(0.1 * tol, 4.0 * kEps * magnitude.value());
    return {acc.value(), est, evals};
}

double extrapolate_to_zero(std::span<const double> eps, std::span<const double> values,
                           double* err_estimate) {
    if (eps.size() != values.size() || eps.empty())
        throw DomainError("extrapolation needs matching non-empty samples");
    std::vector<double> t(values.begin(), values.end());
    double result = t[0];
    double correction = 0.0;
    for (std::size_t k = 1; k < t.size(); ++k) {
        for (std::size_t i = 0; i + k < t.size(); ++i) {
            // Neville step for the polynomial through (eps_i..eps_{i+k}) at 0.
            t[i] = t[i + 1] + (t[i + 1] - t[i]) * eps[i + k] / (eps[i] - eps[i + k]);
        }
        correction = std::abs(t[0] - result);
        result = t[0];
    }
    if (err_estimate) *err_estimate = correction;
    return result;
}

QuadResult integrate_settled(const OscillatorySettled& f, double eps, double tol) {
    if (!(f.omega > 0.0)) throw DomainError("settled integrand needs omega > 0");
    if (!(f.remainder_decay_rate > 0.0)) throw InvalidDecay("remainder decay must be positive");

    double head = f.limit == 0.0 ? 0.0 : f.limit * fresnel_gauss(f.trig, f.omega, eps);

    Integrand1D rem;
    rem.decay = {f.remainder_decay_rate, DecayKind::Exponential, 1.0, 0.0};
    double cutoff = truncation_cutoff(rem.decay, tol);
    rem.osc_frequency = 2.0 * f.omega * cutoff;
    rem.eval = [&f, eps](double v) {
        double phase = f.omega * v * v;
        double osc = f.trig == Trig::Cos ? std::cos(phase) : std::sin(phase);
        return (f.h(v) - f.limit) * osc * std::exp(-eps * v * v);
    };
    QuadResult tail = integrate_semi_infinite(rem, tol);
    return {head + tail.value, tail.abs_error_estimate, tail.evaluations};
}

namespace {

QuadResult run_ladder(const std::function<QuadResult(double)>& member,
                      std::span<const double> ladder) {
    if (ladder.empty()) throw DomainError("empty regularization ladder");
    std::vector<double> vals;
    vals.reserve(ladder.size());
    double member_est = 0.0;
    std::int64_t evals = 0;
    for (double eps : ladder) {
        QuadResult r = member(eps);
        vals.push_back(r.value);
        member_est = std::max(member_est, r.abs_error_estimate);
        evals += r.evaluations;
    }
    double extrap_err = 0.0;
    double value = extrapolate_to_zero(ladder, vals, &extrap_err);
    return {value, extrap_err + member_est, evals};
}

constexpr std::array<double, 8> kGeometricLadder = {0.2,    0.1,     0.05,     0.025,
                                                    0.0125, 0.00625, 0.003125, 0.0015625};
constexpr std::array<double, 3> kFineLadder = {1e-3, 1e-4, 1e-5};

}  // namespace

std::span<const double> geometric_eps_ladder() { return kGeometricLadder; }
std::span<const double> fine_eps_ladder() { return kFineLadder; }

QuadResult regularized_settled(const OscillatorySettled& f, std::span<const double> eps_ladder,
                               double tol) {
    return run_ladder([&](double eps) { return integrate_settled(f, eps, tol); }, eps_ladder);
}

QuadResult regularized_quadratic_phase(const std::function<double(double)>& h, Trig trig,
                                       double omega, std::span<const double> eps_ladder,
                                       double tol, double max_linear_freq) {
    return run_ladder(
        [&](double eps) {
            return integrate_quadratic_phase(h, trig, omega, eps, tol, max_linear_freq);
        },
        eps_ladder);
}

}  // namespace mordellkit::quad
