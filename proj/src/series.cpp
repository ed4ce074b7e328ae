#include "mordellkit/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "mordellkit/detail/kahan.hpp"
#include "mordellkit/transforms.hpp"

namespace mordellkit::series {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long long kTermCap = 1000000;

using mordellkit::detail::Kahan;

void check_decay_rate(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate))
        throw InvalidDecay("series decay rate must be positive and finite");
}

// cosh(a)/sinh(b) for b > 0, stable for large arguments.
double cosh_sinh_ratio(double a, double b) {
    if (a < 350.0 && b < 350.0) return std::cosh(a) / std::sinh(b);
    return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) / (1.0 - std::exp(-2.0 * b));
}

// One-sided sum_{n>=1} term(n) for exponentially decaying terms.
template <typename F>
double one_sided(F&& term, double rate, long long* used = nullptr) {
    check_decay_rate(rate);
    const double r = std::exp(-std::min(rate, 700.0));
    const double geo = r / (1.0 - r);
    Kahan acc;
    double recent = 0.0;
    for (long long n = 1; n <= kTermCap; ++n) {
        double t = term(n);
        acc.add(t);
        recent = std::max(std::abs(t), 0.5 * recent);
        if (n >= 4 && recent * geo < 1e-16 * (std::abs(acc.value()) + 1e-300)) {
            if (used) *used += n;
            return acc.value();
        }
    }
    throw NonConvergence("one-sided series cap exceeded");
}

// Bilateral sum of an even combination via term(n) + term(-n).
template <typename F>
double bilateral(F&& term, double rate, long long* used = nullptr) {
    check_decay_rate(rate);
    const double r = std::exp(-std::min(rate, 700.0));
    const double geo = r / (1.0 - r);
    Kahan acc;
    acc.add(term(0));
    double recent = 0.0;
    for (long long n = 1; n <= kTermCap; ++n) {
        double t = term(n) + term(-n);
        acc.add(t);
        recent = std::max(std::abs(t), 0.5 * recent);
        if (n >= 4 && recent * geo < 1e-16 * (std::abs(acc.value()) + 1e-300)) {
            if (used) *used += 2 * n + 1;
            return acc.value();
        }
    }
    throw NonConvergence("bilateral series cap exceeded");
}

}  // namespace

SeriesResult sum_bilateral(const SeriesTerm& t, double tol) {
    if (!t.term) throw DomainError("series has no term evaluator");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    check_decay_rate(t.decay_rate);
    const double r = std::exp(-std::min(t.decay_rate, 700.0));
    const double geo = r / (1.0 - r);
    Kahan acc;
    acc.add(t.term(0));
    double recent = 0.0;
    for (long long n = 1; n <= kTermCap; ++n) {
        double tp = t.term(n), tm = t.term(-n);
        acc.add(tp + tm);
        recent = std::max({std::abs(tp), std::abs(tm), 0.5 * recent});
        double bound = 2.0 * recent * geo;
        if (n >= 4 && bound <= tol) return {acc.value(), bound, 2 * n + 1};
    }
    throw NonConvergence("bilateral series cap exceeded before tolerance");
}

SeriesResult sum_character(const SeriesTerm& t, double tol) {
    if (!t.term) throw DomainError("series has no term evaluator");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    check_decay_rate(t.decay_rate);
    const double r = std::exp(-2.0 * std::min(t.decay_rate, 350.0));
    const double geo = r / (1.0 - r);
    Kahan acc;
    double recent = 0.0;
    std::int64_t used = 0;
    double sign = 1.0;
    for (long long n = 1; n <= kTermCap; n += 2) {
        double term = t.term(n);
        acc.add(sign * term);
        sign = -sign;
        ++used;
        recent = std::max(std::abs(term), 0.5 * recent);
        double bound = recent * geo;
        if (n >= 9 && bound <= tol) return {acc.value(), bound, used};
    }
    throw NonConvergence("character series cap exceeded before tolerance");
}

namespace detail {

double lerch_accelerated(double p, long long start, int window, int depth) {
    const double omega = std::sqrt(2.0) * kPi / p;
    const double shift = p / std::sqrt(2.0);
    auto pair_term = [&](long long n) {
        double s = std::sin(omega * n);
        return s / std::sqrt(n + shift) - s / std::sqrt(n - shift);
    };
    Kahan acc;  // n = 0 term vanishes
    for (long long n = 1; n < start; ++n) acc.add(pair_term(n));
    std::vector<double> partials;
    partials.reserve(window + 1);
    for (long long n = start; n <= start + window; ++n) {
        acc.add(pair_term(n));
        partials.push_back(acc.value());
    }
    for (int d = 0; d < depth; ++d) {
        for (std::size_t i = 0; i + 1 < partials.size(); ++i)
            partials[i] = 0.5 * (partials[i] + partials[i + 1]);
        partials.pop_back();
    }
    return partials.back();
}

}  // namespace detail

SeriesResult sum_lerch(double p, double tol) {
    const double lo = 1.0 / std::sqrt(2.0), hi = std::sqrt(2.0);
    if (!(p > lo && p < hi)) throw DomainError("lerch shift must lie in (1/sqrt(2), sqrt(2))");
    if (tol < 1e-5)
        throw NonConvergence("conditionally convergent sum: tolerances below 1e-5 unsupported");
    const long long start = 4000;
    const int window = 64;
    double v8 = detail::lerch_accelerated(p, start, window, 8);
    double v7 = detail::lerch_accelerated(p, start, window, 7);
    double v8b = detail::lerch_accelerated(p, start, window - 8, 8);
    double bound = 3.0 * (std::abs(v8 - v7) + std::abs(v8 - v8b)) + 1e-8;
    return {v8, bound, start + window};
}

SidePair poisson_check_1d(const specfun::KernelDescriptor& f, double alpha, double tol,
                          std::optional<double> beta) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const double constraint = 2.0 * kPi;
    double b = beta.value_or(constraint / alpha);
    if (std::abs(alpha * b - constraint) > 1e-12 * constraint)
        throw ConstraintViolation("poisson_check_1d requires alpha*beta = 2*pi");
    if (specfun::kernel_is_2d(f.id) || specfun::kernel_is_odd(f.id))
        throw DomainError("poisson_check_1d needs an even one-dimensional kernel");

    bool self_reciprocal = false;
    try {
        self_reciprocal = transforms::sr_kind(f.id) == transforms::Kind::Cosine;
    } catch (const DomainError&) {
        self_reciprocal = false;
    }

    auto direct = [&f](double x) { return specfun::kernel_eval_1d(f, x); };
    double rate = specfun::kernel_decay_1d(f).rate;

    long long used = 0;
    double lhs = std::sqrt(alpha) *
                 bilateral([&](long long n) { return direct(alpha * n); }, rate * alpha, &used);
    double rhs;
    if (self_reciprocal) {
        rhs = std::sqrt(b) *
              bilateral([&](long long n) { return direct(b * n); }, rate * b, &used);
    } else {
        double ttol = std::max(1e-12, 0.01 * tol);
        auto fc = [&](double x) { return transforms::fourier_1d(f, transforms::Kind::Cosine,
                                                                std::abs(x), ttol); };
        rhs = std::sqrt(b) *
              bilateral([&](long long n) { return fc(b * n); }, rate * b, &used);
    }
    return {lhs, rhs, used};
}

namespace detail {

double poisson_f1_rhs_term(double gamma, double delta, double m, double n) {
    const double c = std::sqrt(kPi / 2.0);
    const double tiny = 1e-9;
    if (std::abs(m) < tiny && std::abs(n) < tiny) return 2.0 / kPi;
    if (std::abs(n) < tiny) {
        double u = c * gamma * m;
        return std::sqrt(2.0 / kPi) * gamma * m / (u * specfun::sinhc(u));
    }
    if (std::abs(m) < tiny) {
        double u = c * delta * n;
        return std::sqrt(2.0 / kPi) * delta * n / (u * specfun::sinhc(u));
    }
    double a = c * gamma * m, bb = c * delta * n;
    return std::sin(gamma * delta * m * n) /
           ((a * specfun::sinhc(a)) * (bb * specfun::sinhc(bb)));
}

}  // namespace detail

SidePair poisson_f1_check(double alpha, double beta, double tol) {
    if (!(alpha > 0.0 && beta > 0.0)) throw DomainError("alpha, beta must be positive");
    (void)tol;
    const double c = std::sqrt(kPi / 2.0);
    const double gamma = 2.0 * kPi / alpha, delta = 2.0 * kPi / beta;

    long long used = 0;
    // cos/cosh side: 1 + 2A + 2B + 4C over the quadrant
    double A = one_sided([&](long long m) { return specfun::sech(c * alpha * m); }, c * alpha,
                         &used);
    double B = one_sided([&](long long n) { return specfun::sech(c * beta * n); }, c * beta,
                         &used);
    double C = one_sided(
        [&](long long m) {
            return one_sided(
                [&](long long n) {
                    return std::cos(alpha * beta * m * n) * specfun::sech(c * alpha * m) *
                           specfun::sech(c * beta * n);
                },
                c * beta, &used);
        },
        c * alpha, &used);
    double lhs = std::sqrt(alpha * beta) * (1.0 + 2.0 * A + 2.0 * B + 4.0 * C);

    double L = one_sided([&](long long m) { return detail::poisson_f1_rhs_term(gamma, delta,
                                                                               double(m), 0.0); },
                         c * gamma, &used);
    double M = one_sided([&](long long n) { return detail::poisson_f1_rhs_term(gamma, delta, 0.0,
                                                                               double(n)); },
                         c * delta, &used);
    double D = one_sided(
        [&](long long m) {
            return one_sided(
                [&](long long n) {
                    return detail::poisson_f1_rhs_term(gamma, delta, double(m), double(n));
                },
                c * delta, &used);
        },
        c * gamma, &used);
    double rhs = std::sqrt(gamma * delta) * (2.0 / kPi + 2.0 * L + 2.0 * M + 4.0 * D);
    return {lhs, rhs, used};
}

SidePair legendre_sum_check(double alpha, double tol) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    (void)tol;
    const double beta = 1.0 / alpha;
    long long used = 0;
    auto sech_sum = [&](double a) {
        return bilateral([a](long long n) { return specfun::sech(kPi * a * n); }, kPi * a, &used);
    };
    auto weight_sum = [&](double a) {
        return one_sided(
            [a](long long n) {
                double u = kPi * a * n;
                return a * n / (u * specfun::sinhc(u));  // a n / sinh(pi a n)
            },
            kPi * a, &used);
    };
    double lhs = sech_sum(alpha) * sech_sum(beta);
    double rhs = 2.0 / kPi + 4.0 * weight_sum(alpha) + 4.0 * weight_sum(beta);
    return {lhs, rhs, used};
}

SidePair landen_sum_check(double alpha, double tol) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    (void)tol;
    const double beta = 2.0 / alpha;
    long long used = 0;
    auto sech_sum = [&](double a) {
        return bilateral([a](long long n) { return specfun::sech(kPi * a * n); }, kPi * a, &used);
    };
    auto half_sum = [&](double a) {
        return bilateral(
            [a](long long n) { return specfun::cosh_ratio(0.5 * kPi * a * n, kPi * a * n); },
            0.5 * kPi * a, &used);
    };
    double lhs = std::sqrt(2.0) * sech_sum(alpha) * sech_sum(beta);
    double rhs = half_sum(alpha) * half_sum(beta);
    return {lhs, rhs, used};
}

SidePair elliptic1_check(double alpha, double tol) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    (void)tol;
    const double s3 = std::sqrt(3.0);
    long long used = 0;
    auto weighted = [&](double a) {
        return one_sided(
            [a, s3](long long n) { return n * cosh_sinh_ratio(kPi * a * n / s3,
                                                              kPi * a * n * s3); },
            kPi * a * (s3 - 1.0 / s3), &used);
    };
    auto sq_sum = [&](double a) {
        return bilateral(
            [a, s3](long long n) {
                double u = 2.0 * kPi * a * n / s3;
                if (u > 650.0) return 2.0 * std::exp(-u);
                return 1.0 / (std::cosh(u) + 0.5);
            },
            2.0 * kPi * a / s3, &used);
    };
    double lhs = alpha * weighted(alpha) + (1.0 / alpha) * weighted(1.0 / alpha);
    double s = sq_sum(alpha);
    double rhs = -1.0 / (2.0 * kPi * s3) + 0.25 * alpha * s * s;
    return {lhs, rhs, used};
}

SidePair fbeta_check(double beta, double theta, double tol) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (!(theta > 0.0 && theta < kPi)) throw DomainError("theta must lie in (0, pi)");
    (void)tol;
    long long used = 0;
    auto fbeta = [&](double th) {
        return bilateral(
            [beta, th](long long n) {
                double u = beta * n;
                if (std::abs(u) > 650.0) return 2.0 * std::exp(-std::abs(u));
                return 1.0 / (std::cosh(u) - std::cos(th));
            },
            beta, &used);
    };
    double f1 = fbeta(theta);
    double f2 = fbeta(2.0 * theta);
    double ct = std::cos(theta), st = std::sin(theta);
    double lhs = f1 * f1 - 2.0 * ct * f1 * f2 + ct / (st * st) * f1;

    double sq = bilateral(
        [beta, ct](long long n) {
            double u = beta * n;
            double d;
            if (std::abs(u) > 650.0)
                d = 2.0 * std::exp(-std::abs(u));
            else
                d = 1.0 / (std::cosh(u) - ct);
            return d * d;
        },
        2.0 * beta, &used);
    double c2t = std::cos(2.0 * theta);
    double weighted = one_sided(
        [beta, c2t](long long n) {
            double u = beta * n;
            double coth = std::cosh(0.5 * u) / (0.5 * u * specfun::sinhc(0.5 * u));
            double den = (u > 650.0) ? 0.5 * std::exp(u) : (std::cosh(u) - c2t);
            return n * coth / den;
        },
        beta, &used);
    double rhs = sq + 4.0 * weighted;
    return {lhs, rhs, used};
}

}  // namespace mordellkit::series
