#include "mordellkit/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "mordellkit/quad.hpp"
#include "mordellkit/specfun.hpp"

namespace mordellkit::identities {

namespace {

constexpr double kPi = std::numbers::pi;

const IdentityRecord& require_identity(std::string_view id) {
    const IdentityRecord* rec = find_identity(id);
    if (!rec) throw DomainError("unknown identity id: " + std::string(id));
    return *rec;
}

}  // namespace

const IdentityRecord* find_identity(std::string_view id) {
    const auto& regs = registry();
    auto it = std::lower_bound(regs.begin(), regs.end(), id,
                               [](const IdentityRecord& r, std::string_view v) { return r.id < v; });
    if (it == regs.end() || it->id != id) return nullptr;
    return &*it;
}

Params resolve_params(const IdentityRecord& rec, const Params& overrides) {
    for (const auto& [name, value] : overrides) {
        bool known = std::any_of(rec.params.begin(), rec.params.end(),
                                 [&](const ParamSpec& p) { return p.name == name; });
        if (!known)
            throw DomainError("identity " + rec.id + " has no parameter named '" + name + "'");
        if (!std::isfinite(value))
            throw DomainError("parameter '" + name + "' must be finite");
    }
    Params out;
    for (const auto& spec : rec.params) {
        auto it = overrides.find(spec.name);
        if (it != overrides.end()) {
            out[spec.name] = it->second;
        } else if (!spec.derived) {
            out[spec.name] = spec.default_value;
        }
    }
    if (rec.constraint) {
        const auto& c = *rec.constraint;
        double free = out.at(c.free_param);
        if (!(free > 0.0)) throw DomainError("constrained parameter must be positive");
        auto it = out.find(c.bound_param);
        if (it == out.end()) {
            out[c.bound_param] = c.product / free;
        } else if (std::abs(free * it->second - c.product) >
                   1e-14 * std::max(1.0, c.product)) {
            throw ConstraintViolation("identity " + rec.id + " requires " + c.display);
        }
    }
    for (const auto& spec : rec.params) {
        auto it = out.find(spec.name);
        if (it == out.end()) out[spec.name] = spec.default_value;
        double v = out.at(spec.name);
        if (!(v > spec.min && v < spec.max))
            throw DomainError("parameter '" + spec.name + "' of " + rec.id +
                              " outside its domain");
    }
    return out;
}

SideValue evaluate_side(std::string_view id, std::string_view side, const Params& overrides,
                        double tol) {
    const IdentityRecord& rec = require_identity(id);
    if (tol <= 0.0) tol = rec.default_tol;
    Params params = resolve_params(rec, overrides);
    if (side == "lhs") return rec.lhs(params, tol);
    if (side == "rhs") {
        if (rec.style == CheckStyle::Residual) return {0.0, 0.0, 0};
        return rec.rhs(params, tol);
    }
    if (side == "third") {
        if (rec.style != CheckStyle::ThreeWay)
            throw DomainError("identity " + rec.id + " has no third route");
        return rec.third(params, tol);
    }
    throw DomainError("side must be lhs, rhs or third");
}

VerificationOutcome verify(std::string_view id, const Params& overrides, double tol) {
    const IdentityRecord& rec = require_identity(id);
    VerificationOutcome out;
    out.identity_id = rec.id;
    out.asserted = rec.asserted;
    out.tol = tol > 0.0 ? tol : rec.default_tol;
    out.params = resolve_params(rec, overrides);

    auto start = std::chrono::steady_clock::now();
    try {
        SideValue l = rec.lhs(out.params, out.tol);
        SideValue r{0.0, 0.0, 0};
        if (rec.style != CheckStyle::Residual) r = rec.rhs(out.params, out.tol);
        out.lhs = l.value;
        out.rhs = r.value;
        out.lhs_err = l.err;
        out.rhs_err = r.err;
        out.evaluations = l.evaluations + r.evaluations;
        out.abs_diff = std::abs(l.value - r.value);
        if (rec.style == CheckStyle::ThreeWay) {
            SideValue t = rec.third(out.params, out.tol);
            out.evaluations += t.evaluations;
            out.abs_diff = std::max({out.abs_diff, std::abs(l.value - t.value),
                                     std::abs(r.value - t.value)});
        }
        if (rec.style == CheckStyle::Residual) {
            out.rel_diff = out.abs_diff;  // no natural scale: the target is 0
        } else {
            double scale = std::max(std::abs(out.lhs), std::abs(out.rhs));
            out.rel_diff = scale > 0.0 ? out.abs_diff / scale : out.abs_diff;
        }
        out.pass = out.abs_diff <= out.tol || out.rel_diff <= out.tol;
        if (!out.pass) out.message = "difference above tolerance";
    } catch (const NonConvergence& e) {
        out.inconclusive = true;
        out.pass = false;
        out.message = e.what();
    }
    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

// --- Theta-analog integrals --------------------------------------------------

namespace {

quad::QuadResult phi_component(double alpha, double beta, ComplexValue theta, ComplexValue phi_arg,
                               bool real_part, double tol) {
    quad::Integrand2D f;
    f.decay_x = {0.5 * kPi * alpha, quad::DecayKind::Gaussian, 2.0, std::abs(theta.im)};
    f.decay_y = {0.5 * kPi * beta, quad::DecayKind::Gaussian, 2.0, std::abs(phi_arg.im)};
    double cut_x = quad::truncation_cutoff(f.decay_x, 1e-10);
    double cut_y = quad::truncation_cutoff(f.decay_y, 1e-10);
    f.osc_frequency = kPi * std::max(cut_x, cut_y) + std::abs(theta.re) + std::abs(phi_arg.re);
    f.eval = [=](double x, double y) {
        if (x > 60.0 || y > 60.0) return 0.0;
        double qx = -0.5 * kPi * alpha * x * x;
        double qy = -0.5 * kPi * beta * y * y;
        // cos((a+ib)x) = cos(ax)cosh(bx) - i sin(ax)sinh(bx), folded into the
        // Gaussian factors to avoid overflow
        double ax = std::cos(theta.re * x) * specfun::cosh_mul_exp(theta.im * x, qx);
        double bx = std::sin(theta.re * x) * specfun::sinh_mul_exp(theta.im * x, qx);
        double ay = std::cos(phi_arg.re * y) * specfun::cosh_mul_exp(phi_arg.im * y, qy);
        double by = std::sin(phi_arg.re * y) * specfun::sinh_mul_exp(phi_arg.im * y, qy);
        double trig = real_part ? ax * ay - bx * by : -(ax * by + bx * ay);
        return std::cos(kPi * x * y) * specfun::sech(kPi * x) * specfun::sech(kPi * y) * trig;
    };
    return quad::integrate_quadrant(f, std::max(tol, 1e-10));
}

}  // namespace

ComplexValue phi(double alpha, double beta, ComplexValue theta, ComplexValue phi_arg, double tol) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("phi requires alpha, beta > 0");
    for (double v : {theta.re, theta.im, phi_arg.re, phi_arg.im})
        if (!std::isfinite(v)) throw DomainError("phi arguments must be finite");
    auto re = phi_component(alpha, beta, theta, phi_arg, true, tol);
    if (theta.im == 0.0 && phi_arg.im == 0.0) return {re.value, 0.0};
    auto im = phi_component(alpha, beta, theta, phi_arg, false, tol);
    return {re.value, im.value};
}

double psi(double alpha, double beta, double theta, double phi_arg, double tol) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("psi requires alpha, beta > 0");
    if (!std::isfinite(theta) || !std::isfinite(phi_arg))
        throw DomainError("psi arguments must be finite");
    if (theta == 0.0 || phi_arg == 0.0) return 0.0;
    quad::Integrand2D f;
    f.decay_x = {0.5 * kPi * alpha, quad::DecayKind::Gaussian, 2.0};
    f.decay_y = {0.5 * kPi * beta, quad::DecayKind::Gaussian, 2.0};
    double cut_x = quad::truncation_cutoff(f.decay_x, 1e-10);
    double cut_y = quad::truncation_cutoff(f.decay_y, 1e-10);
    f.osc_frequency = kPi * std::max(cut_x, cut_y) + std::abs(theta) + std::abs(phi_arg);
    f.eval = [=](double x, double y) {
        if (x > 40.0 || y > 40.0) return 0.0;
        double q = -0.5 * kPi * (alpha * x * x + beta * y * y);
        return std::sin(kPi * x * y) * std::sin(theta * x) * std::sin(phi_arg * y) *
               specfun::sech(kPi * x) * specfun::sech(kPi * y) * std::exp(q);
    };
    return quad::integrate_quadrant(f, std::max(tol, 1e-10)).value;
}

}  // namespace mordellkit::identities
