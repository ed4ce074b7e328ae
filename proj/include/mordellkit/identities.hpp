#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mordellkit/errors.hpp"

namespace mordellkit::identities {

using Params = std::map<std::string, double>;

struct SideValue {
    double value = 0.0;
    double err = 0.0;
    std::int64_t evaluations = 0;
};

using SideEval = std::function<SideValue(const Params&, double tol)>;

struct ParamSpec {
    std::string name;
    double default_value;
    double min;  // exclusive
    double max;  // exclusive
    bool derived = false;
};

// Product constraints only (every identity here is of the form free*bound = C).
struct ConstraintSpec {
    std::string display;  // e.g. "alpha*beta=2*pi"
    std::string free_param;
    std::string bound_param;
    double product;
};

enum class CheckStyle {
    TwoSided,  // |lhs - rhs|
    Residual,  // |lhs| against 0
    ThreeWay,  // max pairwise difference of three routes
};

struct IdentityRecord {
    std::string id;
    std::string description;
    std::vector<ParamSpec> params;
    std::optional<ConstraintSpec> constraint;
    double default_tol = 1e-9;
    bool asserted = true;  // exploratory entries never gate a run
    CheckStyle style = CheckStyle::TwoSided;
    SideEval lhs;
    SideEval rhs;    // unused for Residual
    SideEval third;  // ThreeWay only
};

struct VerificationOutcome {
    std::string identity_id;
    Params params;
    double lhs = 0.0, rhs = 0.0;
    double lhs_err = 0.0, rhs_err = 0.0;
    double abs_diff = 0.0, rel_diff = 0.0;
    double tol = 0.0;
    bool pass = false;
    bool asserted = true;
    bool inconclusive = false;
    std::string message;
    std::int64_t evaluations = 0;
    double elapsed_seconds = 0.0;
};

// Full registry in lexicographic id order.
const std::vector<IdentityRecord>& registry();
const IdentityRecord* find_identity(std::string_view id);

// Defaults merged with overrides, constraint partner derived, domains checked.
// Throws DomainError (unknown name, out of domain) or ConstraintViolation.
Params resolve_params(const IdentityRecord& rec, const Params& overrides);

SideValue evaluate_side(std::string_view id, std::string_view side, const Params& overrides,
                        double tol);

// tol <= 0 selects the record's default tolerance.
VerificationOutcome verify(std::string_view id, const Params& overrides, double tol = 0.0);

// --- Theta-analog integrals --------------------------------------------------

struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
};

// Phi_{alpha,beta}(theta, phi): double integral of
// cos(pi x y) cos(theta x) cos(phi y) sech(pi x) sech(pi y)
// exp(-pi(alpha x^2 + beta y^2)/2) with complex theta, phi expanded in real
// arithmetic; real and imaginary parts come from separate real quadratures.
ComplexValue phi(double alpha, double beta, ComplexValue theta, ComplexValue phi_arg, double tol);

// Psi: the odd (sin sin sin) counterpart at real arguments.
double psi(double alpha, double beta, double theta, double phi_arg, double tol);

}  // namespace mordellkit::identities
