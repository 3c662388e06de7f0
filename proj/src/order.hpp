#ifndef VARFRAC_ORDER_HPP
#define VARFRAC_ORDER_HPP

#include <string>
#include <vector>

#include "expr.hpp"
#include "grid.hpp"

namespace varfrac {

/// A variable order function (t, tau) -> alpha(t, tau) in (0, 1) together
/// with its declared range and the bound integer n >= 2 used to validate
/// operator admissibility.
class OrderFunction {
public:
    OrderFunction(dsl::Expr expr, double declared_min, double declared_max, int bound_n);

    /// Parses src over the variables {t, tau}.
    static OrderFunction parse(const std::string& src, double declared_min,
                               double declared_max, int bound_n);

    double operator()(double t, double tau) const;

    double declared_min() const { return declared_min_; }
    double declared_max() const { return declared_max_; }
    int bound_n() const { return bound_n_; }
    const dsl::Expr& expr() const { return expr_; }

private:
    dsl::Expr expr_;
    double declared_min_;
    double declared_max_;
    int bound_n_;
};

enum class ValidationMode { Integral, Derivative };

struct OrderViolation {
    int i, j;          // node indices, j < i
    double t, tau;
    double value;
    std::string reason;
};

/// Result of sampling the order over the triangle {(t_i, t_j) : j < i}.
/// Necessary, not sufficient: only grid pairs are inspected.
struct OrderValidationReport {
    ValidationMode mode = ValidationMode::Integral;
    int bound_n = 0;
    double min_value = 0.0;
    double max_value = 0.0;
    double mode_bound = 0.0;       // 1/n (integral) or 1 - 1/n (derivative)
    bool mode_ok = false;          // integral: min > 1/n; derivative: max < 1 - 1/n
    bool declared_bounds_ok = false;
    bool pass = false;
    std::vector<OrderViolation> violations; // capped
};

OrderValidationReport validate_order(const OrderFunction& order, const GridPtr& grid,
                                     ValidationMode mode);

/// Throws ValidationError when the report fails; used by the operators.
void require_valid_order(const OrderFunction& order, const GridPtr& grid, ValidationMode mode);

/// Integrability check for the difference-form kernel
/// k(s) = s^(-alpha(s)) / Gamma(1 - alpha(s)) on (0, b], where the caller
/// asserts alpha(t, tau) = alpha(t - tau) and alpha(s) is evaluated as
/// alpha(s, 0).
///
/// The majorant chain is reported step by step so a failure localizes:
///   integral       — product quadrature of |k| over (0, b]
///   power_majorant — same quadrature with the kernel power bounded by
///                    s^(1/n - 1) on (0, min(1,b)] and by 1 beyond
///   gamma_majorant — power_majorant with 1/Gamma(1 - alpha) bounded by 1,
///                    in closed form: n*min(1,b)^(1/n) + max(0, b - 1)
/// The pointwise bounds require alpha(s) < 1 - 1/n; hypothesis_ok records
/// whether that held at the quadrature midpoints. When it does, pass means
/// integral <= power_majorant <= gamma_majorant up to a small margin.
struct KernelIntegrabilityReport {
    double b = 0.0;
    int n = 0;
    double integral = 0.0;
    double power_majorant = 0.0;
    double gamma_majorant = 0.0;
    bool hypothesis_ok = false;
    bool finite = false;
    bool power_step_ok = false;
    bool gamma_step_ok = false;
    bool pass = false;
};

KernelIntegrabilityReport kernel_integrability_check(const OrderFunction& order, double b, int n);

} // namespace varfrac

#endif
