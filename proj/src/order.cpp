#include "order.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "errors.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace varfrac {

namespace {
constexpr std::size_t kMaxReportedViolations = 16;
}

OrderFunction::OrderFunction(dsl::Expr expr, double declared_min, double declared_max, int bound_n)
    : expr_(std::move(expr)), declared_min_(declared_min), declared_max_(declared_max), bound_n_(bound_n) {
    if (!(declared_min > 0.0 && declared_min <= declared_max && declared_max < 1.0))
        throw DomainError("order function: declared bounds must satisfy 0 < min <= max < 1");
    if (bound_n < 2) throw DomainError("order function: bound n must be >= 2");
}

OrderFunction OrderFunction::parse(const std::string& src, double declared_min,
                                   double declared_max, int bound_n) {
    return OrderFunction(dsl::Expr::parse(src, {"t", "tau"}), declared_min, declared_max, bound_n);
}

double OrderFunction::operator()(double t, double tau) const {
    const double v[2] = {t, tau};
    return expr_.eval(std::span<const double>(v, 2));
}

OrderValidationReport validate_order(const OrderFunction& order, const GridPtr& grid,
                                     ValidationMode mode) {
    const Grid& g = *grid;
    OrderValidationReport report;
    report.mode = mode;
    report.bound_n = order.bound_n();
    const double n = order.bound_n();
    report.mode_bound = mode == ValidationMode::Integral ? 1.0 / n : 1.0 - 1.0 / n;

    struct RowStat {
        double min = 1e300, max = -1e300;
        std::vector<OrderViolation> violations;
    };
    std::vector<RowStat> stats(static_cast<std::size_t>(g.node_count()));

    parallel_for(static_cast<std::size_t>(g.node_count()), [&](std::size_t row) {
        const int i = static_cast<int>(row);
        RowStat& s = stats[row];
        for (int j = 0; j < i; ++j) {
            const double t = g.nodes[row];
            const double tau = g.nodes[static_cast<std::size_t>(j)];
            const double v = order(t, tau);
            s.min = std::min(s.min, v);
            s.max = std::max(s.max, v);
            const bool in_declared = v >= order.declared_min() && v <= order.declared_max();
            const bool mode_ok = mode == ValidationMode::Integral ? v > 1.0 / n : v < 1.0 - 1.0 / n;
            if ((!in_declared || !mode_ok) && s.violations.size() < kMaxReportedViolations) {
                s.violations.push_back({i, j, t, tau, v,
                                        !in_declared ? "outside declared bounds" : "violates mode bound"});
            }
        }
    });

    report.min_value = 1e300;
    report.max_value = -1e300;
    for (const auto& s : stats) {
        report.min_value = std::min(report.min_value, s.min);
        report.max_value = std::max(report.max_value, s.max);
        for (const auto& v : s.violations) {
            if (report.violations.size() < kMaxReportedViolations) report.violations.push_back(v);
        }
    }
    report.mode_ok = mode == ValidationMode::Integral ? report.min_value > 1.0 / n
                                                      : report.max_value < 1.0 - 1.0 / n;
    report.declared_bounds_ok = report.min_value >= order.declared_min()
                                && report.max_value <= order.declared_max();
    report.pass = report.mode_ok && report.declared_bounds_ok;
    return report;
}

void require_valid_order(const OrderFunction& order, const GridPtr& grid, ValidationMode mode) {
    const OrderValidationReport r = validate_order(order, grid, mode);
    if (r.pass) return;
    std::string msg = "order validation failed in ";
    msg += mode == ValidationMode::Integral ? "integral" : "derivative";
    msg += " mode: sampled range [" + std::to_string(r.min_value) + ", "
           + std::to_string(r.max_value) + "], ";
    msg += mode == ValidationMode::Integral ? "requires min > " : "requires max < ";
    msg += std::to_string(r.mode_bound);
    if (!r.declared_bounds_ok) msg += " (and values leave the declared bounds)";
    if (!r.violations.empty()) {
        msg += "; first violation at (t, tau) = (" + std::to_string(r.violations[0].t) + ", "
               + std::to_string(r.violations[0].tau) + ") value " + std::to_string(r.violations[0].value);
    }
    throw ValidationError(msg);
}

KernelIntegrabilityReport kernel_integrability_check(const OrderFunction& order, double b, int n) {
    if (!(b > 0.0)) throw DomainError("kernel_integrability_check: b must be positive");
    if (n < 2) throw DomainError("kernel_integrability_check: n must be >= 2");

    KernelIntegrabilityReport report;
    report.b = b;
    report.n = n;

    const int quad_n = 2048;
    const GridPtr grid = make_uniform_grid(0.0, b, quad_n);
    const SampledFunction one = sample(grid, [](double) { return 1.0; });
    const auto alpha_of = [&order](double s) { return order(s, 0.0); };

    bool hypothesis_ok = true;
    const auto hyp_exponent = [&](double, double m) {
        const double a = alpha_of(m);
        if (!(a > 0.0 && a < 1.0 - 1.0 / n)) hypothesis_ok = false;
        return -a;
    };
    const auto gamma_weight = [&](double, double m) {
        return 1.0 / specfun::gamma(1.0 - alpha_of(m));
    };

    report.integral = singular_product_quad(0.0, 0.0, b, one, hyp_exponent, gamma_weight);
    report.hypothesis_ok = hypothesis_ok;
    report.finite = std::isfinite(report.integral);

    // Power bound: s^(-alpha(s)) < s^(1/n - 1) on (0, 1), and <= 1 for s >= 1.
    const double split = std::min(1.0, b);
    const double power_exp = 1.0 / n - 1.0;
    double m1 = singular_product_quad(0.0, 0.0, split, one,
                                      [&](double, double) { return power_exp; }, gamma_weight);
    if (b > 1.0) {
        m1 += singular_product_quad(0.0, split, b, one,
                                    [](double, double) { return 0.0; }, gamma_weight);
    }
    report.power_majorant = m1;

    // Gamma bound: 1/Gamma(1 - alpha) < 1 on (0, 1), giving the closed form.
    report.gamma_majorant = n * std::pow(split, 1.0 / n) + std::max(0.0, b - 1.0);

    const double margin = 1e-9 * (1.0 + std::fabs(report.gamma_majorant));
    report.power_step_ok = report.finite && report.integral <= report.power_majorant + margin;
    report.gamma_step_ok = report.power_majorant <= report.gamma_majorant + margin;
    report.pass = report.hypothesis_ok && report.finite && report.power_step_ok && report.gamma_step_ok;
    return report;
}

} // namespace varfrac
