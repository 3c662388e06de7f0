#include "operators.hpp"

#include <vector>

#include "errors.hpp"
#include "specfun.hpp"

namespace varfrac {

namespace {

SampledFunction with_endpoint_zero(SampledFunction f, int index) {
    std::vector<double> v(f.values().begin(), f.values().end());
    v[static_cast<std::size_t>(index)] = 0.0;
    return SampledFunction(f.grid_ptr(), std::move(v));
}

} // namespace

KernelTable build_operator_table(const GridPtr& grid, const OrderFunction& order,
                                 OperatorKind::Side side, bool complement) {
    // Right-side kernels evaluate alpha with swapped arguments.
    const auto order_at = [&order, side](double t, double m) {
        return side == OperatorKind::Side::Left ? order(t, m) : order(m, t);
    };
    KernelFn exponent, weight;
    if (complement) {
        exponent = [order_at](double t, double m) { return -order_at(t, m); };
        weight = [order_at](double t, double m) {
            return 1.0 / specfun::gamma(1.0 - order_at(t, m));
        };
    } else {
        exponent = [order_at](double t, double m) { return order_at(t, m) - 1.0; };
        weight = [order_at](double t, double m) {
            return 1.0 / specfun::gamma(order_at(t, m));
        };
    }
    const auto table_side = side == OperatorKind::Side::Left ? KernelTable::Side::Left
                                                             : KernelTable::Side::Right;
    return KernelTable::build(grid, table_side, exponent, weight);
}

SampledFunction left_rl_integral(const SampledFunction& f, const OrderFunction& alpha) {
    require_valid_order(alpha, f.grid_ptr(), ValidationMode::Integral);
    return build_operator_table(f.grid_ptr(), alpha, OperatorKind::Side::Left, false).apply(f);
}

SampledFunction right_rl_integral(const SampledFunction& f, const OrderFunction& alpha) {
    require_valid_order(alpha, f.grid_ptr(), ValidationMode::Integral);
    return build_operator_table(f.grid_ptr(), alpha, OperatorKind::Side::Right, false).apply(f);
}

SampledFunction left_complement_integral(const SampledFunction& f, const OrderFunction& alpha) {
    require_valid_order(alpha, f.grid_ptr(), ValidationMode::Derivative);
    return build_operator_table(f.grid_ptr(), alpha, OperatorKind::Side::Left, true).apply(f);
}

SampledFunction right_complement_integral(const SampledFunction& f, const OrderFunction& alpha) {
    require_valid_order(alpha, f.grid_ptr(), ValidationMode::Derivative);
    return build_operator_table(f.grid_ptr(), alpha, OperatorKind::Side::Right, true).apply(f);
}

SampledFunction left_caputo(const SampledFunction& f, const SampledFunction& fprime,
                            const OrderFunction& alpha) {
    if (!same_grid(f.grid(), fprime.grid())) throw DomainError("left_caputo: grid mismatch");
    require_valid_order(alpha, f.grid_ptr(), ValidationMode::Derivative);
    return build_operator_table(f.grid_ptr(), alpha, OperatorKind::Side::Left, true).apply(fprime);
}

SampledFunction right_caputo(const SampledFunction& f, const SampledFunction& fprime,
                             const OrderFunction& alpha) {
    if (!same_grid(f.grid(), fprime.grid())) throw DomainError("right_caputo: grid mismatch");
    require_valid_order(alpha, f.grid_ptr(), ValidationMode::Derivative);
    SampledFunction integral =
        build_operator_table(f.grid_ptr(), alpha, OperatorKind::Side::Right, true).apply(fprime);
    // The right Caputo kernel carries a minus sign.
    return scale(-1.0, integral);
}

SampledFunction left_rl_derivative(const SampledFunction& f, const OrderFunction& alpha) {
    SampledFunction g = left_complement_integral(f, alpha);
    return with_endpoint_zero(differentiate(g), 0);
}

SampledFunction right_rl_derivative(const SampledFunction& f, const OrderFunction& alpha) {
    SampledFunction g = right_complement_integral(f, alpha);
    return with_endpoint_zero(scale(-1.0, differentiate(g)), f.grid().n);
}

} // namespace varfrac
