#ifndef VARFRAC_OPERATORS_HPP
#define VARFRAC_OPERATORS_HPP

#include "grid.hpp"
#include "order.hpp"
#include "quadrature.hpp"

namespace varfrac {

/// The six variable order operators. Families:
///   rl_integral    — kernel |t-tau|^(alpha-1) / Gamma(alpha)
///   rl_derivative  — d/dt (complement integral), complement kernel
///                    |t-tau|^(-alpha) / Gamma(1-alpha)
///   caputo         — complement kernel applied to f'
/// Right-side kernels evaluate the order with swapped arguments,
/// alpha(tau, t). Values at the degenerate endpoint (t = a for left
/// operators, t = b for right ones) are 0: the integration range is empty
/// there and the definitions are silent, so the limit convention is ours.
struct OperatorKind {
    enum class Side { Left, Right } side;
    enum class Family { RlIntegral, RlDerivative, Caputo } family;

    /// Derivative families integrate against the complement order 1 - alpha.
    bool complement() const { return family != Family::RlIntegral; }
};

/// Builds the quadrature table for the integral part of an operator kind.
KernelTable build_operator_table(const GridPtr& grid, const OrderFunction& order,
                                 OperatorKind::Side side, bool complement);

SampledFunction left_rl_integral(const SampledFunction& f, const OrderFunction& alpha);
SampledFunction right_rl_integral(const SampledFunction& f, const OrderFunction& alpha);

/// Caputo derivatives take the density f' explicitly: symbolic when f is
/// expression-defined, differentiate(f) otherwise.
SampledFunction left_caputo(const SampledFunction& f, const SampledFunction& fprime,
                            const OrderFunction& alpha);
SampledFunction right_caputo(const SampledFunction& f, const SampledFunction& fprime,
                             const OrderFunction& alpha);

/// Riemann-Liouville derivatives as difference quotients of the computed
/// complement integral; accuracy near the anchored endpoint is limited and
/// callers should expect loose tolerances there.
SampledFunction left_rl_derivative(const SampledFunction& f, const OrderFunction& alpha);
SampledFunction right_rl_derivative(const SampledFunction& f, const OrderFunction& alpha);

/// The complement integrals themselves (I^(1-alpha)); these appear as
/// boundary terms in the derivative integration-by-parts identity.
SampledFunction left_complement_integral(const SampledFunction& f, const OrderFunction& alpha);
SampledFunction right_complement_integral(const SampledFunction& f, const OrderFunction& alpha);

} // namespace varfrac

#endif
