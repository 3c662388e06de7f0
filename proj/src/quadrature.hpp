#ifndef VARFRAC_QUADRATURE_HPP
#define VARFRAC_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "grid.hpp"

namespace varfrac {

/// Callback giving the kernel exponent or weight for a target point t and an
/// integration midpoint tau.
using KernelFn = std::function<double(double t, double tau)>;

/// Product quadrature for integrals of the form
///
///       / upper            e(t,tau)
///   I = |       w(t,tau) |t - tau|         f(tau) dtau
///       / lower
///
/// where f enters through its piecewise-linear interpolant on the grid and
/// the exponent and weight are frozen at the midpoint of each subinterval.
/// The frozen-exponent moment integrals have closed forms, so the endpoint
/// singularity at tau = t is integrated exactly instead of sampled.
///
/// lower and upper must coincide with grid nodes and t itself must be a node
/// when it lies strictly inside (lower, upper). Exponents must stay > -1.
double singular_product_quad(double t, double lower, double upper,
                             const SampledFunction& density,
                             const KernelFn& exponent, const KernelFn& weight);

/// Dense table of quadrature weights: row i holds the coefficients w[i][j]
/// such that applying the table to density samples f gives
///
///   result[i] = sum_j w[i][j] * f[j]
///             = product quadrature of the kernel against f over
///               [a, t_i] (left) or [t_i, b] (right).
///
/// Left tables are lower triangular (row i touches columns 0..i), right
/// tables upper triangular. Row 0 (left) / row n (right) is empty, matching
/// the value-0 convention at the degenerate endpoint.
class KernelTable {
public:
    enum class Side { Left, Right };

    static KernelTable build(const GridPtr& grid, Side side,
                             const KernelFn& exponent, const KernelFn& weight);

    SampledFunction apply(const SampledFunction& density) const;

    Side side() const { return side_; }
    const GridPtr& grid_ptr() const { return grid_; }
    int dim() const { return dim_; }

    /// Row-major storage; row(i)[j] is the weight of density node j.
    const double* row(int i) const { return weights_.data() + static_cast<std::size_t>(i) * dim_; }

private:
    KernelTable(GridPtr grid, Side side, int dim)
        : grid_(std::move(grid)), side_(side), dim_(dim),
          weights_(static_cast<std::size_t>(dim) * dim, 0.0) {}

    GridPtr grid_;
    Side side_;
    int dim_;
    std::vector<double> weights_;
};

} // namespace varfrac

#endif
