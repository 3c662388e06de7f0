#ifndef VARFRAC_GRID_HPP
#define VARFRAC_GRID_HPP

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "expr.hpp"

namespace varfrac {

/// Uniform discretization of [a, b] into n subintervals (n + 1 nodes).
struct Grid {
    double a = 0.0;
    double b = 1.0;
    double h = 0.0;
    int n = 0;
    std::vector<double> nodes;

    int node_count() const { return n + 1; }
};

using GridPtr = std::shared_ptr<const Grid>;

/// Builds the uniform grid; rejects a >= b and n < 4.
GridPtr make_uniform_grid(double a, double b, int n);

bool same_grid(const Grid& x, const Grid& y);

/// Function values on the nodes of a grid. Immutable grid, mutable values
/// only through the named constructors; all values are finite by invariant.
class SampledFunction {
public:
    SampledFunction(GridPtr grid, std::vector<double> values);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::span<const double> values() const { return values_; }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(values_.size()); }

private:
    GridPtr grid_;
    std::vector<double> values_;
};

/// Pointwise evaluation of f on the nodes; throws if any value is non-finite.
SampledFunction sample(const GridPtr& grid, const std::function<double(double)>& f);

/// Samples a single-variable expression (its one declared variable is bound
/// to the node coordinate).
SampledFunction sample(const GridPtr& grid, const dsl::Expr& f);

/// Second-order finite differences: central in the interior, one-sided
/// three-point stencils at the two endpoints. Exact on polynomials of
/// degree <= 2.
SampledFunction differentiate(const SampledFunction& f);

/// Piecewise-linear interpolation; exact at nodes; t must lie in [a, b].
double interpolate(const SampledFunction& f, double t);

/// Composite trapezoid rule over the whole grid.
double trapezoid(const SampledFunction& f);

/// Pointwise combinations (grids must match).
SampledFunction multiply(const SampledFunction& f, const SampledFunction& g);
SampledFunction scale(double c, const SampledFunction& f);
SampledFunction linear_combination(double cf, const SampledFunction& f,
                                   double cg, const SampledFunction& g);

} // namespace varfrac

#endif
