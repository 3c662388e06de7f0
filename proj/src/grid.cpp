#include "grid.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace varfrac {

GridPtr make_uniform_grid(double a, double b, int n) {
    if (!std::isfinite(a) || !std::isfinite(b) || a >= b)
        throw DomainError("grid: requires a < b, got [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    if (n < 4)
        throw DomainError("grid: requires at least 4 subintervals, got " + std::to_string(n));
    auto g = std::make_shared<Grid>();
    g->a = a;
    g->b = b;
    g->n = n;
    g->h = (b - a) / n;
    g->nodes.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) g->nodes[static_cast<std::size_t>(i)] = a + i * g->h;
    g->nodes.back() = b; // pin the endpoint exactly
    return g;
}

bool same_grid(const Grid& x, const Grid& y) {
    return x.n == y.n && x.a == y.a && x.b == y.b;
}

SampledFunction::SampledFunction(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_) throw DomainError("sampled function: null grid");
    if (static_cast<int>(values_.size()) != grid_->node_count())
        throw DomainError("sampled function: value count " + std::to_string(values_.size())
                          + " does not match node count " + std::to_string(grid_->node_count()));
    for (double v : values_) {
        if (!std::isfinite(v)) throw DomainError("sampled function: non-finite value");
    }
}

SampledFunction sample(const GridPtr& grid, const std::function<double(double)>& f) {
    std::vector<double> values(static_cast<std::size_t>(grid->node_count()));
    for (int i = 0; i <= grid->n; ++i) {
        const double t = grid->nodes[static_cast<std::size_t>(i)];
        const double v = f(t);
        if (!std::isfinite(v))
            throw DomainError("sample: non-finite value at t = " + std::to_string(t));
        values[static_cast<std::size_t>(i)] = v;
    }
    return SampledFunction(grid, std::move(values));
}

SampledFunction sample(const GridPtr& grid, const dsl::Expr& f) {
    return sample(grid, [&f](double t) {
        const double v[1] = {t};
        return f.eval(std::span<const double>(v, 1));
    });
}

SampledFunction differentiate(const SampledFunction& f) {
    const Grid& g = f.grid();
    const auto v = f.values();
    const int n = g.n;
    const double inv2h = 1.0 / (2.0 * g.h);
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * inv2h;
    for (int i = 1; i < n; ++i)
        d[static_cast<std::size_t>(i)] = (v[static_cast<std::size_t>(i) + 1] - v[static_cast<std::size_t>(i) - 1]) * inv2h;
    d[static_cast<std::size_t>(n)] =
        (3.0 * v[static_cast<std::size_t>(n)] - 4.0 * v[static_cast<std::size_t>(n) - 1] + v[static_cast<std::size_t>(n) - 2]) * inv2h;
    return SampledFunction(f.grid_ptr(), std::move(d));
}

double interpolate(const SampledFunction& f, double t) {
    const Grid& g = f.grid();
    if (t < g.a - 1e-12 * (g.b - g.a) || t > g.b + 1e-12 * (g.b - g.a))
        throw DomainError("interpolate: t = " + std::to_string(t) + " outside ["
                          + std::to_string(g.a) + ", " + std::to_string(g.b) + "]");
    if (t <= g.a) return f[0];
    if (t >= g.b) return f[g.n];
    int j = static_cast<int>((t - g.a) / g.h);
    if (j >= g.n) j = g.n - 1;
    const double t0 = g.nodes[static_cast<std::size_t>(j)];
    const double w = (t - t0) / g.h;
    return (1.0 - w) * f[j] + w * f[j + 1];
}

double trapezoid(const SampledFunction& f) {
    const Grid& g = f.grid();
    long double acc = 0.5L * (f[0] + f[g.n]);
    for (int i = 1; i < g.n; ++i) acc += f[i];
    return static_cast<double>(acc * g.h);
}

SampledFunction multiply(const SampledFunction& f, const SampledFunction& g) {
    if (!same_grid(f.grid(), g.grid())) throw DomainError("multiply: grid mismatch");
    std::vector<double> out(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(i)] = f[i] * g[i];
    return SampledFunction(f.grid_ptr(), std::move(out));
}

SampledFunction scale(double c, const SampledFunction& f) {
    std::vector<double> out(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(i)] = c * f[i];
    return SampledFunction(f.grid_ptr(), std::move(out));
}

SampledFunction linear_combination(double cf, const SampledFunction& f,
                                   double cg, const SampledFunction& g) {
    if (!same_grid(f.grid(), g.grid())) throw DomainError("linear_combination: grid mismatch");
    std::vector<double> out(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(i)] = cf * f[i] + cg * g[i];
    return SampledFunction(f.grid_ptr(), std::move(out));
}

} // namespace varfrac
