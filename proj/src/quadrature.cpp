#include "quadrature.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"

namespace varfrac {

namespace {

// One subinterval [tau_j, tau_j1] lying left of the target (tau <= t).
// With u = t - tau in [uL, uH] and the linear density
// f(tau) = fj + s*(tau - tau_j),
//
//   I = (fj + s*uH) * (uH^(e+1) - uL^(e+1))/(e+1) - s * (uH^(e+2) - uL^(e+2))/(e+2)
//
// which decomposes into coefficients on fj and fj1:
//   cj  = p1 - c,  cj1 = c,   c = (uH*p1 - p2)/h.
struct SegmentCoeffs {
    double cj, cj1;
};

SegmentCoeffs left_segment(double uL, double uH, double e, double h) {
    const double p1 = (std::pow(uH, e + 1.0) - std::pow(uL, e + 1.0)) / (e + 1.0);
    const double p2 = (std::pow(uH, e + 2.0) - std::pow(uL, e + 2.0)) / (e + 2.0);
    const double c = (uH * p1 - p2) / h;
    return {p1 - c, c};
}

// Mirror for a subinterval right of the target (tau >= t), v = tau - t:
//   I = (fj - s*vL) * q1 + s * q2,  c = (q2 - vL*q1)/h.
SegmentCoeffs right_segment(double vL, double vH, double e, double h) {
    const double q1 = (std::pow(vH, e + 1.0) - std::pow(vL, e + 1.0)) / (e + 1.0);
    const double q2 = (std::pow(vH, e + 2.0) - std::pow(vL, e + 2.0)) / (e + 2.0);
    const double c = (q2 - vL * q1) / h;
    return {q1 - c, c};
}

int locate_node(const Grid& g, double x, const char* what) {
    const double rel = (x - g.a) / g.h;
    const int i = static_cast<int>(std::lround(rel));
    if (i < 0 || i > g.n || std::fabs(rel - i) > 1e-9)
        throw DomainError(std::string(what) + " = " + std::to_string(x) + " is not a grid node");
    return i;
}

void check_exponent(double e, double t, double m) {
    if (!(e > -1.0))
        throw DomainError("kernel exponent " + std::to_string(e) + " <= -1 (non-integrable) at t = "
                          + std::to_string(t) + ", tau = " + std::to_string(m));
}

} // namespace

double singular_product_quad(double t, double lower, double upper,
                             const SampledFunction& density,
                             const KernelFn& exponent, const KernelFn& weight) {
    const Grid& g = density.grid();
    if (lower > upper)
        throw DomainError("singular_product_quad: lower > upper");
    if (t < g.a - 1e-12 || t > g.b + 1e-12)
        throw DomainError("singular_product_quad: t outside the grid");
    const int jlo = locate_node(g, lower, "lower");
    const int jhi = locate_node(g, upper, "upper");
    if (jlo == jhi) return 0.0;
    if (t > lower && t < upper) locate_node(g, t, "t"); // interior targets must sit on a node

    long double acc = 0.0L;
    for (int j = jlo; j < jhi; ++j) {
        const double tau0 = g.nodes[static_cast<std::size_t>(j)];
        const double tau1 = g.nodes[static_cast<std::size_t>(j) + 1];
        const double m = 0.5 * (tau0 + tau1);
        const double e = exponent(t, m);
        check_exponent(e, t, m);
        const double w = weight(t, m);
        SegmentCoeffs c{};
        if (tau1 <= t) {
            c = left_segment(t - tau1, t - tau0, e, g.h);
        } else if (tau0 >= t) {
            c = right_segment(tau0 - t, tau1 - t, e, g.h);
        } else {
            throw DomainError("singular_product_quad: target falls inside a subinterval");
        }
        acc += static_cast<long double>(w) * (c.cj * density[j] + c.cj1 * density[j + 1]);
    }
    return static_cast<double>(acc);
}

KernelTable KernelTable::build(const GridPtr& grid, Side side,
                               const KernelFn& exponent, const KernelFn& weight) {
    const Grid& g = *grid;
    KernelTable table(grid, side, g.node_count());
    const int n = g.n;
    double* data = table.weights_.data();
    const int dim = table.dim_;

    parallel_for(static_cast<std::size_t>(n) + 1, [&](std::size_t row) {
        const int i = static_cast<int>(row);
        const double t = g.nodes[row];
        double* w = data + row * static_cast<std::size_t>(dim);
        if (side == Side::Left) {
            for (int j = 0; j < i; ++j) {
                const double tau0 = g.nodes[static_cast<std::size_t>(j)];
                const double tau1 = g.nodes[static_cast<std::size_t>(j) + 1];
                const double m = 0.5 * (tau0 + tau1);
                const double e = exponent(t, m);
                check_exponent(e, t, m);
                const double wt = weight(t, m);
                const SegmentCoeffs c = left_segment(t - tau1, t - tau0, e, g.h);
                w[j] += wt * c.cj;
                w[j + 1] += wt * c.cj1;
            }
        } else {
            for (int j = i; j < n; ++j) {
                const double tau0 = g.nodes[static_cast<std::size_t>(j)];
                const double tau1 = g.nodes[static_cast<std::size_t>(j) + 1];
                const double m = 0.5 * (tau0 + tau1);
                const double e = exponent(t, m);
                check_exponent(e, t, m);
                const double wt = weight(t, m);
                const SegmentCoeffs c = right_segment(tau0 - t, tau1 - t, e, g.h);
                w[j] += wt * c.cj;
                w[j + 1] += wt * c.cj1;
            }
        }
    });
    return table;
}

SampledFunction KernelTable::apply(const SampledFunction& density) const {
    if (!same_grid(density.grid(), *grid_))
        throw DomainError("kernel table applied to a function on a different grid");
    std::vector<double> out(static_cast<std::size_t>(dim_), 0.0);
    const auto f = density.values();
    parallel_for(static_cast<std::size_t>(dim_), [&](std::size_t i) {
        const double* w = row(static_cast<int>(i));
        // Left rows occupy columns 0..i, right rows i..n; scanning the full
        // row keeps the code simple and the zero tail costs little here.
        const int lo = side_ == Side::Left ? 0 : static_cast<int>(i);
        const int hi = side_ == Side::Left ? static_cast<int>(i) : dim_ - 1;
        long double acc = 0.0L;
        for (int j = lo; j <= hi; ++j) acc += static_cast<long double>(w[j]) * f[static_cast<std::size_t>(j)];
        out[i] = static_cast<double>(acc);
    });
    return SampledFunction(grid_, std::move(out));
}

} // namespace varfrac
