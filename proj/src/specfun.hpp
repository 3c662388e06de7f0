#ifndef VARFRAC_SPECFUN_HPP
#define VARFRAC_SPECFUN_HPP

namespace varfrac::specfun {

/// Gamma function for x > 0. Lanczos approximation (g = 7, 9 coefficients,
/// the fixed double-precision set published by Godfrey); relative error is
/// below 1e-12 on (0, 2], the range the kernel weights actually use.
/// Throws DomainError for x <= 0.
double gamma(double x);

/// The algebraic lower bound (x^2 + 1) / (x + 1) for Gamma(x + 1), valid on
/// x in [0, 1]. Throws DomainError outside [0, 1].
double gamma_lower_bound(double x);

} // namespace varfrac::specfun

#endif
