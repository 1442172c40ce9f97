#pragma once

#include <span>

namespace hypsum {

/// True when x is 0, -1, -2, ... exactly.
bool is_nonpositive_integer(double x) noexcept;

/// Gamma function. Lanczos (g = 6.0247, 13 terms) for x >= 0.5, reflection
/// below. Exact factorials for positive integers up to 171.
/// Throws PoleError at nonpositive integers and OverflowError past 171.62.
double gamma(double x);

/// ln Gamma(x) for x > 0; DomainError otherwise.
double log_gamma(double x);

/// Logarithmic derivative of gamma. PoleError at nonpositive integers.
double digamma(double x);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), multiplied left to right.
double pochhammer(double x, unsigned n);

/// prod Gamma(numerators) / prod Gamma(denominators).
///
/// Both lists are sorted in decreasing order and paired element by element,
/// so large arguments are differenced against each other before anything is
/// multiplied. Negative non-integer arguments are handled through the
/// reflection formula with explicit sign tracking.
double gamma_ratio(std::span<const double> numerators,
                   std::span<const double> denominators);

double gamma_ratio(std::initializer_list<double> numerators,
                   std::initializer_list<double> denominators);

namespace detail {

/// Hurwitz zeta scaled by N^s: sum_{n >= N} (n / N)^{-s}, for s > 1 and
/// N >= 16. Euler-Maclaurin with ten Bernoulli corrections.
double hurwitz_zeta_scaled(double s, double N);

/// n-th derivative of digamma for x > 0 (n <= 20). Upward recurrence to
/// x >= 20, then the asymptotic series.
double polygamma(unsigned n, double x);

/// Bernoulli number B_n for n <= 40 (B_1 = -1/2).
double bernoulli(unsigned n);

/// sin(pi x) with exact argument reduction.
double sin_pi(double x);

}  // namespace detail

}  // namespace hypsum
