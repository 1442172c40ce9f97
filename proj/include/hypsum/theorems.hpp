#pragma once

#include <span>
#include <vector>

namespace hypsum {

/// An upper/lower parameter pair (f + m) over (f) of a Karlsson-Minton
/// series. `shift` is the positive integer m.
struct ShiftedPair {
  double f = 0.0;
  unsigned shift = 1;

  friend bool operator==(const ShiftedPair&, const ShiftedPair&) = default;
};

/// Sum of shifts m = m_1 + ... + m_r.
unsigned total_shift(std::span<const ShiftedPair> pairs);

/// Gauss: 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
/// Requires c - a - b > 0. Symmetric in (a, b) bit for bit.
double gauss_2f1(double a, double b, double c);

/// Dixon: 3F2[a, b, c; 1+a-b, 1+a-c; 1]. Requires a/2 - b - c > -1.
double dixon_3f2(double a, double b, double c);

/// 3F2[a, b, c; b+m, c+1; 1] through the finite contiguous formula
///
///   c Gamma(1-a) (b)_m / (b-c)_m * { Gamma(c)/Gamma(1+c-a)
///       - Gamma(b)/Gamma(1+b-a) sum_{k<m} (1-a)_k (b-c)_k / ((1+b-a)_k k!) }.
///
/// Requires m + 1 - a > 0. DegenerateError when (b-c)_m = 0.
double contiguous_3f2(double a, double b, double c, unsigned m);

/// sum_n (1/2)_n / n! / ((1 + n/b)(1 + n/c)) = 3F2[1/2, b, c; b+1, c+1; 1].
///
/// For |b - c| < 1e-8 max(b, c) the digamma limit is evaluated at the
/// midpoint: sqrt(pi) b^2 Gamma(b)/Gamma(b+1/2) (psi(b+1/2) - psi(b)).
/// Up to |b - c| <= 0.02 min(b, c) the two-gamma difference is replaced by
/// its polygamma Taylor expansion about the midpoint, which avoids the
/// cancellation and joins the digamma limit continuously.
double ratio_sum_extension(double b, double c);

/// 1/b + (1/2)/(b+mu) + (1.3/2.4)/(b+2mu) + ... = sqrt(pi) Gamma(b/mu) / (mu Gamma(b/mu + 1/2)).
double mu_spaced_sum(double b, double mu);

/// C_k(r) = (-1)^k / k! * (r+1)F(r)[-k, (f+m); (f); 1], summed as the
/// terminating series of k+1 terms. Requires k <= total_shift(pairs).
double ck_coefficient(unsigned k, std::span<const ShiftedPair> pairs);

/// (r+2)F(r+1)[a, b, (f_i + m_i); c, (f_i); 1] by the Karlsson-Minton
/// formula: Gauss(a, b, c) * sum_{k=0}^m (-1)^k (a)_k (b)_k C_k / (1+a+b-c)_k.
/// Requires c - a - b > m.
double karlsson_minton(double a, double b, double c, std::span<const ShiftedPair> pairs);

/// S_p = sum_n ((1/2)_n/n!)^2 / ((n+1)...(n+p)) = Gamma(p) / Gamma(p+1/2)^2.
double s_p(int p);

/// Weight (n+f): Gamma(p)/Gamma^2(p+1/2) (f + 1/(4(p-1))), p >= 2.
double weighted_s1(int p, double f);

/// Weight (n+f)(n+f+1), p >= 3.
double weighted_s2(int p, double f);

/// Weight (n+f1)(n+f2), p >= 3.
double weighted_pair(int p, double f1, double f2);

}  // namespace hypsum
