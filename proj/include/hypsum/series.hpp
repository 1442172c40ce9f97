#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hypsum {

/// A generalized hypergeometric series pFq at unit argument.
///
/// `numerators` are a_1..a_p and `denominators` are b_1..b_q. The n! of the
/// hypergeometric term is implicit and never appears in `denominators`.
struct SeriesSpec {
  std::vector<double> numerators;
  std::vector<double> denominators;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;

  /// Index k such that the series stops after t_k, when some numerator is a
  /// nonpositive integer -k.
  std::optional<std::uint64_t> termination_index() const;
};

enum class SummationStatus { Converged, Terminated, MaxTermsReached };

std::string_view to_string(SummationStatus status);
SummationStatus summation_status_from_string(std::string_view text);

struct SummationResult {
  double value = 0.0;
  std::uint64_t terms_used = 0;
  /// Crude size of the part of the series not summed term by term:
  /// |t_N| (N+1) / s for p = q+1, a geometric bound for p <= q, 0 when
  /// the series terminated.
  double tail_estimate = 0.0;
  /// Asymptotic remainder sum_{n >= N} t_n already included in `value`.
  double remainder = 0.0;
  SummationStatus status = SummationStatus::Converged;

  friend bool operator==(const SummationResult&, const SummationResult&) = default;
};

inline constexpr std::uint64_t kDefaultMaxTerms = 10'000'000;

/// s = sum(denominators) - sum(numerators). For a non-terminating series
/// with p = q+1 this converges iff s > 0.
double convergence_margin(const SeriesSpec& spec);

/// Sums t_0 = 1, t_{n+1} = t_n prod(a_i + n) / (prod(b_j + n) (n + 1)).
///
/// Terms are accumulated with Neumaier compensation. For a non-terminating
/// p = q+1 series the terms behave like C n^{-1-s} (1 + e_1/n + ...); once
/// that expansion is accurate to well below `rel_tol`, the remaining terms
/// are added in closed form (Hurwitz zeta sums) and summation stops. Other
/// series stop after three consecutive terms below rel_tol * |sum| with
/// n >= 20.
///
/// Throws DivergenceError for a non-terminating series with p > q+1, or
/// p = q+1 and margin <= 0. Throws DegenerateError when a lower parameter
/// b_j + n reaches zero before termination.
SummationResult sum_series(const SeriesSpec& spec, double rel_tol,
                           std::uint64_t max_terms = kDefaultMaxTerms);

/// The 2F1 whose sum, divided by b, is 1/b + (1/2)/(b+mu) + (1.3/2.4)/(b+2mu) + ...
/// i.e. {1/2, b/mu; b/mu + 1}. DomainError unless b > 0 and mu > 0.
SeriesSpec ramanujan_mu_terms(double b, double mu);

}  // namespace hypsum
