#include "hypsum/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "hypsum/compensated.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/specialfn.hpp"
#include "double_double.hpp"

namespace hypsum {

namespace {

// Number of 1/n corrections kept in the large-n expansion of t_n.
constexpr unsigned kExpansionOrder = 24;

double bernoulli_polynomial(unsigned n, double x) {
  // B_n(x) = sum_m C(n, m) B_m x^{n-m}
  double result = 0.0;
  double binom = 1.0;
  for (unsigned m = 0; m <= n; ++m) {
    const double bm = detail::bernoulli(m);
    if (bm != 0.0) result += binom * bm * std::pow(x, static_cast<double>(n - m));
    binom = binom * static_cast<double>(n - m) / static_cast<double>(m + 1);
  }
  return result;
}

// Large-n behaviour of the unit-argument term of a p = q+1 series:
//   t_n ~ C n^{-1-s} sum_j e_j n^{-j},
// from the Stirling expansion of ln Gamma(n + x) with Bernoulli polynomials.
class TailExpansion {
 public:
  TailExpansion(const SeriesSpec& spec, double margin) : margin_(margin) {
    std::array<double, kExpansionOrder + 1> d{};
    for (unsigned k = 1; k <= kExpansionOrder; ++k) {
      double acc = -bernoulli_polynomial(k + 1, 1.0);
      for (double a : spec.numerators) acc += bernoulli_polynomial(k + 1, a);
      for (double b : spec.denominators) acc -= bernoulli_polynomial(k + 1, b);
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      d[k] = sign * acc / (static_cast<double>(k) * (k + 1));
    }
    coeff_[0] = 1.0;
    for (unsigned j = 1; j <= kExpansionOrder; ++j) {
      double acc = 0.0;
      for (unsigned k = 1; k <= j; ++k) acc += k * d[k] * coeff_[j - k];
      coeff_[j] = acc / j;
    }
  }

  struct Remainder {
    double value;
    double truncation_error;
  };

  /// sum_{n >= N} t_n given the exact term t_N.
  Remainder remainder(std::uint64_t first_index, double first_term) const {
    const double n = static_cast<double>(first_index);
    const double w = 1.0 / n;
    double norm = 0.0;
    double weighted = 0.0;
    double last = 0.0;
    double before_last = 0.0;
    double wj = 1.0;
    for (unsigned j = 0; j <= kExpansionOrder; ++j) {
      const double scaled = coeff_[j] * wj;
      const double contribution = scaled * detail::hurwitz_zeta_scaled(1.0 + margin_ + j, n);
      norm += scaled;
      weighted += contribution;
      before_last = last;
      last = contribution;
      wj *= w;
    }
    const double factor = first_term / norm;
    return {factor * weighted, std::fabs(factor) * (std::fabs(last) + std::fabs(before_last))};
  }

 private:
  double margin_;
  std::array<double, kExpansionOrder + 1> coeff_{};
};

double max_abs_parameter(const SeriesSpec& spec) {
  double m = 0.0;
  for (double a : spec.numerators) m = std::max(m, std::fabs(a));
  for (double b : spec.denominators) m = std::max(m, std::fabs(b));
  return m;
}

}  // namespace

std::optional<std::uint64_t> SeriesSpec::termination_index() const {
  std::optional<std::uint64_t> index;
  for (double a : numerators) {
    if (is_nonpositive_integer(a)) {
      const auto k = static_cast<std::uint64_t>(-a);
      if (!index || k < *index) index = k;
    }
  }
  return index;
}

std::string_view to_string(SummationStatus status) {
  switch (status) {
    case SummationStatus::Converged:
      return "Converged";
    case SummationStatus::Terminated:
      return "Terminated";
    case SummationStatus::MaxTermsReached:
      return "MaxTermsReached";
  }
  return "?";
}

SummationStatus summation_status_from_string(std::string_view text) {
  if (text == "Converged") return SummationStatus::Converged;
  if (text == "Terminated") return SummationStatus::Terminated;
  if (text == "MaxTermsReached") return SummationStatus::MaxTermsReached;
  throw ConfigError("unknown summation status '" + std::string(text) + "'");
}

double convergence_margin(const SeriesSpec& spec) {
  const double lower = std::accumulate(spec.denominators.begin(), spec.denominators.end(), 0.0);
  const double upper = std::accumulate(spec.numerators.begin(), spec.numerators.end(), 0.0);
  return lower - upper;
}

namespace {

// Terminating sums cancel freely (alternating signs from the -k numerator),
// so terms and partial sums are carried in double-double.
SummationResult sum_terminating(const SeriesSpec& spec, std::uint64_t last) {
  using detail::DoubleDouble;
  DoubleDouble sum;
  DoubleDouble term(1.0);
  for (std::uint64_t n = 0;; ++n) {
    sum += term;
    if (n == last) break;
    const double shift = static_cast<double>(n);
    for (double a : spec.numerators) term *= DoubleDouble(a) + DoubleDouble(shift);
    for (double b : spec.denominators) term = term / (DoubleDouble(b) + DoubleDouble(shift));
    term = term / DoubleDouble(shift + 1.0);
  }
  SummationResult result;
  result.value = sum.value();
  result.terms_used = last + 1;
  result.status = SummationStatus::Terminated;
  return result;
}

}  // namespace

SummationResult sum_series(const SeriesSpec& spec, double rel_tol, std::uint64_t max_terms) {
  if (!(rel_tol > 0.0)) throw ConfigError("rel_tol must be positive");
  if (max_terms == 0) throw ConfigError("max_terms must be positive");

  const std::size_t p = spec.numerators.size();
  const std::size_t q = spec.denominators.size();
  const auto stop_index = spec.termination_index();
  const double margin = convergence_margin(spec);

  for (double b : spec.denominators) {
    if (is_nonpositive_integer(b)) {
      const auto zero_at = static_cast<std::uint64_t>(-b);
      if (!stop_index || zero_at < *stop_index) {
        throw DegenerateError("lower parameter " + std::to_string(b) +
                              " reaches zero before the series terminates");
      }
    }
  }

  if (!stop_index) {
    if (p > q + 1) {
      throw DivergenceError("non-terminating " + std::to_string(p) + "F" + std::to_string(q) +
                            " diverges at unit argument");
    }
    if (p == q + 1 && !(margin > 0.0)) {
      throw DivergenceError("convergence margin s = " + std::to_string(margin) +
                            " <= 0 for a non-terminating series");
    }
  }
  if (stop_index && *stop_index < max_terms) return sum_terminating(spec, *stop_index);

  const bool asymptotic = !stop_index && p == q + 1;
  std::optional<TailExpansion> expansion;
  if (asymptotic) expansion.emplace(spec, margin);
  const double accept_tol = std::max(1e-3 * rel_tol, 1e-17);
  const auto first_checkpoint = static_cast<std::uint64_t>(
      std::max(64.0, std::ceil(4.0 * (1.0 + max_abs_parameter(spec)))));
  std::uint64_t checkpoint = first_checkpoint;

  CompensatedSum sum;
  SummationResult result;
  double term = 1.0;
  int small_run = 0;

  auto finish_p_eq_q1 = [&](std::uint64_t n_summed, double next_term, SummationStatus status,
                            bool with_remainder) {
    result.value = sum.value();
    result.terms_used = n_summed;
    result.status = status;
    result.tail_estimate = std::fabs(next_term) * (static_cast<double>(n_summed) + 1.0) / margin;
    if (with_remainder && n_summed >= first_checkpoint) {
      result.remainder = expansion->remainder(n_summed, next_term).value;
      result.value += result.remainder;
    }
    return result;
  };

  for (std::uint64_t n = 0;; ++n) {
    if (n == max_terms) {
      if (asymptotic) return finish_p_eq_q1(n, term, SummationStatus::MaxTermsReached, true);
      result.value = sum.value();
      result.terms_used = n;
      result.status = SummationStatus::MaxTermsReached;
      result.tail_estimate = std::fabs(term);
      return result;
    }

    sum += term;
    if (stop_index && n == *stop_index) {
      result.value = sum.value();
      result.terms_used = n + 1;
      result.status = SummationStatus::Terminated;
      result.tail_estimate = 0.0;
      return result;
    }

    const double shift = static_cast<double>(n);
    double ratio = 1.0 / (shift + 1.0);
    for (std::size_t i = 0; i < std::max(p, q); ++i) {
      if (i < p) ratio *= spec.numerators[i] + shift;
      if (i < q) ratio /= spec.denominators[i] + shift;
    }
    const double next = term * ratio;

    if (asymptotic && n + 1 == checkpoint) {
      const auto tail = expansion->remainder(n + 1, next);
      const double total = sum.value() + tail.value;
      if (tail.truncation_error <= accept_tol * std::fabs(total)) {
        result = finish_p_eq_q1(n + 1, next, SummationStatus::Converged, false);
        result.remainder = tail.value;
        result.value = total;
        return result;
      }
      checkpoint *= 2;
    }

    if (n >= 20 && std::fabs(term) <= rel_tol * std::fabs(sum.value())) {
      if (++small_run >= 3) {
        if (asymptotic) return finish_p_eq_q1(n + 1, next, SummationStatus::Converged, true);
        result.value = sum.value();
        result.terms_used = n + 1;
        result.status = SummationStatus::Converged;
        const double rho = std::fabs(ratio);
        result.tail_estimate = rho < 1.0 ? std::fabs(next) / (1.0 - rho) : std::fabs(next);
        return result;
      }
    } else {
      small_run = 0;
    }
    term = next;
  }
}

SeriesSpec ramanujan_mu_terms(double b, double mu) {
  if (!(b > 0.0) || !(mu > 0.0)) {
    throw DomainError("ramanujan_mu_terms requires b > 0 and mu > 0");
  }
  const double ratio = b / mu;
  return SeriesSpec{{0.5, ratio}, {ratio + 1.0}};
}

}  // namespace hypsum
