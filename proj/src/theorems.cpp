#include "hypsum/theorems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hypsum/compensated.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/specialfn.hpp"
#include "double_double.hpp"
#include "text.hpp"

namespace hypsum {

namespace {

using detail::short_number;

const double kSqrtPi = std::sqrt(std::numbers::pi);

void require_p(int p, int minimum, const char* what) {
  if (p < minimum) {
    throw PreconditionError(std::string(what) + " requires p >= " + std::to_string(minimum) +
                            ", got " + std::to_string(p));
  }
}

void validate_pairs(std::span<const ShiftedPair> pairs) {
  for (const auto& pair : pairs) {
    if (pair.shift == 0) {
      throw DegenerateError("shifted pair (" + short_number(pair.f) + ", 0) needs a positive shift");
    }
    // Also covers f + k = 0 for k < m, since that needs f to be 0, -1, ...
    if (is_nonpositive_integer(pair.f)) {
      throw DegenerateError("shifted pair lower parameter f = " + short_number(pair.f) +
                            " is a nonpositive integer");
    }
  }
}

}  // namespace

unsigned total_shift(std::span<const ShiftedPair> pairs) {
  unsigned m = 0;
  for (const auto& pair : pairs) m += pair.shift;
  return m;
}

double gauss_2f1(double a, double b, double c) {
  if (b < a) std::swap(a, b);
  const double margin = c - a - b;
  if (!(margin > 0.0)) {
    throw PreconditionError("c-a-b>0 violated: " + short_number(margin) + " <= 0");
  }
  return gamma_ratio({c, margin}, {c - a, c - b});
}

double dixon_3f2(double a, double b, double c) {
  const double half = 1.0 + a / 2.0;
  const double whole = 1.0 + a;
  const double condition = a / 2.0 - b - c;
  if (!(condition > -1.0)) {
    throw PreconditionError("a/2-b-c>-1 violated: " + short_number(condition) + " <= -1");
  }
  return gamma_ratio({half, whole - b, whole - c, (half - b) - c},
                     {whole, half - b, half - c, (whole - b) - c});
}

double contiguous_3f2(double a, double b, double c, unsigned m) {
  if (m == 0) throw PreconditionError("m>=1 violated: m = 0");
  const double margin = static_cast<double>(m) + 1.0 - a;
  if (!(margin > 0.0)) {
    throw PreconditionError("m+1-a>0 violated: " + short_number(margin) + " <= 0");
  }
  const double diff = b - c;
  const double diff_m = pochhammer(diff, m);
  if (diff_m == 0.0) {
    throw DegenerateError("(b-c)_m = 0 with b-c = " + short_number(diff) + ", m = " +
                          std::to_string(m));
  }

  CompensatedSum partial;
  double term = 1.0;
  for (unsigned k = 0; k < m; ++k) {
    partial += term;
    const double kd = static_cast<double>(k);
    term *= (1.0 - a + kd) * (diff + kd) / ((1.0 + b - a + kd) * (kd + 1.0));
  }

  const double first = gamma_ratio({1.0 - a, c}, {1.0 + c - a});
  const double second = gamma_ratio({1.0 - a, b}, {1.0 + b - a});
  return c * pochhammer(b, m) / diff_m * (first - second * partial.value());
}

namespace {

// sqrt(pi) bc/(b-c) (g(c) - g(b)) with g = Gamma(x)/Gamma(x+1/2), expanded
// about m = (b+c)/2 in d = (c-b)/2. With h = ln g,
//   g(m+d) - g(m-d) = 2 g(m) exp(E) sinh(O),
// E and O being the even and odd parts of the Taylor series of h(m+d) - h(m).
// At d = 0 this is the digamma limit, so the expansion is continuous with it.
double ratio_sum_near_diagonal(double m, double d) {
  std::array<double, 9> h{};  // h[j] = h^(j)(m)
  h[1] = digamma(m) - digamma(m + 0.5);
  for (unsigned j = 2; j < h.size(); ++j) {
    h[j] = detail::polygamma(j - 1, m) - detail::polygamma(j - 1, m + 0.5);
  }
  const double d2 = d * d;
  const double odd_over_d = h[1] + d2 * (h[3] / 6 + d2 * (h[5] / 120 + d2 * h[7] / 5040));
  const double even = d2 * (h[2] / 2 + d2 * (h[4] / 24 + d2 * (h[6] / 720 + d2 * h[8] / 40320)));
  const double odd = d * odd_over_d;
  const double sinhc = std::fabs(odd) < 1e-4 ? 1.0 + odd * odd / 6.0 : std::sinh(odd) / odd;
  const double b = m - d;
  const double c = m + d;
  return -kSqrtPi * b * c * gamma_ratio({m}, {m + 0.5}) * std::exp(even) * sinhc * odd_over_d;
}

}  // namespace

double ratio_sum_extension(double b, double c) {
  if (!(b > 0.0) || !(c > 0.0)) {
    throw DomainError("ratio_sum_extension requires b > 0 and c > 0");
  }
  if (std::fabs(b - c) < 1e-8 * std::max(b, c)) {
    return ratio_sum_near_diagonal(0.5 * (b + c), 0.0);
  }
  if (std::fabs(b - c) <= 0.02 * std::min(b, c)) {
    return ratio_sum_near_diagonal(0.5 * (b + c), 0.5 * (c - b));
  }
  return kSqrtPi * b * c / (b - c) *
         (gamma_ratio({c}, {c + 0.5}) - gamma_ratio({b}, {b + 0.5}));
}

double mu_spaced_sum(double b, double mu) {
  if (!(b > 0.0) || !(mu > 0.0)) throw DomainError("mu_spaced_sum requires b > 0 and mu > 0");
  const double ratio = b / mu;
  return kSqrtPi * gamma_ratio({ratio}, {ratio + 0.5}) / mu;
}

double ck_coefficient(unsigned k, std::span<const ShiftedPair> pairs) {
  validate_pairs(pairs);
  const unsigned m = total_shift(pairs);
  if (k > m) {
    throw PreconditionError("k<=m violated: k = " + std::to_string(k) + ", m = " +
                            std::to_string(m));
  }
  // Terms of (r+1)F(r)[-k, (f+m); (f); 1] with the sign of (-k)_n kept as an
  // exact +-1: (-k)_n / n! = (-1)^n C(k, n). The alternating sum cancels
  // heavily for large f, so terms and sum are carried in double-double.
  using detail::DoubleDouble;
  DoubleDouble sum;
  DoubleDouble term(1.0);
  for (unsigned n = 0; n <= k; ++n) {
    sum += (n % 2 == 0) ? term : -term;
    if (n == k) break;
    const double nd = static_cast<double>(n);
    DoubleDouble factor = DoubleDouble(static_cast<double>(k - n)) / DoubleDouble(nd + 1.0);
    for (const auto& pair : pairs) {
      const DoubleDouble f(pair.f);
      factor *= (f + DoubleDouble(pair.shift + nd)) / (f + DoubleDouble(nd));
    }
    term *= factor;
  }
  // (-1)^k / k!
  DoubleDouble scale(k % 2 == 0 ? 1.0 : -1.0);
  for (unsigned j = 2; j <= k; ++j) scale = scale / DoubleDouble(static_cast<double>(j));
  return (scale * sum).value();
}

double karlsson_minton(double a, double b, double c, std::span<const ShiftedPair> pairs) {
  validate_pairs(pairs);
  const unsigned m = total_shift(pairs);
  const double margin = c - a - b;
  if (!(margin > static_cast<double>(m))) {
    throw PreconditionError("c-a-b>m violated: " + short_number(margin) + " <= " +
                            std::to_string(m));
  }
  const double lower = 1.0 + a + b - c;
  if (is_nonpositive_integer(lower) && -lower < static_cast<double>(m)) {
    throw DegenerateError("(1+a+b-c)_k vanishes for k <= m");
  }

  CompensatedSum sum;
  double factor = 1.0;  // (-1)^k (a)_k (b)_k / (1+a+b-c)_k
  for (unsigned k = 0; k <= m; ++k) {
    sum += factor * ck_coefficient(k, pairs);
    const double kd = static_cast<double>(k);
    factor *= -(a + kd) * (b + kd) / (lower + kd);
  }
  return gauss_2f1(a, b, c) * sum.value();
}

double s_p(int p) {
  require_p(p, 1, "s_p");
  const double pd = static_cast<double>(p);
  return gamma_ratio({pd}, {pd + 0.5, pd + 0.5});
}

double weighted_s1(int p, double f) {
  require_p(p, 2, "weighted_s1");
  return s_p(p) * (f + 1.0 / (4.0 * (p - 1)));
}

double weighted_s2(int p, double f) {
  require_p(p, 3, "weighted_s2");
  const double pm1 = p - 1;
  const double pm2 = p - 2;
  return s_p(p) * (f * (f + 1.0) + (f + 1.0) / (2.0 * pm1) + 9.0 / (16.0 * pm1 * pm2));
}

double weighted_pair(int p, double f1, double f2) {
  require_p(p, 3, "weighted_pair");
  const double pm1 = p - 1;
  const double pm2 = p - 2;
  return s_p(p) * (f1 * f2 + (f1 + f2 + 1.0) / (4.0 * pm1) + 9.0 / (16.0 * pm1 * pm2));
}

}  // namespace hypsum
