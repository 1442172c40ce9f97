#include "hypsum/specialfn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "hypsum/errors.hpp"

namespace hypsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
constexpr double kMaxGammaArg = 171.61447887182298;

// B_0 ... B_40, odd entries beyond B_1 are zero.
constexpr std::array<double, 41> kBernoulli = {
    1.0, -0.5, 0.16666666666666666, 0.0, -0.033333333333333333, 0.0,
    0.023809523809523808, 0.0, -0.033333333333333333, 0.0,
    0.07575757575757576, 0.0, -0.2531135531135531, 0.0, 1.1666666666666667,
    0.0, -7.0921568627450977, 0.0, 54.971177944862156, 0.0,
    -529.12424242424242, 0.0, 6192.123188405797, 0.0, -86580.253113553117,
    0.0, 1425517.1666666667, 0.0, -27298231.067816094, 0.0,
    601580873.9006424, 0.0, -15116315767.092157, 0.0, 429614643061.16669,
    0.0, -13711655205088.332, 0.0, 488332318973593.19, 0.0,
    -19296579341940068.0};

// lanczos13m53: g and the rational L(z) with denominator z(z+1)...(z+11).
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626};
constexpr std::array<double, 13> kLanczosDen = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,    66.0,       1.0};

double lanczos_sum(double z) {
  // Evaluate in 1/z for large z so z^12 stays far from overflow.
  double num = 0.0;
  double den = 0.0;
  if (z <= 1.0) {
    for (std::size_t i = kLanczosNum.size(); i-- > 0;) {
      num = num * z + kLanczosNum[i];
      den = den * z + kLanczosDen[i];
    }
  } else {
    const double w = 1.0 / z;
    for (std::size_t i = 0; i < kLanczosNum.size(); ++i) {
      num = num * w + kLanczosNum[i];
      den = den * w + kLanczosDen[i];
    }
  }
  return num / den;
}

// Gamma(n) for n = 1 ... 23 is exactly representable.
constexpr std::array<double, 23> kFactorials = [] {
  std::array<double, 23> f{};
  f[0] = 1.0;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * static_cast<double>(i);
  return f;
}();

double gamma_positive(double x) {
  if (x == std::floor(x) && x <= static_cast<double>(kFactorials.size())) {
    return kFactorials[static_cast<std::size_t>(x) - 1];
  }
  if (x > kMaxGammaArg) {
    throw OverflowError("gamma(" + std::to_string(x) + ") exceeds binary64 range");
  }
  const double zgh = x + kLanczosG - 0.5;
  double result = lanczos_sum(x);
  if (x * std::log(zgh) > 700.0) {
    const double half_power = std::pow(zgh, x / 2.0 - 0.25);
    result *= half_power / std::exp(zgh);
    result *= half_power;
  } else {
    result *= std::pow(zgh, x - 0.5) / std::exp(zgh);
  }
  return result;
}

double cos_pi(double x) { return detail::sin_pi(x + 0.5); }

// zeta(k) - 1 for k = 2 ... 41, summed directly to 20 then closed with the
// Euler-Maclaurin tail.
const std::array<double, 42>& zeta_minus_one() {
  static const std::array<double, 42> table = [] {
    std::array<double, 42> z{};
    for (unsigned k = 2; k < z.size(); ++k) {
      const double s = static_cast<double>(k);
      double tail = std::pow(20.0, -s) * detail::hurwitz_zeta_scaled(s, 20.0);
      double head = 0.0;
      for (int n = 19; n >= 2; --n) head += std::pow(static_cast<double>(n), -s);
      z[k] = head + tail;
    }
    return z;
  }();
  return table;
}

// ln Gamma(2 + z) for |z| <= 0.5:
// (1 - gamma) z + sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k.
double log_gamma_near_two(double z) {
  const auto& zm1 = zeta_minus_one();
  double sum = 0.0;
  double zk = -z;
  for (unsigned k = 2; k < zm1.size(); ++k) {
    zk *= -z;
    const double term = zm1[k] * zk / static_cast<double>(k);
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return (1.0 - kEulerGamma) * z + sum;
}

double log_gamma_stirling(double x) {
  constexpr double kHalfLog2Pi = 0.91893853320467274178;
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double correction = 0.0;
  double power = inv;
  for (unsigned k = 1; k <= 9; ++k) {
    correction += kBernoulli[2 * k] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + correction;
}

// ln|Gamma(x)| and sign for any non-pole x.
struct SignedLog {
  double log_abs;
  int sign;
};

SignedLog signed_log_gamma(double x) {
  if (x > 0.0) return {log_gamma(x), 1};
  const double s = detail::sin_pi(x);
  return {std::log(kPi) - std::log(std::fabs(s)) - log_gamma(1.0 - x),
          s < 0.0 ? -1 : 1};
}

void require_not_pole(double x, const char* what) {
  if (is_nonpositive_integer(x)) {
    throw PoleError(std::string(what) + " pole at nonpositive integer " +
                    std::to_string(static_cast<long long>(x)));
  }
  if (std::isnan(x)) throw DomainError(std::string(what) + " of NaN");
}

}  // namespace

bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && x == std::floor(x);
}

double detail::bernoulli(unsigned n) {
  if (n >= kBernoulli.size()) throw DomainError("bernoulli index above 40");
  return kBernoulli[n];
}

double detail::sin_pi(double x) {
  // Reduce to r in [-1, 1) with sin(pi x) = sin(pi r); fmod is exact.
  double r = std::fmod(x, 2.0);
  if (r >= 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == -1.0) return 0.0;
  const double sign = r < 0.0 ? -1.0 : 1.0;
  r = std::fabs(r);  // (0, 1)
  if (r > 0.5) r = 1.0 - r;
  if (r == 0.5) return sign;
  return sign * (r <= 0.25 ? std::sin(kPi * r) : std::cos(kPi * (0.5 - r)));
}

double detail::hurwitz_zeta_scaled(double s, double N) {
  // N^s zeta(s, N) = N/(s-1) + 1/2 + sum_k B_2k/(2k)! (s)_{2k-1} N^{1-2k}
  double sum = N / (s - 1.0) + 0.5;
  double rising = s;       // (s)_{2k-1}
  double factorial = 2.0;  // (2k)!
  double npow = 1.0 / N;   // N^{1-2k}
  for (unsigned k = 1; k <= 10; ++k) {
    const double term = kBernoulli[2 * k] / factorial * rising * npow;
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    npow /= N * N;
  }
  return sum;
}

double gamma(double x) {
  require_not_pole(x, "gamma");
  if (x >= 0.5) return gamma_positive(x);
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
  const double s = detail::sin_pi(x);
  const double reflected = 1.0 - x;
  if (reflected > kMaxGammaArg) {
    const double log_abs = std::log(kPi) - std::log(std::fabs(s)) - log_gamma(reflected);
    return (s < 0.0 ? -1.0 : 1.0) * std::exp(log_abs);
  }
  const double denom = s * gamma_positive(reflected);
  const double result = kPi / denom;
  if (!std::isfinite(result)) {
    throw OverflowError("gamma(" + std::to_string(x) + ") exceeds binary64 range");
  }
  return result;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
  if (x == std::floor(x) && x <= static_cast<double>(kFactorials.size())) {
    return std::log(kFactorials[static_cast<std::size_t>(x) - 1]);
  }
  if (x >= 10.0) return log_gamma_stirling(x);
  if (x >= 1.5 && x <= 2.5) return log_gamma_near_two(x - 2.0);
  if (x >= 0.5 && x < 1.5) return log_gamma_near_two(x - 1.0) - std::log1p(x - 1.0);
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  return std::log(gamma_positive(x));
}

double digamma(double x) {
  require_not_pole(x, "digamma");
  if (x < 0.0) {
    // psi(x) = psi(1 - x) - pi cot(pi x)
    return digamma(1.0 - x) - kPi * cos_pi(x) / detail::sin_pi(x);
  }
  double shift = 0.0;
  while (x < 6.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double power = inv2;
  for (unsigned k = 1; k <= 12; ++k) {
    series += kBernoulli[2 * k] / (2.0 * k) * power;
    power *= inv2;
  }
  return std::log(x) - 0.5 / x - series - shift;
}

double detail::polygamma(unsigned n, double x) {
  if (n == 0) return digamma(x);
  if (!(x > 0.0)) throw DomainError("polygamma requires x > 0");
  if (n > 20) throw DomainError("polygamma order above 20");
  // psi^(n)(x) = psi^(n)(x+1) - (-1)^n n! / x^(n+1); all shift terms share one sign.
  const double n_factorial = std::tgamma(n + 1.0);
  double shift = 0.0;
  while (x < 20.0) {
    shift += n_factorial / std::pow(x, n + 1.0);
    x += 1.0;
  }
  // (-1)^(n+1) [ (n-1)!/x^n + n!/(2 x^(n+1)) + sum_k B_2k (2k+n-1)! / ((2k)! x^(2k+n)) ]
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double coeff = 0.0;
  double power = std::pow(inv, n + 2.0);
  for (unsigned k = 1; k <= 10; ++k) {
    // coeff = (2k+n-1)! / (2k)!
    coeff = k == 1 ? n_factorial * (n + 1.0) / 2.0
                   : coeff * (2.0 * k + n - 2.0) * (2.0 * k + n - 1.0) / ((2.0 * k - 1.0) * 2.0 * k);
    series += kBernoulli[2 * k] * coeff * power;
    power *= inv2;
  }
  const double magnitude =
      n_factorial / n * std::pow(inv, n) + 0.5 * n_factorial * std::pow(inv, n + 1.0) + series;
  const double sign = n % 2 == 1 ? 1.0 : -1.0;
  return sign * (magnitude + shift);
}

double pochhammer(double x, unsigned n) {
  double result = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    result *= x + static_cast<double>(k);
  }
  if (!std::isfinite(result)) {
    throw OverflowError("pochhammer(" + std::to_string(x) + ", " + std::to_string(n) +
                        ") exceeds binary64 range");
  }
  return result;
}

double gamma_ratio(std::span<const double> numerators,
                   std::span<const double> denominators) {
  for (double v : numerators) require_not_pole(v, "gamma_ratio");
  for (double v : denominators) require_not_pole(v, "gamma_ratio");

  std::vector<double> num(numerators.begin(), numerators.end());
  std::vector<double> den(denominators.begin(), denominators.end());
  std::sort(num.begin(), num.end(), std::greater<>());
  std::sort(den.begin(), den.end(), std::greater<>());

  // Running product kept as mantissa * 2^exponent.
  double mantissa = 1.0;
  long exponent = 0;
  auto absorb = [&](double factor) {
    int e = 0;
    mantissa *= std::frexp(factor, &e);
    exponent += e;
    int renorm = 0;
    mantissa = std::frexp(mantissa, &renorm);
    exponent += renorm;
  };
  auto direct_ok = [](double v) { return v > -170.0 && v < 170.0; };
  auto from_log = [&](const SignedLog& l) {
    // exp of a possibly huge logarithm, split through ldexp.
    const double log2v = l.log_abs / std::numbers::ln2;
    const double whole = std::floor(log2v);
    absorb(l.sign * std::exp2(log2v - whole));
    exponent += static_cast<long>(whole);
  };

  const std::size_t paired = std::min(num.size(), den.size());
  for (std::size_t i = 0; i < paired; ++i) {
    const double a = num[i];
    const double b = den[i];
    if (a == b) continue;
    if (direct_ok(a) && direct_ok(b)) {
      const double ga = gamma(a);
      const double gb = gamma(b);
      if (ga != 0.0 && gb != 0.0) {
        absorb(ga);
        absorb(1.0 / gb);
        continue;
      }
    }
    const SignedLog la = signed_log_gamma(a);
    const SignedLog lb = signed_log_gamma(b);
    from_log({la.log_abs - lb.log_abs, la.sign * lb.sign});
  }
  for (std::size_t i = paired; i < num.size(); ++i) {
    if (direct_ok(num[i])) {
      absorb(gamma(num[i]));
    } else {
      from_log(signed_log_gamma(num[i]));
    }
  }
  for (std::size_t i = paired; i < den.size(); ++i) {
    if (direct_ok(den[i])) {
      absorb(1.0 / gamma(den[i]));
    } else {
      const SignedLog l = signed_log_gamma(den[i]);
      from_log({-l.log_abs, l.sign});
    }
  }

  if (exponent > 1024) throw OverflowError("gamma_ratio exceeds binary64 range");
  if (exponent < -1100) return 0.0;
  return std::ldexp(mantissa, static_cast<int>(exponent));
}

double gamma_ratio(std::initializer_list<double> numerators,
                   std::initializer_list<double> denominators) {
  return gamma_ratio(std::span<const double>(numerators.begin(), numerators.size()),
                     std::span<const double>(denominators.begin(), denominators.size()));
}

}  // namespace hypsum
