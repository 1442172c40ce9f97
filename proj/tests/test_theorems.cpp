#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hypsum/errors.hpp"
#include "hypsum/series.hpp"
#include "hypsum/specialfn.hpp"
#include "hypsum/theorems.hpp"

using namespace hypsum;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

constexpr double kPi = std::numbers::pi;
const double kEq11 = 1.0942198076132383;
const double kEq12 = 1.029679593731718;
const double kEq13 = 1.3110287771460599;

double direct(const SeriesSpec& spec) { return sum_series(spec, 1e-14).value; }

double factorial(int p) { return std::tgamma(p + 1.0); }

// ((1/2)_n/n!)^2 prod_i (n + f_i) / ((n+1)...(n+p)) as a hypergeometric sum.
double weighted_direct(int p, std::vector<double> weights) {
  SeriesSpec spec{{0.5, 0.5}, {p + 1.0}};
  double scale = 1.0 / factorial(p);
  for (double f : weights) {
    spec.numerators.push_back(f + 1.0);
    spec.denominators.push_back(f);
    scale *= f;
  }
  return scale * direct(spec);
}

double binomial(unsigned m, unsigned k) {
  return std::round(std::tgamma(m + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(m - k + 1.0)));
}

}  // namespace

TEST_CASE("gauss_2f1") {
  CHECK(gauss_2f1(0.0, 0.7, 2.1) == 1.0);
  CHECK(rel(gauss_2f1(0.5, 0.25, 1.25), kEq13) <= 1e-14);
  CHECK(rel(gauss_2f1(-3, 2, 5), 2.0 / 7.0) <= 1e-14);
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, 1.0), PreconditionError);
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, 0.9), PreconditionError);
}

TEST_CASE("gauss_2f1 pole in the closed form") {
  // c - a = 0.
  CHECK_THROWS_AS(gauss_2f1(1.5, -3.0, 1.5), PoleError);
}

TEST_CASE("property: gauss symmetry is exact") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-2.0, 4.0);
  for (int i = 0; i < 500; ++i) {
    const double a = dist(rng), b = dist(rng);
    const double c = a + b + 0.1 + std::abs(dist(rng));
    CHECK(gauss_2f1(a, b, c) == gauss_2f1(b, a, c));
  }
}

TEST_CASE("dixon_3f2") {
  CHECK(rel(dixon_3f2(0.5, 0.5, 0.25), kEq11) <= 1e-14);
  CHECK(rel(dixon_3f2(0.5, 0.25, 0.25), kEq12) <= 1e-14);
  CHECK(rel(dixon_3f2(0.8, 0.0, 0.3), 1.0) <= 1e-15);
  CHECK_THROWS_AS(dixon_3f2(0.5, 1.0, 0.25), PreconditionError);
  for (auto [a, b, c] : {std::tuple{0.5, 0.5, 0.25}, {1.3, 0.2, 0.7}, {2.0, -0.4, 0.9}}) {
    CHECK(rel(dixon_3f2(a, b, c), direct({{a, b, c}, {1 + a - b, 1 + a - c}})) <= 1e-12);
  }
}

TEST_CASE("contiguous_3f2") {
  CHECK(rel(contiguous_3f2(0.5, 0.5, 0.25, 1), 1.0512612274972232) <= 1e-13);
  CHECK(rel(contiguous_3f2(0.3, 1.7, 0.9, 2), 1.0940782570797201) <= 1e-13);
  CHECK_THROWS_AS(contiguous_3f2(0.3, 1.7, 1.7, 2), DegenerateError);
  CHECK_THROWS_AS(contiguous_3f2(0.3, 1.5, 2.5, 2), DegenerateError);  // (b-c)_2 = (-1)(0)
  CHECK_THROWS_AS(contiguous_3f2(2.5, 1.7, 0.9, 1), PreconditionError);
  CHECK_THROWS_AS(contiguous_3f2(0.3, 1.7, 0.9, 0), PreconditionError);
}

TEST_CASE("contiguous_3f2 with m = 1, a = 1/2 is the two-gamma form") {
  for (auto [b, c] : {std::pair{0.5, 0.25}, {1.3, 2.9}, {0.7, 0.2}}) {
    const double want = b * c / (b - c) * std::sqrt(kPi) *
                        (hypsum::gamma(c) / hypsum::gamma(c + 0.5) - hypsum::gamma(b) / hypsum::gamma(b + 0.5));
    CHECK(rel(contiguous_3f2(0.5, b, c, 1), want) <= 1e-12);
  }
}

TEST_CASE("brute force: contiguous_3f2 against direct summation") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> pdist(0.2, 4.0);
  for (unsigned m = 1; m <= 4; ++m) {
    std::uniform_real_distribution<double> adist(-2.0, m + 0.5);
    for (int i = 0; i < 10; ++i) {
      const double a = adist(rng), b = pdist(rng), c = pdist(rng);
      if (std::abs(b - c) < 0.05) continue;
      const double want = direct({{a, b, c}, {b + m, c + 1}});
      CAPTURE(a); CAPTURE(b); CAPTURE(c); CAPTURE(m);
      CHECK(rel(contiguous_3f2(a, b, c, m), want) <= 1e-9);
    }
  }
}

TEST_CASE("ratio_sum_extension") {
  CHECK(rel(ratio_sum_extension(0.25, 0.25), kEq12) <= 1e-13);
  CHECK(rel(ratio_sum_extension(0.5, 0.25), 1.0512612274972232) <= 1e-13);
  CHECK(ratio_sum_extension(0.5, 0.25) == ratio_sum_extension(0.25, 0.5));
  CHECK_THROWS_AS(ratio_sum_extension(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(ratio_sum_extension(1.0, -1.0), DomainError);
}

TEST_CASE("ratio_sum_extension digamma branch") {
  // Both take the digamma branch; the midpoints differ by 5e-13 relative.
  for (double b : {0.25, 1.0, 3.0}) {
    CHECK(rel(ratio_sum_extension(b, b * (1 + 1e-12)), ratio_sum_extension(b, b)) <= 1e-12);
  }
  // Midpoint evaluation: (b, b(1+eps)) with eps below the threshold equals (mid, mid).
  const double b = 0.8, c = 0.8 * (1 + 5e-9);
  CHECK(ratio_sum_extension(b, c) == ratio_sum_extension(0.5 * (b + c), 0.5 * (b + c)));
  for (double v : {0.25, 1.0, 3.0}) {
    CHECK(rel(ratio_sum_extension(v, v), direct({{0.5, v, v}, {v + 1, v + 1}})) <= 1e-12);
  }
}

TEST_CASE("ratio_sum_extension near the diagonal") {
  // 40-digit reference values of 3F2[1/2, b, c; b+1, c+1; 1] at c = b (1 + eps).
  struct Point {
    double b, eps, want;
  };
  const Point points[] = {
      {0.25, 1e-9, 1.0296795937566147},   {0.25, 1.01e-8, 1.029679593983175},
      {0.25, 1e-5, 1.0296798426986912},   {0.25, 0.0201, 1.0301784446277355},
      {1.0, 9.9e-9, 1.2274112791526023},  {1.0, 0.0199, 1.2301909424084503},
      {3.0, 1.01e-8, 1.7315741366142007}, {3.0, 0.05, 1.7478693671552072},
  };
  for (const auto& pt : points) {
    CAPTURE(pt.b);
    CAPTURE(pt.eps);
    CHECK(rel(ratio_sum_extension(pt.b, pt.b * (1 + pt.eps)), pt.want) <= 5e-14);
  }
  CHECK(rel(ratio_sum_extension(1.0, 1.0), 1.2274112777602188) <= 1e-14);
  CHECK(rel(ratio_sum_extension(3.0, 3.0), 1.7315741332490501) <= 1e-14);
}

TEST_CASE("property: contiguous m = 1 matches ratio_sum_extension") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> dist(0.2, 3.0);
  int checked = 0;
  while (checked < 200) {
    const double b = dist(rng), c = dist(rng);
    if (std::abs(b - c) <= 1e-4) continue;
    CHECK(rel(contiguous_3f2(0.5, b, c, 1), ratio_sum_extension(b, c)) <= 1e-11);
    ++checked;
  }
}

TEST_CASE("mu_spaced_sum") {
  CHECK(rel(mu_spaced_sum(1, 4), kEq13) <= 1e-14);
  for (double b : {0.5, 1.0, 2.7}) {
    for (double mu : {0.5, 1.0, 2.0, 4.0}) {
      CHECK(rel(mu_spaced_sum(b, mu), direct(ramanujan_mu_terms(b, mu)) / b) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(mu_spaced_sum(-1, 1), DomainError);
}

TEST_CASE("ck_coefficient examples") {
  const std::vector<ShiftedPair> two{{0.7, 1}, {1.9, 1}};
  CHECK(ck_coefficient(0, two) == 1.0);
  CHECK(rel(ck_coefficient(1, two), (1 + 0.7 + 1.9) / (0.7 * 1.9)) <= 1e-15);
  CHECK(rel(ck_coefficient(2, two), 1 / (0.7 * 1.9)) <= 1e-15);
  CHECK_THROWS_AS(ck_coefficient(3, two), PreconditionError);
  const std::vector<ShiftedPair> bad{{-2.0, 1}};
  CHECK_THROWS_AS(ck_coefficient(1, bad), DegenerateError);
}

TEST_CASE("property: Vandermonde shortcut for r = 1") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> dist(0.2, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double f = dist(rng);
    for (unsigned m = 1; m <= 6; ++m) {
      const std::vector<ShiftedPair> pairs{{f, m}};
      for (unsigned k = 0; k <= m; ++k) {
        CHECK(rel(ck_coefficient(k, pairs), binomial(m, k) / pochhammer(f, k)) <= 1e-13);
      }
    }
  }
}

TEST_CASE("karlsson_minton") {
  const std::vector<ShiftedPair> none;
  CHECK(karlsson_minton(0.3, 0.6, 2.1, none) == gauss_2f1(0.3, 0.6, 2.1));

  const std::vector<ShiftedPair> pairs{{1.3, 1}, {2.1, 2}};
  CHECK(rel(karlsson_minton(0.4, 0.3, 6, pairs), 1.1157702356196447) <= 1e-13);
  CHECK(rel(karlsson_minton(0.4, 0.3, 6, pairs), direct({{0.4, 0.3, 2.3, 4.1}, {6, 1.3, 2.1}})) <=
        1e-12);

  const std::vector<ShiftedPair> one{{1.3, 1}};
  try {
    karlsson_minton(0.4, 0.3, 1.0, one);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()) == "c-a-b>m violated: 0.3 <= 1");
  }
}

TEST_CASE("karlsson_minton m = 1 reproduces the weighted S_1 sum") {
  for (int p = 2; p <= 6; ++p) {
    for (double f : {0.3, 1.7, 5.0}) {
      const std::vector<ShiftedPair> one{{f, 1}};
      const double km = karlsson_minton(0.5, 0.5, p + 1.0, one);
      CHECK(rel(km * f / factorial(p), weighted_s1(p, f)) <= 1e-12);
    }
  }
}

TEST_CASE("property: Karlsson-Minton pair permutation invariance") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> fdist(0.2, 5.0);
  std::uniform_real_distribution<double> abdist(-1.0, 2.0);
  std::uniform_int_distribution<unsigned> mdist(1, 2);
  for (int i = 0; i < 40; ++i) {
    std::vector<ShiftedPair> pairs;
    for (int r = 0; r < 3; ++r) pairs.push_back({fdist(rng), mdist(rng)});
    const double a = abdist(rng), b = abdist(rng);
    const double c = a + b + total_shift(pairs) + 0.5 + std::abs(abdist(rng));
    const double base = karlsson_minton(a, b, c, pairs);
    std::sort(pairs.begin(), pairs.end(), [](auto x, auto y) { return x.f < y.f; });
    do {
      CHECK(rel(karlsson_minton(a, b, c, pairs), base) <= 1e-13);
    } while (std::next_permutation(pairs.begin(), pairs.end(),
                                   [](auto x, auto y) { return x.f < y.f; }));
  }
}

TEST_CASE("brute force: Karlsson-Minton against direct summation") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> fdist(0.2, 5.0);
  std::uniform_real_distribution<double> abdist(0.1, 2.0);
  std::uniform_int_distribution<unsigned> mdist(1, 2);
  for (int r = 1; r <= 3; ++r) {
    for (int i = 0; i < 10; ++i) {
      std::vector<ShiftedPair> pairs;
      SeriesSpec spec;
      const double a = abdist(rng), b = abdist(rng);
      spec.numerators = {a, b};
      for (int j = 0; j < r; ++j) pairs.push_back({fdist(rng), mdist(rng)});
      const double c = a + b + total_shift(pairs) + 0.5 + abdist(rng);
      spec.denominators = {c};
      for (const auto& pair : pairs) {
        spec.numerators.push_back(pair.f + pair.shift);
        spec.denominators.push_back(pair.f);
      }
      CHECK(rel(karlsson_minton(a, b, c, pairs), direct(spec)) <= 1e-10);
    }
  }
}

TEST_CASE("s_p") {
  CHECK(rel(s_p(1), 4 / kPi) <= 1e-15);
  CHECK(rel(s_p(2), 16 / (9 * kPi)) <= 1e-15);
  CHECK(rel(s_p(3), 128 / (225 * kPi)) <= 1e-15);
  for (int p = 1; p <= 8; ++p) CHECK(rel(s_p(p), weighted_direct(p, {})) <= 1e-12);
}

TEST_CASE("weighted_s1") {
  CHECK(rel(weighted_s1(2, 0.5), 4 / (3 * kPi)) <= 1e-15);
  CHECK(rel(weighted_s1(3, 0), hypsum::gamma(3) / std::pow(hypsum::gamma(3.5), 2) / 8) <= 1e-15);
  for (int p = 2; p <= 8; ++p) CHECK(rel(weighted_s1(p, p), s_p(p - 1)) <= 1e-14);
  CHECK_THROWS_AS(weighted_s1(1, 0.5), PreconditionError);
}

TEST_CASE("weighted_s2") {
  CHECK(rel(weighted_s2(3, 0.7), 0.34337855810902074) <= 1e-14);
  CHECK(rel(weighted_s2(3, 0.7), weighted_direct(3, {0.7, 1.7})) <= 1e-12);
  CHECK(rel(weighted_s2(3, -1), hypsum::gamma(3) / std::pow(hypsum::gamma(3.5), 2) * 9.0 / 32.0) <= 1e-15);
  CHECK_THROWS_AS(weighted_s2(2, 0.5), PreconditionError);
}

TEST_CASE("weighted_pair") {
  CHECK(rel(weighted_pair(4, 0.3, 2.2), 0.046360932683762697) <= 1e-14);
  CHECK(rel(weighted_pair(4, 0.3, 2.2), weighted_direct(4, {0.3, 2.2})) <= 1e-12);
  CHECK(weighted_pair(5, 0.3, 2.2) == weighted_pair(5, 2.2, 0.3));
  for (int p = 3; p <= 7; ++p) {
    for (double f : {-0.4, 0.3, 1.7, 5.0}) {
      CHECK(rel(weighted_pair(p, f, f + 1), weighted_s2(p, f)) <= 1e-13);
    }
  }
  CHECK_THROWS_AS(weighted_pair(2, 0.5, 1.0), PreconditionError);
}

TEST_CASE("property: telescoping") {
  for (int p = 2; p <= 8; ++p) {
    for (double f : {0.3, 1.0, 2.5, static_cast<double>(p)}) {
      CHECK(rel(weighted_s1(p, f), s_p(p - 1) + (f - p) * s_p(p)) <= 1e-12);
    }
  }
}

TEST_CASE("property: reduction chain to weighted_pair") {
  for (int p = 3; p <= 7; ++p) {
    for (auto [f1, f2] : {std::pair{0.3, 2.2}, {1.1, 1.1}, {4.0, 0.7}}) {
      const std::vector<ShiftedPair> pairs{{f1, 1}, {f2, 1}};
      const double km = karlsson_minton(0.5, 0.5, p + 1.0, pairs);
      CHECK(rel(km * f1 * f2 / factorial(p), weighted_pair(p, f1, f2)) <= 1e-12);
    }
  }
}
