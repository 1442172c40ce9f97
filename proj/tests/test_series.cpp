#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypsum/errors.hpp"
#include "hypsum/series.hpp"
#include "hypsum/specialfn.hpp"
#include "support/rational_oracle.hpp"

using namespace hypsum;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

constexpr double kPi = std::numbers::pi;
const double kEq13 = 1.3110287771460599;

}  // namespace

TEST_CASE("convergence_margin") {
  CHECK(convergence_margin({{0.5, 0.25}, {1.25}}) == 0.5);
  CHECK(convergence_margin({{2.3}, {2.3}}) == 0.0);
  CHECK(convergence_margin({{0.5, 0.5, 0.25}, {1.25, 1.25}}) == 1.25);
}

TEST_CASE("termination_index") {
  CHECK_FALSE(SeriesSpec{{0.5, 0.25}, {1.25}}.termination_index().has_value());
  CHECK(SeriesSpec{{2.0, -3.0}, {5.0}}.termination_index() == 3u);
  CHECK(SeriesSpec{{-5.0, -2.0}, {5.0}}.termination_index() == 2u);
}

TEST_CASE("sum_series examples") {
  const auto r13 = sum_series({{0.5, 0.25}, {1.25}}, 1e-12);
  CHECK(r13.status == SummationStatus::Converged);
  CHECK(rel(r13.value, kEq13) <= 1e-12);
  CHECK(r13.tail_estimate >= 0.0);

  const auto vandermonde = sum_series({{-3, 2}, {5}}, 1e-3);
  CHECK(vandermonde.status == SummationStatus::Terminated);
  CHECK(vandermonde.terms_used == 4);
  CHECK(vandermonde.tail_estimate == 0.0);
  CHECK(rel(vandermonde.value, 2.0 / 7.0) <= 1e-15);

  const auto s1 = sum_series({{0.5, 0.5}, {2}}, 1e-12);
  CHECK(rel(s1.value, 4.0 / kPi) <= 1e-12);

  const auto exponential = sum_series({{0.5}, {0.5}}, 1e-14);
  CHECK(rel(exponential.value, std::exp(1.0)) <= 1e-14);
}

TEST_CASE("compensation: S_1 series at rel_tol 1e-12") {
  const auto r = sum_series({{0.5, 0.5}, {2}}, 1e-12);
  CHECK(rel(r.value, 4.0 / kPi) <= 1e-11);
}

TEST_CASE("slow margins") {
  // 2F1(a,b;c;1) by Gauss for margins down to 0.05.
  for (double s : {0.05, 0.1, 0.5, 1.0, 2.0}) {
    const double a = 0.3, b = 0.6, c = a + b + s;
    const double want = gamma_ratio({c, c - a - b}, {c - a, c - b});
    const auto r = sum_series({{a, b}, {c}}, 1e-12);
    CAPTURE(s);
    CHECK(rel(r.value, want) <= 1e-12);
    CHECK(r.status == SummationStatus::Converged);
  }
}

TEST_CASE("property: termination") {
  for (unsigned k = 0; k <= 12; ++k) {
    const auto r = sum_series({{-static_cast<double>(k), 1.7, 0.4}, {2.2, 3.1}}, 1e-10);
    CHECK(r.status == SummationStatus::Terminated);
    CHECK(r.terms_used == k + 1);
    CHECK(r.tail_estimate == 0.0);
    CHECK(r.remainder == 0.0);
  }
}

TEST_CASE("property: divergence gate") {
  CHECK_THROWS_AS(sum_series({{1, 1}, {1}}, 1e-10), DivergenceError);
  CHECK_THROWS_AS(sum_series({{0.5, 0.5}, {1.0}}, 1e-10), DivergenceError);
  CHECK_THROWS_AS(sum_series({{0.5, 0.7, 0.2}, {1.0}}, 1e-10), DivergenceError);
  CHECK_THROWS_AS(sum_series({{0.5, 0.5, 0.5}, {1.0, 0.4}}, 1e-10), DivergenceError);
  // A terminating numerator overrides the margin.
  CHECK_NOTHROW(sum_series({{-2, 1}, {0.5}}, 1e-10));
}

TEST_CASE("degenerate denominators") {
  CHECK_THROWS_AS(sum_series({{0.5, 0.5}, {-2.0}}, 1e-10), DegenerateError);
  CHECK_THROWS_AS(sum_series({{-5.0, 0.5}, {-2.0}}, 1e-10), DegenerateError);
  // Termination at n = 2 happens before the zero at n = 3.
  CHECK(sum_series({{-2.0, 0.5}, {-3.0}}, 1e-10).status == SummationStatus::Terminated);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(sum_series({{0.5}, {1.5}}, 0.0), ConfigError);
  CHECK_THROWS_AS(sum_series({{0.5}, {1.5}}, -1.0), ConfigError);
  CHECK_THROWS_AS(sum_series({{0.5}, {1.5}}, 1e-10, 0), ConfigError);
}

TEST_CASE("max_terms budget") {
  const auto r = sum_series({{0.5, 0.5}, {1.01}}, 1e-14, 10);
  CHECK(r.status == SummationStatus::MaxTermsReached);
  CHECK(r.terms_used == 10);
  CHECK(r.tail_estimate > 0.0);
}

TEST_CASE("tail_estimate follows the integral bound") {
  const SeriesSpec spec{{0.5, 0.5}, {1.5}};
  const auto r = sum_series(spec, 1e-6, 100);
  // |t_N| (N+1) / s with s = 0.5; the last term is recomputed here.
  double t = 1.0;
  for (std::uint64_t n = 0; n < r.terms_used; ++n) t *= (0.5 + n) * (0.5 + n) / ((1.5 + n) * (n + 1.0));
  CHECK(rel(r.tail_estimate, std::abs(t) * (r.terms_used + 1.0) / 0.5) <= 1e-12);
}

TEST_CASE("property: monotone refinement") {
  const SeriesSpec specs[] = {
      {{0.5, 0.25}, {1.25}},
      {{0.5, 0.5, 0.25}, {1.5, 1.25}},
      {{0.3, 1.7, 0.9}, {3.7, 1.9}},
      {{0.5, 0.5}, {1.2}},
      {{1.1}, {0.4}},
  };
  for (const auto& spec : specs) {
    const auto loose = sum_series(spec, 1e-8);
    const auto tight = sum_series(spec, 1e-12);
    CHECK(std::abs(tight.value - loose.value) <=
          loose.tail_estimate + 10 * 1e-8 * std::abs(loose.value));
  }
}

TEST_CASE("property: exact rational oracle on 50 terminating series") {
  const auto cases = oracle::random_terminating_cases(50, 424242);
  for (const auto& c : cases) {
    const double want = oracle::exact_terminating_sum(c.spec, c.k).get_d();
    const auto got = sum_series(c.spec, 1e-15);
    CAPTURE(c.k);
    CHECK(got.status == SummationStatus::Terminated);
    CHECK(got.terms_used == c.k + 1);
    if (want == 0.0) {
      CHECK(got.value == 0.0);
    } else {
      CHECK(rel(got.value, want) <= 1e-13);
    }
  }
}

TEST_CASE("ramanujan_mu_terms") {
  CHECK(ramanujan_mu_terms(1, 4) == SeriesSpec{{0.5, 0.25}, {1.25}});
  CHECK(ramanujan_mu_terms(1, 1) == SeriesSpec{{0.5, 1.0}, {2.0}});
  CHECK(ramanujan_mu_terms(2, 2) == ramanujan_mu_terms(1, 1));
  CHECK_THROWS_AS(ramanujan_mu_terms(0, 1), DomainError);
  CHECK_THROWS_AS(ramanujan_mu_terms(1, -1), DomainError);
}

TEST_CASE("summation status strings round-trip") {
  for (auto s : {SummationStatus::Converged, SummationStatus::Terminated,
                 SummationStatus::MaxTermsReached}) {
    CHECK(summation_status_from_string(to_string(s)) == s);
  }
}
