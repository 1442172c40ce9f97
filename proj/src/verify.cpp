#include "hypsum/verify.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <thread>

#include "hypsum/errors.hpp"
#include "hypsum/specialfn.hpp"
#include "text.hpp"

namespace hypsum {

namespace {

using detail::short_number;
using namespace std::string_view_literals;

constexpr std::array kIdentities = {
    IdentityId::Eq1_1, IdentityId::Eq1_2, IdentityId::Eq1_3, IdentityId::Eq1_6,
    IdentityId::Eq2_1, IdentityId::Eq2_2, IdentityId::Eq2_3, IdentityId::Eq2_5,
    IdentityId::Eq2_6, IdentityId::Eq2_7, IdentityId::Eq2_8, IdentityId::Telescope,
};

constexpr std::array<std::string_view, 0> kNoParameters{};
constexpr std::array kMuParameters = {"b"sv, "mu"sv};
constexpr std::array kContiguousParameters = {"a"sv, "b"sv, "c"sv, "m"sv};
constexpr std::array kKarlssonParameters = {"a"sv, "b"sv, "c"sv};
constexpr std::array kExtensionParameters = {"b"sv, "c"sv};
constexpr std::array kSpParameters = {"p"sv};
constexpr std::array kWeightedParameters = {"p"sv, "f"sv};
constexpr std::array kPairParameters = {"p"sv, "f1"sv, "f2"sv};

// Left side as prefactor * pFq plus the closed form and the condition text.
struct IdentityPlan {
  SeriesSpec spec;
  double prefactor = 1.0;
  std::function<double()> closed_form;
  std::string condition;
};

double factorial(int p) { return gamma(static_cast<double>(p) + 1.0); }

int integer_parameter(const IdentityCase& c, const char* name) {
  return static_cast<int>(c.parameters.at(name));
}

void require_weight_parameter(double f, const char* name) {
  if (is_nonpositive_integer(f)) {
    throw DegenerateError(std::string(name) + " = " + short_number(f) +
                          " is a nonpositive integer; the weighted series has no pFq form");
  }
}

void require_min_p(int p, int minimum) {
  if (p < minimum) {
    throw PreconditionError("p>=" + std::to_string(minimum) + " violated: p = " +
                            std::to_string(p));
  }
}

IdentityPlan plan_for(const IdentityCase& c) {
  const auto& prm = c.parameters;
  IdentityPlan plan;
  switch (c.id) {
    case IdentityId::Eq1_1:
      plan.spec = {{0.5, 0.5, 0.25}, {1.0, 1.25}};
      plan.closed_form = [] { return dixon_3f2(0.5, 0.5, 0.25); };
      plan.condition = "a/2-b-c>-1 holds: -0.5 > -1";
      break;
    case IdentityId::Eq1_2:
      plan.spec = {{0.5, 0.25, 0.25}, {1.25, 1.25}};
      plan.closed_form = [] { return dixon_3f2(0.5, 0.25, 0.25); };
      plan.condition = "a/2-b-c>-1 holds: -0.25 > -1";
      break;
    case IdentityId::Eq1_3:
      plan.spec = {{0.5, 0.25}, {1.25}};
      plan.closed_form = [] { return gauss_2f1(0.5, 0.25, 1.25); };
      plan.condition = "c-a-b>0 holds: 0.5 > 0";
      break;
    case IdentityId::Eq1_6: {
      const double b = prm.at("b");
      const double mu = prm.at("mu");
      if (!(b > 0.0) || !(mu > 0.0)) {
        throw PreconditionError("b>0, mu>0 violated: b = " + short_number(b) +
                                ", mu = " + short_number(mu));
      }
      plan.spec = ramanujan_mu_terms(b, mu);
      plan.prefactor = 1.0 / b;
      plan.closed_form = [b, mu] { return mu_spaced_sum(b, mu); };
      plan.condition = "b>0, mu>0 holds";
      break;
    }
    case IdentityId::Eq2_1: {
      const double a = prm.at("a");
      const double b = prm.at("b");
      const double cc = prm.at("c");
      const int m = integer_parameter(c, "m");
      if (m < 1) throw PreconditionError("m>=1 violated: m = " + std::to_string(m));
      plan.spec = {{a, b, cc}, {b + m, cc + 1.0}};
      plan.closed_form = [=] { return contiguous_3f2(a, b, cc, static_cast<unsigned>(m)); };
      plan.condition = "m+1-a>0 holds: " + short_number(m + 1.0 - a) + " > 0";
      break;
    }
    case IdentityId::Eq2_2: {
      const double a = prm.at("a");
      const double b = prm.at("b");
      const double cc = prm.at("c");
      SeriesSpec spec{{a, b}, {cc}};
      for (const auto& pair : c.pairs) {
        spec.numerators.push_back(pair.f + pair.shift);
        spec.denominators.push_back(pair.f);
      }
      plan.spec = std::move(spec);
      const auto pairs = c.pairs;
      plan.closed_form = [=] { return karlsson_minton(a, b, cc, pairs); };
      plan.condition = "c-a-b>m holds: " + short_number(cc - a - b) + " > " +
                       std::to_string(total_shift(pairs));
      break;
    }
    case IdentityId::Eq2_3: {
      const double b = prm.at("b");
      const double cc = prm.at("c");
      if (!(b > 0.0) || !(cc > 0.0)) {
        throw PreconditionError("b>0, c>0 violated: b = " + short_number(b) + ", c = " +
                                short_number(cc));
      }
      plan.spec = {{0.5, b, cc}, {b + 1.0, cc + 1.0}};
      plan.closed_form = [=] { return ratio_sum_extension(b, cc); };
      plan.condition = std::fabs(b - cc) < 1e-8 * std::max(b, cc)
                           ? "b>0, c>0 holds; b=c digamma branch"
                           : "b>0, c>0 holds; b!=c branch";
      break;
    }
    case IdentityId::Eq2_5: {
      const int p = integer_parameter(c, "p");
      require_min_p(p, 1);
      plan.spec = {{0.5, 0.5}, {p + 1.0}};
      plan.prefactor = 1.0 / factorial(p);
      plan.closed_form = [=] { return s_p(p); };
      plan.condition = "p>=1 holds";
      break;
    }
    case IdentityId::Eq2_6:
    case IdentityId::Telescope: {
      const int p = integer_parameter(c, "p");
      const double f = prm.at("f");
      require_min_p(p, 2);
      require_weight_parameter(f, "f");
      // (n + f) = f (f+1)_n / (f)_n
      plan.spec = {{0.5, 0.5, f + 1.0}, {p + 1.0, f}};
      plan.prefactor = f / factorial(p);
      if (c.id == IdentityId::Eq2_6) {
        plan.closed_form = [=] { return weighted_s1(p, f); };
      } else {
        plan.closed_form = [=] { return s_p(p - 1) + (f - p) * s_p(p); };
      }
      plan.condition = "p>=2 holds";
      break;
    }
    case IdentityId::Eq2_7: {
      const int p = integer_parameter(c, "p");
      const double f = prm.at("f");
      require_min_p(p, 3);
      require_weight_parameter(f, "f");
      // (n + f)(n + f + 1) = f (f+1) (f+2)_n / (f)_n
      plan.spec = {{0.5, 0.5, f + 2.0}, {p + 1.0, f}};
      plan.prefactor = f * (f + 1.0) / factorial(p);
      plan.closed_form = [=] { return weighted_s2(p, f); };
      plan.condition = "p>=3 holds";
      break;
    }
    case IdentityId::Eq2_8: {
      const int p = integer_parameter(c, "p");
      const double f1 = prm.at("f1");
      const double f2 = prm.at("f2");
      require_min_p(p, 3);
      require_weight_parameter(f1, "f1");
      require_weight_parameter(f2, "f2");
      plan.spec = {{0.5, 0.5, f1 + 1.0, f2 + 1.0}, {p + 1.0, f1, f2}};
      plan.prefactor = f1 * f2 / factorial(p);
      plan.closed_form = [=] { return weighted_pair(p, f1, f2); };
      plan.condition = "p>=3 holds";
      break;
    }
  }
  return plan;
}

void reject_pole(const Error& e) {
  // Poles in a closed form are a parameter-domain problem, reported like
  // any other failed precondition.
  throw DegenerateError(e.what());
}

}  // namespace

std::span<const IdentityId> all_identities() { return kIdentities; }

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::Eq1_1: return "eq1.1";
    case IdentityId::Eq1_2: return "eq1.2";
    case IdentityId::Eq1_3: return "eq1.3";
    case IdentityId::Eq1_6: return "eq1.6";
    case IdentityId::Eq2_1: return "eq2.1";
    case IdentityId::Eq2_2: return "eq2.2";
    case IdentityId::Eq2_3: return "eq2.3";
    case IdentityId::Eq2_5: return "eq2.5";
    case IdentityId::Eq2_6: return "eq2.6";
    case IdentityId::Eq2_7: return "eq2.7";
    case IdentityId::Eq2_8: return "eq2.8";
    case IdentityId::Telescope: return "telescope";
  }
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (IdentityId id : kIdentities) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

std::span<const std::string_view> identity_parameters(IdentityId id) {
  switch (id) {
    case IdentityId::Eq1_1:
    case IdentityId::Eq1_2:
    case IdentityId::Eq1_3:
      return kNoParameters;
    case IdentityId::Eq1_6:
      return kMuParameters;
    case IdentityId::Eq2_1:
      return kContiguousParameters;
    case IdentityId::Eq2_2:
      return kKarlssonParameters;
    case IdentityId::Eq2_3:
      return kExtensionParameters;
    case IdentityId::Eq2_5:
      return kSpParameters;
    case IdentityId::Eq2_6:
    case IdentityId::Eq2_7:
    case IdentityId::Telescope:
      return kWeightedParameters;
    case IdentityId::Eq2_8:
      return kPairParameters;
  }
  return kNoParameters;
}

bool identity_takes_pairs(IdentityId id) { return id == IdentityId::Eq2_2; }

bool is_integer_parameter(std::string_view name) { return name == "m" || name == "p"; }

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Passed: return "passed";
    case Verdict::Failed: return "failed";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view text) {
  if (text == "passed") return Verdict::Passed;
  if (text == "failed") return Verdict::Failed;
  if (text == "n/a") return Verdict::NotApplicable;
  throw ConfigError("unknown verdict '" + std::string(text) + "'");
}

void validate_case(const IdentityCase& c) {
  if (!(c.rel_tol > 0.0)) throw ConfigError("rel_tol must be positive");
  const auto names = identity_parameters(c.id);
  for (std::string_view name : names) {
    const auto it = c.parameters.find(std::string(name));
    if (it == c.parameters.end()) {
      throw ConfigError(std::string(identity_name(c.id)) + " requires parameter '" +
                        std::string(name) + "'");
    }
    if (!std::isfinite(it->second)) {
      throw ConfigError("parameter '" + std::string(name) + "' must be finite");
    }
    if (is_integer_parameter(name) && it->second != std::floor(it->second)) {
      throw ConfigError("parameter '" + std::string(name) + "' must be an integer, got " +
                        short_number(it->second));
    }
  }
  for (const auto& [name, value] : c.parameters) {
    bool known = false;
    for (std::string_view n : names) known = known || n == name;
    if (!known) {
      throw ConfigError(std::string(identity_name(c.id)) + " takes no parameter '" + name + "'");
    }
  }
  if (!c.pairs.empty() && !identity_takes_pairs(c.id)) {
    throw ConfigError(std::string(identity_name(c.id)) + " takes no shifted pairs");
  }
}

VerificationReport verify_identity(const IdentityCase& c, std::uint64_t max_terms) {
  validate_case(c);
  const IdentityPlan plan = plan_for(c);

  VerificationReport report;
  report.identity_case = c;
  try {
    report.rhs = plan.closed_form();
  } catch (const PoleError& e) {
    reject_pole(e);
  }
  try {
    report.lhs_summation = sum_series(plan.spec, c.rel_tol * 1e-2, max_terms);
  } catch (const PoleError& e) {
    reject_pole(e);
  }
  report.lhs = plan.prefactor * report.lhs_summation.value;
  report.abs_err = std::fabs(report.lhs - report.rhs);
  report.rel_err = std::fabs(report.rhs) < 1e-300 ? report.abs_err
                                                  : report.abs_err / std::fabs(report.rhs);
  report.verdict = report.rel_err <= c.rel_tol ? Verdict::Passed : Verdict::Failed;
  report.precondition_note = plan.condition;
  return report;
}

VerificationReport evaluate_case(const IdentityCase& c, std::uint64_t max_terms) {
  try {
    return verify_identity(c, max_terms);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    VerificationReport report;
    report.identity_case = c;
    report.verdict = Verdict::NotApplicable;
    report.precondition_note = e.what();
    return report;
  }
}

std::vector<VerificationReport> sweep(IdentityId id, const ParameterGrid& grid, double rel_tol,
                                      std::uint64_t seed, const SweepOptions& options) {
  (void)seed;
  if (!(rel_tol > 0.0)) throw ConfigError("rel_tol must be positive");
  if (grid.empty()) return {};

  const auto names = identity_parameters(id);
  std::vector<const std::vector<double>*> axes;
  for (std::string_view name : names) {
    const auto it = grid.find(std::string(name));
    if (it == grid.end()) {
      throw ConfigError("grid for " + std::string(identity_name(id)) + " is missing '" +
                        std::string(name) + "'");
    }
    if (it->second.empty()) {
      throw ConfigError("grid axis '" + std::string(name) + "' has no values");
    }
    axes.push_back(&it->second);
  }
  for (const auto& [name, values] : grid) {
    bool known = false;
    for (std::string_view n : names) known = known || n == name;
    if (!known) {
      throw ConfigError(std::string(identity_name(id)) + " takes no parameter '" + name + "'");
    }
  }

  std::size_t total = 1;
  for (const auto* axis : axes) total *= axis->size();

  std::vector<IdentityCase> cases(total);
  for (std::size_t index = 0; index < total; ++index) {
    IdentityCase& c = cases[index];
    c.id = id;
    c.rel_tol = rel_tol;
    if (identity_takes_pairs(id)) c.pairs = options.pairs;
    std::size_t rest = index;
    for (std::size_t axis = axes.size(); axis-- > 0;) {
      const auto& values = *axes[axis];
      c.parameters[std::string(names[axis])] = values[rest % values.size()];
      rest /= values.size();
    }
    validate_case(c);
  }

  std::vector<VerificationReport> reports(total);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads,
                                                           static_cast<unsigned>(total)));
  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) reports[i] = evaluate_case(cases[i], options.max_terms);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < total; i += workers) {
          reports[i] = evaluate_case(cases[i], options.max_terms);
        }
      });
    }
  }
  return reports;
}

std::vector<IdentityCase> builtin_catalog() {
  constexpr double tol = 1e-10;
  return {
      {IdentityId::Eq1_1, {}, {}, tol},
      {IdentityId::Eq1_2, {}, {}, tol},
      {IdentityId::Eq1_3, {}, {}, tol},
      {IdentityId::Eq1_6, {{"b", 1.0}, {"mu", 2.0}}, {}, tol},
      {IdentityId::Eq2_1, {{"a", 0.3}, {"b", 1.7}, {"c", 0.9}, {"m", 2.0}}, {}, tol},
      {IdentityId::Eq2_2, {{"a", 0.4}, {"b", 0.3}, {"c", 6.0}}, {{1.3, 1}, {2.1, 2}}, tol},
      {IdentityId::Eq2_3, {{"b", 0.25}, {"c", 0.25}}, {}, tol},
      {IdentityId::Eq2_5, {{"p", 1.0}}, {}, tol},
      {IdentityId::Eq2_6, {{"p", 2.0}, {"f", 0.5}}, {}, tol},
      {IdentityId::Eq2_7, {{"p", 3.0}, {"f", 0.7}}, {}, tol},
      {IdentityId::Eq2_8, {{"p", 4.0}, {"f1", 0.3}, {"f2", 2.2}}, {}, tol},
      {IdentityId::Telescope, {{"p", 3.0}, {"f", 2.5}}, {}, tol},
  };
}

std::vector<TableRow> ramanujan_table(double rel_tol, std::uint64_t max_terms) {
  const double pi = std::numbers::pi;
  const double g34 = gamma(0.75);
  const double g34_sq = g34 * g34;
  const double sqrt2 = std::numbers::sqrt2;

  struct Entry {
    const char* identity;
    const char* symbolic;
    double closed;
    SeriesSpec spec;
    double prefactor;
  };
  const Entry entries[] = {
      {"Eq(1.1)", "pi^2/(4*Gamma(3/4)^4)", pi * pi / (4.0 * g34_sq * g34_sq),
       {{0.5, 0.5, 0.25}, {1.0, 1.25}}, 1.0},
      {"Eq(1.2)", "pi^(5/2)/(8*sqrt(2)*Gamma(3/4)^2)",
       std::pow(pi, 2.5) / (8.0 * sqrt2 * g34_sq), {{0.5, 0.25, 0.25}, {1.25, 1.25}}, 1.0},
      {"Eq(1.3)", "pi^(3/2)/(2*sqrt(2)*Gamma(3/4)^2)",
       std::pow(pi, 1.5) / (2.0 * sqrt2 * g34_sq), {{0.5, 0.25}, {1.25}}, 1.0},
      {"S_1", "4/pi", 4.0 / pi, {{0.5, 0.5}, {2.0}}, 1.0},
      {"S_2", "16/(9*pi)", 16.0 / (9.0 * pi), {{0.5, 0.5}, {3.0}}, 1.0 / 2.0},
      {"S_3", "128/(225*pi)", 128.0 / (225.0 * pi), {{0.5, 0.5}, {4.0}}, 1.0 / 6.0},
  };

  std::vector<TableRow> rows;
  for (const auto& e : entries) {
    TableRow row;
    row.identity = e.identity;
    row.symbolic = e.symbolic;
    row.closed = e.closed;
    row.summation = sum_series(e.spec, rel_tol, max_terms);
    row.direct = e.prefactor * row.summation.value;
    row.rel_err = std::fabs(row.direct - row.closed) / std::fabs(row.closed);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hypsum
