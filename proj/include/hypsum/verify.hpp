#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypsum/series.hpp"
#include "hypsum/theorems.hpp"

namespace hypsum {

enum class IdentityId {
  Eq1_1,
  Eq1_2,
  Eq1_3,
  Eq1_6,
  Eq2_1,
  Eq2_2,
  Eq2_3,
  Eq2_5,
  Eq2_6,
  Eq2_7,
  Eq2_8,
  Telescope,
};

/// All identities in catalog order.
std::span<const IdentityId> all_identities();

/// CLI name: "eq1.1" ... "eq2.8", "telescope".
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Scalar parameter names in sweep (row-major) order. Eq2_2 additionally
/// takes its shifted pairs, which are not part of the scalar signature.
std::span<const std::string_view> identity_parameters(IdentityId id);
bool identity_takes_pairs(IdentityId id);

/// Parameters that must hold integer values (m, p).
bool is_integer_parameter(std::string_view name);

struct IdentityCase {
  IdentityId id = IdentityId::Eq1_1;
  std::map<std::string, double> parameters;
  std::vector<ShiftedPair> pairs;
  double rel_tol = 1e-10;

  friend bool operator==(const IdentityCase&, const IdentityCase&) = default;
};

enum class Verdict { Passed, Failed, NotApplicable };

std::string_view to_string(Verdict verdict);
Verdict verdict_from_string(std::string_view text);

struct VerificationReport {
  IdentityCase identity_case;
  /// Direct summation of the identity's defining series (times its prefactor).
  double lhs = 0.0;
  SummationResult lhs_summation;
  /// Closed form.
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  Verdict verdict = Verdict::NotApplicable;
  /// Which condition was checked ("c-a-b>m holds: 5.3 > 3") or which failed.
  std::string precondition_note;

  bool passed() const { return verdict == Verdict::Passed; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Throws ConfigError when the case does not match the identity signature.
void validate_case(const IdentityCase& identity_case);

/// Evaluates both sides of one identity.
///
/// Theorem preconditions are checked before anything is summed; a violation
/// propagates as PreconditionError / DegenerateError / DivergenceError whose
/// message is the note, e.g. "c-a-b>m violated: 0.3 <= 1".
VerificationReport verify_identity(const IdentityCase& identity_case,
                                   std::uint64_t max_terms = kDefaultMaxTerms);

/// Like verify_identity, but a violated precondition yields a NotApplicable
/// report carrying the note. ConfigError still propagates.
VerificationReport evaluate_case(const IdentityCase& identity_case,
                                 std::uint64_t max_terms = kDefaultMaxTerms);

/// Parameter name -> values.
using ParameterGrid = std::map<std::string, std::vector<double>>;

struct SweepOptions {
  std::vector<ShiftedPair> pairs;
  std::uint64_t max_terms = kDefaultMaxTerms;
  unsigned threads = 1;
};

/// One report per Cartesian grid point, row-major over identity_parameters()
/// order (last parameter varies fastest). An empty grid yields no reports.
/// `seed` is carried for reproducibility; the grid itself has no random
/// points. Throws ConfigError on a malformed grid.
std::vector<VerificationReport> sweep(IdentityId id, const ParameterGrid& grid, double rel_tol,
                                      std::uint64_t seed, const SweepOptions& options = {});

/// One case per identity: Ramanujan's parameter choices for eq1.1-eq1.3,
/// p = 1 for eq2.5, representative values elsewhere. Each at rel_tol 1e-10.
std::vector<IdentityCase> builtin_catalog();

struct TableRow {
  std::string identity;
  std::string symbolic;
  double closed = 0.0;
  double direct = 0.0;
  double rel_err = 0.0;
  SummationResult summation;
};

/// Ramanujan's three sums and S_1, S_2, S_3: the displayed constant against
/// direct summation of the defining series.
std::vector<TableRow> ramanujan_table(double rel_tol = 1e-12,
                                      std::uint64_t max_terms = kDefaultMaxTerms);

}  // namespace hypsum
