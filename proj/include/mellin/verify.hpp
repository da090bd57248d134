#pragma once

// Identity suites, numeric consistency checks and their reports.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mellin/closed_form.hpp"
#include "mellin/execution.hpp"

namespace mellin::verify {

enum class FamilyId {
  alt_binom_odd,
  alt_binom_even,
  c_odd_power,
  eulerian_a_sum,
  eulerian_b_sum,
  binom_cosh_sum,
  prop_vanishing,
  prop_eta_coeff,
  prop_zeta2_coeff,
  prop_d_identity,
  lemma_euler_bernoulli,
  ln_pi_free,
  coupled_series,
  bounds,
  cross_rep,
};

/// Every family, in declaration order.
const std::vector<FamilyId>& all_families();
/// CLI name, e.g. "alt-binom-odd".
std::string family_name(FamilyId id);
/// Inverse of family_name; std::nullopt for unknown names.
std::optional<FamilyId> parse_family(const std::string& name);
/// True for the families checked in exact arithmetic.
bool is_exact_family(FamilyId id);

/// Inclusive parameter range.
struct Range {
  unsigned lo = 1;
  unsigned hi = 1;
};
/// Parses "a..b" or "a"; throws std::invalid_argument.
Range parse_range(const std::string& text);
/// Default range of a family's primary parameter.
Range default_range(FamilyId id);

struct Cell {
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string note;
};

struct VerifyReport {
  std::string family;
  Range range;
  std::optional<unsigned> precision_digits;  ///< numeric suites only
  std::string tolerance;                     ///< numeric suites only
  std::vector<Cell> cells;
  double seconds = 0;

  bool ok() const;
  std::size_t passed() const;
  std::size_t failed() const;
  const Cell* first_counterexample() const;
  /// Deterministic JSON; timing is included only on request.
  std::string to_json(bool include_timing = false) const;
  /// One line per failing cell plus a summary line.
  std::string summary() const;
};

/// Exact identity suite over `range` (numeric families use their defaults).
VerifyReport run_identity(FamilyId family, Range range, unsigned digits = 30, Execution exec = Execution::parallel);

/// Strict Phi1/Phi2 bounds at each s.
VerifyReport check_bounds(const std::vector<double>& s_grid, unsigned digits = 30,
                          Execution exec = Execution::parallel);
/// Default grid {1.01, 1.1, 1.5, 2, 3, 5, 10, 25}.
const std::vector<double>& default_bounds_grid();

/// Truncated coupled series at s with `truncation` terms; residuals must lie
/// inside the tails bounded by the Phi bounds.
VerifyReport check_coupled(double s, unsigned truncation, unsigned digits = 30, Execution exec = Execution::parallel);

/// Residual and tail bounds of one coupled identity (1 or 2) at (s, T).
struct CoupledResidual {
  double residual = 0;
  double lower_tail = 0;
  double upper_tail = 0;
};
CoupledResidual coupled_residual(int identity, double s, unsigned truncation, unsigned digits = 30,
                                 Execution exec = Execution::parallel);

/// Displayed relations between odd zeta and even beta values derived from the
/// coupled series: left side and finite part against quadrature, and the
/// remainder after `cap` explicit terms against the tail bounds.
VerifyReport check_coupled_displays(unsigned cap = 40, unsigned digits = 30, Execution exec = Execution::parallel);

/// Phi_i(s) - 1/(s-1) -> C_i as s -> 1+, the C_i closed forms and the
/// printed 19-decimal values.
VerifyReport check_asymptotic_constants(unsigned digits = 30, Execution exec = Execution::parallel);

/// Negative-argument form vs sinh-over-z form vs quadrature for Phi_1, Phi_2 at
/// s = 2n+1, n = 1..n_max.
VerifyReport check_cross_representation(unsigned n_max, unsigned digits = 30, Execution exec = Execution::parallel);

/// Every log-family and sinh-over-z instance with cosh exponent <= max_exponent:
/// closed form evaluated vs quadrature.
VerifyReport check_closed_vs_quadrature(unsigned max_exponent = 12, unsigned digits = 30,
                                        Execution exec = Execution::parallel);

/// Worked closed forms with their expected (published) coefficients.
struct WorkedExample {
  std::string label;
  closed_form::IntegralSpec spec;
  closed_form::ClosedForm expected;
};
/// The 12 log-family and 13 sinh-over-z worked integrals.
const std::vector<WorkedExample>& worked_integrals();

/// Odd-value tables: Phi_which(2n+1) in the negative-argument basis.
struct WorkedPhiTable {
  int which = 1;
  unsigned n = 1;
  closed_form::ClosedForm expected;
};
const std::vector<WorkedPhiTable>& worked_phi_tables();

/// C_1 = -6 zeta'(2)/pi^2 - 1 + ln pi - (4/3) ln 2 and C_2 = -4 beta'(1)/pi + ln pi - ln 2.
closed_form::ClosedForm c_constant_closed_form(int which);

/// Published decimal values of C_1 and C_2 (19 decimals).
inline constexpr const char* kC1Printed = "-0.2095053618026607653";
inline constexpr const char* kC2Printed = "0.2059731205121406923";

/// Worked integrals and odd-value tables reproduced exactly, plus the C_i decimal prefixes.
VerifyReport reproduce_worked_examples(unsigned digits = 30, Execution exec = Execution::parallel);

}  // namespace mellin::verify
