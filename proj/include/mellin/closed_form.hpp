#pragma once

// Exact closed forms as rational combinations of a fixed transcendental basis.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mellin/exact.hpp"

namespace mellin::closed_form {

using exact::Rational;

/// Thrown when an integral's convergence precondition does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Basis kinds, declared in canonical (display) order.
enum class SymbolKind {
  zeta_prime_ratio,  ///< zeta'(2p+2) / pi^{2p+2}
  beta_prime_ratio,  ///< beta'(2p+1) / pi^{2p+1}
  eta_prime_neg,     ///< eta'(-2i-1)
  beta_prime_neg,    ///< beta'(-2i)
  one,
  ln_pi,
  ln2,
};

struct BasisSymbol {
  SymbolKind kind = SymbolKind::one;
  unsigned index = 0;  ///< p or i; always 0 for the index-free kinds

  static BasisSymbol zeta_ratio(unsigned p) { return {SymbolKind::zeta_prime_ratio, p}; }
  static BasisSymbol beta_ratio(unsigned p) { return {SymbolKind::beta_prime_ratio, p}; }
  static BasisSymbol eta_neg(unsigned i) { return {SymbolKind::eta_prime_neg, i}; }
  static BasisSymbol beta_neg(unsigned i) { return {SymbolKind::beta_prime_neg, i}; }
  static BasisSymbol constant() { return {SymbolKind::one, 0}; }
  static BasisSymbol log_pi() { return {SymbolKind::ln_pi, 0}; }
  static BasisSymbol log2() { return {SymbolKind::ln2, 0}; }

  bool indexed() const;
  /// JSON name, e.g. "zeta_prime_ratio".
  std::string name() const;
  /// JSON index key ("p" or "i"); empty for index-free kinds.
  std::string index_key() const;
  /// Human-readable form, e.g. "zeta'(4)/pi^4".
  std::string describe() const;

  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Finite map BasisSymbol -> nonzero Rational.
class ClosedForm {
 public:
  using Terms = std::map<BasisSymbol, Rational>;

  ClosedForm() = default;
  ClosedForm(std::initializer_list<std::pair<const BasisSymbol, Rational>> terms);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Coefficient of `symbol`, zero when absent.
  Rational coeff(const BasisSymbol& symbol) const;

  /// Adds `value` to the coefficient of `symbol`, dropping it if the sum is zero.
  void add(const BasisSymbol& symbol, const Rational& value);
  ClosedForm scaled(const Rational& factor) const;

  friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

  /// Canonical JSON: {"terms":[{"symbol":...,"p"|"i":...,"coeff":"num/den"},...]}.
  std::string to_json() const;
  /// Inverse of to_json; throws std::invalid_argument on malformed input.
  static ClosedForm from_json(const std::string& text);
  /// LaTeX in display order: ratio terms ascending, constant, ln pi, ln 2.
  std::string to_latex() const;
  /// Plain text, e.g. "-3 * zeta'(2)/pi^2 - 1/2 + 1/2 * ln(pi) - 2/3 * ln(2)".
  std::string to_string() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ClosedForm& cf);

enum class Family { log_odd_cosh, log_even_cosh, sinh_over_z, phi1, phi2 };

/// Which integral a request targets:
///  log_odd_cosh(q,n):  int_0^inf sinh^{2q+1} z ln z / cosh^{2n+1} z dz
///  log_even_cosh(q,n): int_0^inf sinh^{2q+1} z ln z / cosh^{2n} z dz
///  sinh_over_z(q,N):   int_0^inf sinh^{2q} z / (z cosh^N z) dz
///  phi1(s), phi2(s):   Mellin transforms of 1/artanh x and 1/(sqrt(1-x^2) artanh x)
struct IntegralSpec {
  Family family = Family::log_odd_cosh;
  unsigned q = 0;
  unsigned n = 0;  ///< n for the log families, N for sinh_over_z
  double s = 0;    ///< argument of phi1/phi2

  /// Throws DomainError naming the violated convergence constraint.
  void validate() const;
  /// Exponent of cosh in the denominator (log and sinh_over_z families).
  unsigned cosh_exponent() const;
  std::string describe() const;
};

/// S_{p,q,n}; requires p <= n-1.
Rational s_coeff(unsigned p, unsigned q, unsigned n);

/// Coefficient of ln(pi) in log_integral_odd_cosh(q, n).
Rational log_odd_ln_pi_coeff(unsigned q, unsigned n);
/// Coefficient of ln(pi) in log_integral_even_cosh(q, n).
Rational log_even_ln_pi_coeff(unsigned q, unsigned n);

ClosedForm log_integral_odd_cosh(unsigned q, unsigned n);
ClosedForm log_integral_even_cosh(unsigned q, unsigned n);
/// Requires 0 < 2q < N. Throws std::logic_error if a ln(pi) term survives.
ClosedForm sinh_over_z_integral(unsigned q, unsigned big_n);

/// Odd-argument values in the negative-argument basis: which=1 gives
/// Phi1(2n+1) over eta'(-2i-1), which=2 gives Phi2(2n+1) over beta'(-2i).
ClosedForm phi_odd_closed_form(int which, unsigned n);
/// Coefficient of eta'(-2i-1) (which=1) or beta'(-2i) (which=2) for argument 2n+1.
Rational phi_odd_coeff(int which, unsigned i, unsigned n);

/// Phi1(2n+1) or Phi2(2n+1) through the sinh_over_z construction.
ClosedForm phi_odd_via_sinh(int which, unsigned n);

/// Closed form of any spec with a finite representation (phi at odd integers >= 3).
ClosedForm closed_form_for(const IntegralSpec& spec);

/// First `terms` exact summands of the even-argument series; the caller
/// multiplies their sum by pi * 2^{1-2m}.
std::vector<Rational> mellin_even_partial(int which, unsigned m, unsigned terms);

}  // namespace mellin::closed_form
