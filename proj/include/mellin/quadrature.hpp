#pragma once

// Double-exponential (exp-sinh) quadrature on (0, inf) and the integrals it
// serves as an oracle for.

#include <cstddef>
#include <functional>
#include <vector>

#include "mellin/bigreal.hpp"
#include "mellin/closed_form.hpp"
#include "mellin/execution.hpp"

namespace mellin::quadrature {

using numerics::BigReal;

inline constexpr unsigned kDefaultDigits = 30;
inline constexpr unsigned kMaxDigits = 100;

struct QuadResult {
  BigReal value;
  /// |I_L - I_{L-1}| plus the magnitude of the truncated boundary terms.
  BigReal error_estimate;
  std::size_t nodes_used = 0;
  /// Trapezoid sums per level, coarse to fine.
  std::vector<BigReal> level_values;
  bool converged = false;
};

struct QuadOptions {
  unsigned digits = kDefaultDigits;
  unsigned max_level = 12;
  Execution exec = Execution::parallel;
};

/// f(x) for x in (0, inf), evaluated at precision `bits`. Must be safe to call
/// concurrently.
using Integrand = std::function<BigReal(const BigReal& x, mpfr_prec_t bits)>;

/// int_0^inf f(x) dx with x = exp((pi/2) sinh t). Node sums are evaluated in
/// parallel into fixed slots and reduced in index order, so the serial and
/// parallel paths agree bit for bit.
QuadResult integrate_half_line(const Integrand& f, const QuadOptions& options = {});

/// Phi_which(s), which in {1, 2}, s > 1.
QuadResult quad_phi(int which, double s, unsigned digits = kDefaultDigits, Execution exec = Execution::parallel);
/// Phi_which(s) - 1/(s-1) computed without the pole, s >= 1.
QuadResult quad_phi_regular_part(int which, double s, unsigned digits = kDefaultDigits,
                                 Execution exec = Execution::parallel);
/// C_which = int_0^1 (f_which(x) - 1/x) dx.
QuadResult quad_c_constant(int which, unsigned digits = kDefaultDigits, Execution exec = Execution::parallel);
/// int_0^inf sinh^{2q+1} z ln z / cosh^{cosh_exp} z dz, requires 2q+1 < cosh_exp.
QuadResult quad_log_family(unsigned q, unsigned cosh_exp, unsigned digits = kDefaultDigits,
                           Execution exec = Execution::parallel);
/// int_0^inf sinh^{2q} z / (z cosh^N z) dz, requires 0 < 2q < N.
QuadResult quad_sinh_over_z(unsigned q, unsigned big_n, unsigned digits = kDefaultDigits,
                            Execution exec = Execution::parallel);
/// Dispatch on an IntegralSpec.
QuadResult quad_spec(const closed_form::IntegralSpec& spec, unsigned digits = kDefaultDigits,
                     Execution exec = Execution::parallel);

}  // namespace mellin::quadrature
