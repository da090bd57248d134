#include <cmath>
#include <sstream>

#include "mellin/closed_form.hpp"
#include "mellin/series.hpp"

namespace mellin::closed_form {

using exact::bernoulli;
using exact::binomial;
using exact::euler_number;
using exact::factorial;
using exact::harmonic;
using exact::Integer;
using exact::pow2;
using exact::sign_power;
using series::c_coeff;
using series::d_coeff;
using series::omega;

namespace {

Rational inv_factorial(unsigned n) { return Rational(Integer(1), factorial(n)); }

void require_log_family(const char* name, unsigned q, unsigned n) {
  if (n < 1 || q + 1 > n) {
    std::ostringstream msg;
    msg << name << ": convergence requires n >= 1 and q <= n-1 (got q=" << q << ", n=" << n << ")";
    throw DomainError(msg.str());
  }
}

// sum_{m=p}^{n-1} d_{2n-2m-2,n}/(2m+1)! C(2m+1,2m-2p) Omega_{q,m-p}
Rational even_inner(unsigned p, unsigned q, unsigned n) {
  Rational acc = 0;
  for (unsigned m = p; m + 1 <= n; ++m) {
    acc += d_coeff(2L * n - 2L * m - 2, n) * inv_factorial(2 * m + 1) * Rational(binomial(2 * m + 1, 2 * m - 2 * p)) *
           omega(q, m - p);
  }
  return acc;
}

// sum_m d_{2n-2m-2,n}/(2m+1)! sum_{p<=m} C(2m+1,2m-2p) Omega_{q,m-p} E_{2p} w(p)
template <typename Weight>
Rational even_double_sum(unsigned q, unsigned n, Weight weight) {
  Rational acc = 0;
  for (unsigned m = 0; m + 1 <= n; ++m) {
    Rational inner = 0;
    for (unsigned p = 0; p <= m; ++p) {
      inner += Rational(binomial(2 * m + 1, 2 * m - 2 * p)) * omega(q, m - p) * Rational(euler_number(2 * p)) *
               weight(p);
    }
    acc += d_coeff(2L * n - 2L * m - 2, n) * inv_factorial(2 * m + 1) * inner;
  }
  return acc;
}

}  // namespace

void IntegralSpec::validate() const {
  std::ostringstream msg;
  switch (family) {
    case Family::log_odd_cosh:
      if (n < 1 || 2 * q + 1 >= 2 * n + 1) {
        msg << "log-odd integral diverges: convergence requires 2q+1 < 2n+1 with n >= 1 (got q=" << q
            << ", n=" << n << ")";
        throw DomainError(msg.str());
      }
      return;
    case Family::log_even_cosh:
      if (n < 1 || 2 * q + 1 >= 2 * n) {
        msg << "log-even integral diverges: convergence requires 2q+1 < 2n with n >= 1 (got q=" << q << ", n=" << n
            << ")";
        throw DomainError(msg.str());
      }
      return;
    case Family::sinh_over_z:
      if (q == 0 || 2 * q >= n) {
        msg << "sinh-over-z integral: convergence requires 0 < 2q < N (got q=" << q << ", N=" << n << ")";
        throw DomainError(msg.str());
      }
      return;
    case Family::phi1:
    case Family::phi2:
      if (!(s > 1.0) || !std::isfinite(s)) {
        msg << "Mellin transform diverges: requires s > 1 (got s=" << s << ")";
        throw DomainError(msg.str());
      }
      return;
  }
}

unsigned IntegralSpec::cosh_exponent() const {
  switch (family) {
    case Family::log_odd_cosh:
      return 2 * n + 1;
    case Family::log_even_cosh:
      return 2 * n;
    case Family::sinh_over_z:
      return n;
    default:
      return 0;
  }
}

std::string IntegralSpec::describe() const {
  std::ostringstream out;
  switch (family) {
    case Family::log_odd_cosh:
      out << "log-odd(q=" << q << ", n=" << n << ")";
      break;
    case Family::log_even_cosh:
      out << "log-even(q=" << q << ", n=" << n << ")";
      break;
    case Family::sinh_over_z:
      out << "sinh-over-z(q=" << q << ", N=" << n << ")";
      break;
    case Family::phi1:
      out << "phi1(s=" << s << ")";
      break;
    case Family::phi2:
      out << "phi2(s=" << s << ")";
      break;
  }
  return out.str();
}

Rational s_coeff(unsigned p, unsigned q, unsigned n) {
  if (p + 1 > n) {
    throw DomainError("s_coeff: requires p <= n-1 (got p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
  }
  Rational acc = 0;
  for (unsigned m = p + 1; m <= n; ++m) {
    acc += c_coeff(2L * n - 2L * m, n) * inv_factorial(2 * m) * Rational(binomial(2 * m, 2 * p + 2)) *
           omega(q, m - p - 1);
  }
  return acc;
}

Rational log_odd_ln_pi_coeff(unsigned q, unsigned n) {
  require_log_family("log-odd", q, n);
  Rational acc = 0;
  for (unsigned p = 0; p < n; ++p) {
    const Integer four = pow2(2 * p + 2);
    acc += Rational(pow2(2 * p + 1) * (four - 1), Integer(p + 1)) * bernoulli(2 * p + 2) * s_coeff(p, q, n);
  }
  return Rational(sign_power(q + n + 1)) * acc;
}

Rational log_even_ln_pi_coeff(unsigned q, unsigned n) {
  require_log_family("log-even", q, n);
  return Rational(sign_power(q + n + 1)) * even_double_sum(q, n, [](unsigned) { return Rational(1); });
}

ClosedForm log_integral_odd_cosh(unsigned q, unsigned n) {
  IntegralSpec{Family::log_odd_cosh, q, n, 0}.validate();
  ClosedForm out;
  Rational j_sum = 0, k_sum = 0, i_sum = 0;
  for (unsigned p = 0; p < n; ++p) {
    const Rational s = s_coeff(p, q, n);
    const Integer four = pow2(2 * p + 2);
    out.add(BasisSymbol::zeta_ratio(p),
            Rational(sign_power(q + n + p) * 2 * factorial(2 * p + 1) * (four - 1)) * s);
    const Rational base = Rational(pow2(2 * p + 1), Integer(p + 1)) * bernoulli(2 * p + 2) * s;
    k_sum += base;
    j_sum += base * Rational(four - 1);
    i_sum += base * Rational(four - 1) * harmonic(2 * p + 1);
  }
  const Rational j = Rational(sign_power(q + n + 1)) * j_sum;
  const Rational k = Rational(sign_power(q + n)) * k_sum;
  out.add(BasisSymbol::constant(), Rational(sign_power(q + n)) * i_sum);
  out.add(BasisSymbol::log_pi(), j);
  out.add(BasisSymbol::log2(), k - j);
  return out;
}

ClosedForm log_integral_even_cosh(unsigned q, unsigned n) {
  IntegralSpec{Family::log_even_cosh, q, n, 0}.validate();
  ClosedForm out;
  for (unsigned p = 0; p < n; ++p) {
    const Integer scale = sign_power(q + n + p) * pow2(2 * p + 2) * factorial(2 * p);
    out.add(BasisSymbol::beta_ratio(p), Rational(scale) * even_inner(p, q, n));
  }
  const Rational n_coeff = Rational(sign_power(q + n + 1)) * even_double_sum(q, n, [](unsigned) { return Rational(1); });
  const Rational m_coeff =
      Rational(sign_power(q + n)) * even_double_sum(q, n, [](unsigned p) { return harmonic(2 * p); });
  out.add(BasisSymbol::constant(), m_coeff);
  out.add(BasisSymbol::log_pi(), n_coeff);
  out.add(BasisSymbol::log2(), -n_coeff);
  return out;
}

ClosedForm sinh_over_z_integral(unsigned q, unsigned big_n) {
  IntegralSpec{Family::sinh_over_z, q, big_n, 0}.validate();
  const Rational left(-2L * q);
  const Rational right(static_cast<long>(big_n));
  ClosedForm out;
  if (big_n % 2 == 0) {
    const unsigned n = big_n / 2;
    out = log_integral_odd_cosh(q - 1, n - 1).scaled(left) + log_integral_odd_cosh(q, n).scaled(right);
  } else {
    const unsigned n = (big_n - 1) / 2;
    out = log_integral_even_cosh(q - 1, n).scaled(left) + log_integral_even_cosh(q, n + 1).scaled(right);
  }
  if (!out.coeff(BasisSymbol::log_pi()).is_zero()) {
    throw std::logic_error("sinh-over-z closed form kept a ln(pi) term for q=" + std::to_string(q) +
                           ", N=" + std::to_string(big_n));
  }
  return out;
}

Rational phi_odd_coeff(int which, unsigned i, unsigned n) {
  if (which != 1 && which != 2) throw DomainError("phi index must be 1 or 2");
  if (i > n) return Rational(0);
  const series::GHTable table = series::gh_table(n);
  Rational acc = 0;
  for (unsigned k = i; k <= n; ++k) {
    if (which == 1) {
      acc += Rational(binomial(n, k) * pow2(2 * k + 2) * table.g(i, k), factorial(2 * k + 1));
    } else {
      acc += Rational(binomial(n, k) * 2 * table.h(i, k), factorial(2 * k));
    }
  }
  return acc;
}

ClosedForm phi_odd_closed_form(int which, unsigned n) {
  if (which != 1 && which != 2) throw DomainError("phi index must be 1 or 2");
  if (n == 0) throw DomainError("phi at s=1 diverges (pole); requires n >= 1");
  ClosedForm out;
  for (unsigned i = 0; i <= n; ++i) {
    const BasisSymbol sym = which == 1 ? BasisSymbol::eta_neg(i) : BasisSymbol::beta_neg(i);
    out.add(sym, phi_odd_coeff(which, i, n));
  }
  return out;
}

ClosedForm phi_odd_via_sinh(int which, unsigned n) {
  if (which != 1 && which != 2) throw DomainError("phi index must be 1 or 2");
  if (n == 0) throw DomainError("phi at s=1 diverges (pole); requires n >= 1");
  return which == 1 ? sinh_over_z_integral(n, 2 * n + 2) : sinh_over_z_integral(n, 2 * n + 1);
}

ClosedForm closed_form_for(const IntegralSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::log_odd_cosh:
      return log_integral_odd_cosh(spec.q, spec.n);
    case Family::log_even_cosh:
      return log_integral_even_cosh(spec.q, spec.n);
    case Family::sinh_over_z:
      return sinh_over_z_integral(spec.q, spec.n);
    case Family::phi1:
    case Family::phi2: {
      const double r = std::round(spec.s);
      if (r != spec.s || static_cast<long>(r) % 2 == 0) {
        throw DomainError("finite closed forms exist only at odd integer s >= 3 (got s=" + std::to_string(spec.s) +
                          ")");
      }
      return phi_odd_via_sinh(spec.family == Family::phi1 ? 1 : 2, static_cast<unsigned>((r - 1) / 2));
    }
  }
  return {};
}

std::vector<Rational> mellin_even_partial(int which, unsigned m, unsigned terms) {
  if (which != 1 && which != 2) throw DomainError("phi index must be 1 or 2");
  if (m < 1 || terms < 1) throw DomainError("mellin_even_partial: requires m >= 1 and terms >= 1");
  const series::ReciprocalCoeffs rc = series::reciprocal_coeffs(std::max(1U, terms - 1));
  std::vector<Rational> out;
  out.reserve(terms);
  for (unsigned n = 0; n < terms; ++n) {
    const unsigned top = m + n - 1;
    Rational term = Rational(binomial(2 * top, top), pow2(2 * n));
    if (which == 2) {
      term *= rc.p[n];
    } else {
      term *= rc.q[n] / Rational(static_cast<long>(2 * (m + n)));
    }
    out.push_back(term);
  }
  return out;
}

}  // namespace mellin::closed_form
