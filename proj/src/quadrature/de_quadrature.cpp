#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "mellin/lfunc.hpp"
#include "mellin/quadrature.hpp"

namespace mellin::quadrature {

using numerics::digits_to_bits;

namespace {

constexpr double kBaseStep = 0.5;
constexpr double kMaxT = 24.0;

struct Node {
  BigReal x;
  BigReal w;  // dx/dt
};

Node make_node(double t, mpfr_prec_t bits) {
  BigReal tb = BigReal::with_bits(bits);
  mpfr_set_d(tb.raw(), t, MPFR_RNDN);
  BigReal half_pi = BigReal::with_bits(bits);
  mpfr_const_pi(half_pi.raw(), MPFR_RNDN);
  half_pi /= 2L;
  BigReal x = numerics::exp(half_pi * numerics::sinh(tb));
  BigReal w = x * half_pi * numerics::cosh(tb);
  return Node{std::move(x), std::move(w)};
}

// Nodes of one refinement level, keyed by the signed index j (t = j * h).
// Level 0 holds every j; finer levels hold odd j only.
class NodeTable {
 public:
  NodeTable(unsigned level, mpfr_prec_t bits) : level_(level), bits_(bits) {}

  // Ensures all nodes with index in [lo, hi] exist; returns them in index order.
  std::vector<const Node*> range(long lo, long hi, Execution exec) {
    std::vector<long> wanted;
    for (long j = lo; j <= hi; ++j) {
      if (level_ == 0 || (j % 2 != 0)) wanted.push_back(j);
    }
    {
      std::shared_lock lock(mutex_);
      if (covers(lo, hi)) return collect(wanted);
    }
    std::unique_lock lock(mutex_);
    std::vector<long> missing;
    for (long j : wanted) {
      if (nodes_.find(j) == nodes_.end()) missing.push_back(j);
    }
    std::vector<std::unique_ptr<Node>> fresh(missing.size());
    const double h = kBaseStep / std::ldexp(1.0, static_cast<int>(level_));
    for_each_index(missing.size(), exec, [&](std::size_t i) {
      fresh[i] = std::make_unique<Node>(make_node(static_cast<double>(missing[i]) * h, bits_));
    });
    for (std::size_t i = 0; i < missing.size(); ++i) nodes_.emplace(missing[i], std::move(fresh[i]));
    lo_ = std::min(lo_, lo);
    hi_ = std::max(hi_, hi);
    return collect(wanted);
  }

 private:
  bool covers(long lo, long hi) const { return lo >= lo_ && hi <= hi_; }

  std::vector<const Node*> collect(const std::vector<long>& wanted) const {
    std::vector<const Node*> out;
    out.reserve(wanted.size());
    for (long j : wanted) out.push_back(nodes_.at(j).get());
    return out;
  }

  unsigned level_;
  mpfr_prec_t bits_;
  std::shared_mutex mutex_;
  std::map<long, std::unique_ptr<Node>> nodes_;
  long lo_ = 1;
  long hi_ = 0;
};

class NodeCache {
 public:
  NodeTable& table(unsigned level, mpfr_prec_t bits) {
    const auto key = std::make_pair(level, bits);
    {
      std::shared_lock lock(mutex_);
      auto it = tables_.find(key);
      if (it != tables_.end()) return *it->second;
    }
    std::unique_lock lock(mutex_);
    auto& slot = tables_[key];
    if (!slot) slot = std::make_unique<NodeTable>(level, bits);
    return *slot;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<unsigned, mpfr_prec_t>, std::unique_ptr<NodeTable>> tables_;
};

NodeCache& node_cache() {
  static NodeCache cache;
  return cache;
}

BigReal node_term(const Integrand& f, const Node& node, mpfr_prec_t bits) {
  BigReal v = f(node.x, bits);
  if (!v.is_finite()) return BigReal::with_bits(bits);
  return v * node.w;
}

// Walks outward from t = 0 in base steps until two consecutive terms are
// negligible; returns the last index kept and the largest term seen.
long scan_side(const Integrand& f, int direction, mpfr_prec_t bits, const BigReal& rel_eps, BigReal& max_term,
               BigReal& boundary) {
  int quiet = 0;
  long j = 0;
  const long cap = static_cast<long>(kMaxT / kBaseStep);
  while (j < cap) {
    ++j;
    const Node node = make_node(direction * j * kBaseStep, bits);
    BigReal term = numerics::abs(node_term(f, node, bits));
    if (term > max_term) max_term = term;
    boundary = term;
    if (term <= rel_eps * max_term && j * kBaseStep >= 1.0) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
  }
  return j;
}

void check_digits(unsigned digits) {
  if (digits == 0 || digits > kMaxDigits) {
    throw std::invalid_argument("quadrature precision must be in 1.." + std::to_string(kMaxDigits) +
                                " digits (got " + std::to_string(digits) + ")");
  }
}

// base^e for a real exponent, with the integer case exact.
BigReal real_power(const BigReal& base, double e) {
  if (e == 0.0) {
    BigReal one = BigReal::with_bits(base.bits());
    mpfr_set_ui(one.raw(), 1, MPFR_RNDN);
    return one;
  }
  if (e == std::floor(e) && std::fabs(e) < 1e6) return numerics::pow(base, static_cast<long>(e));
  BigReal eb = BigReal::with_bits(base.bits());
  mpfr_set_d(eb.raw(), e, MPFR_RNDN);
  return numerics::pow(base, eb);
}

BigReal sech(const BigReal& x) {
  BigReal c = numerics::cosh(x);
  BigReal out = BigReal::with_bits(x.bits());
  mpfr_ui_div(out.raw(), 1, c.raw(), MPFR_RNDN);
  return out;
}

BigReal reciprocal(const BigReal& x) {
  BigReal out = BigReal::with_bits(x.bits());
  mpfr_ui_div(out.raw(), 1, x.raw(), MPFR_RNDN);
  return out;
}

// Odd Taylor series sum_k coeff_k u^{2k-1} for the small-u branch of the
// pole-subtracted kernels: 1/u - coth u and 1/u - csch u.
class OddSeries {
 public:
  OddSeries(bool csch, mpfr_prec_t bits) {
    const unsigned terms = static_cast<unsigned>(numerics::bits_to_digits(bits) / 1.5) + 4;
    for (unsigned k = 1; k <= terms; ++k) {
      exact::Rational c = exact::bernoulli(2 * k) / exact::Rational(exact::factorial(2 * k));
      if (csch) {
        c *= exact::Rational(2 * (1 - exact::pow2(2 * k - 1)));
      } else {
        c *= exact::Rational(exact::pow2(2 * k));
      }
      BigReal v = BigReal::with_bits(bits);
      mpfr_set_q(v.raw(), c.raw().get_mpq_t(), MPFR_RNDN);
      coeffs_.push_back(-v);
    }
  }

  BigReal operator()(const BigReal& u) const {
    const BigReal u2 = u * u;
    BigReal acc = BigReal::with_bits(u.bits());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u2 + *it;
    return acc * u;
  }

 private:
  std::vector<BigReal> coeffs_;
};

}  // namespace

QuadResult integrate_half_line(const Integrand& f, const QuadOptions& options) {
  check_digits(options.digits);
  numerics::ensure_wide_exponent_range();
  const unsigned wd = options.digits + numerics::kGuardDigits;
  const mpfr_prec_t bits = digits_to_bits(wd);
  const BigReal rel_eps = numerics::ten_pow_neg(wd, wd);
  const BigReal tol = numerics::ten_pow_neg(options.digits, wd);

  BigReal max_term = numerics::abs(node_term(f, make_node(0.0, bits), bits));
  BigReal left_edge(wd), right_edge(wd);
  const long j_right = scan_side(f, +1, bits, rel_eps, max_term, right_edge);
  const long j_left = scan_side(f, -1, bits, rel_eps, max_term, left_edge);

  QuadResult result;
  result.value = BigReal(wd);
  result.error_estimate = BigReal(wd);
  BigReal previous(wd);
  BigReal diff(wd);
  for (unsigned level = 0; level <= options.max_level; ++level) {
    const long scale = 1L << level;
    const long lo = -j_left * scale;
    const long hi = j_right * scale;
    auto nodes = node_cache().table(level, bits).range(lo, hi, options.exec);
    std::vector<BigReal> terms(nodes.size());
    for_each_index(nodes.size(), options.exec, [&](std::size_t i) { terms[i] = node_term(f, *nodes[i], bits); });
    BigReal sum(wd);
    for (const auto& t : terms) sum += t;
    result.nodes_used += nodes.size();
    BigReal h(kBaseStep, wd);
    mpfr_div_2ui(h.raw(), h.raw(), level, MPFR_RNDN);
    BigReal current = level == 0 ? h * sum : previous / 2L + h * sum;
    result.level_values.push_back(current);
    if (level > 0) {
      diff = numerics::abs(current - previous);
      BigReal scale_ref = numerics::max(BigReal(1L, wd), numerics::abs(current));
      if (level >= 3 && diff <= tol * scale_ref) {
        result.converged = true;
        previous = current;
        break;
      }
    }
    previous = current;
  }
  result.value = previous;
  BigReal h_last(kBaseStep, wd);
  mpfr_div_2ui(h_last.raw(), h_last.raw(), static_cast<unsigned long>(result.level_values.size() - 1), MPFR_RNDN);
  result.error_estimate = diff + (numerics::abs(left_edge) + numerics::abs(right_edge)) * h_last;
  return result;
}

QuadResult quad_phi(int which, double s, unsigned digits, Execution exec) {
  if (which != 1 && which != 2) throw std::invalid_argument("phi index must be 1 or 2");
  closed_form::IntegralSpec{which == 1 ? closed_form::Family::phi1 : closed_form::Family::phi2, 0, 0, s}.validate();
  const double power = s - 1.0;
  Integrand f = [which, power](const BigReal& u, mpfr_prec_t) {
    BigReal v = real_power(numerics::tanh(u), power) * sech(u) / u;
    return which == 1 ? v * sech(u) : v;
  };
  return integrate_half_line(f, QuadOptions{digits, 12, exec});
}

QuadResult quad_phi_regular_part(int which, double s, unsigned digits, Execution exec) {
  if (which != 1 && which != 2) throw std::invalid_argument("phi index must be 1 or 2");
  if (!(s >= 1.0) || !std::isfinite(s)) throw closed_form::DomainError("regular part requires s >= 1");
  check_digits(digits);
  const mpfr_prec_t bits = digits_to_bits(digits + numerics::kGuardDigits);
  const auto series = std::make_shared<OddSeries>(which == 2, bits);
  const double power = s - 1.0;
  Integrand f = [which, power, series](const BigReal& u, mpfr_prec_t) {
    BigReal kernel = u.to_double() < 0.5 ? (*series)(u)
                                          : reciprocal(u) - (which == 1 ? reciprocal(numerics::tanh(u))
                                                                        : reciprocal(numerics::sinh(u)));
    BigReal v = real_power(numerics::tanh(u), power) * sech(u) * kernel;
    return which == 1 ? v * sech(u) : v;
  };
  return integrate_half_line(f, QuadOptions{digits, 12, exec});
}

QuadResult quad_c_constant(int which, unsigned digits, Execution exec) {
  return quad_phi_regular_part(which, 1.0, digits, exec);
}

QuadResult quad_log_family(unsigned q, unsigned cosh_exp, unsigned digits, Execution exec) {
  if (2 * q + 1 >= cosh_exp) {
    throw closed_form::DomainError("log integral diverges: requires 2q+1 < N (got q=" + std::to_string(q) +
                                   ", N=" + std::to_string(cosh_exp) + ")");
  }
  const long odd = 2L * q + 1;
  const long rest = static_cast<long>(cosh_exp) - odd;
  Integrand f = [odd, rest](const BigReal& z, mpfr_prec_t) {
    return numerics::pow(numerics::tanh(z), odd) * numerics::pow(sech(z), rest) * numerics::log(z);
  };
  return integrate_half_line(f, QuadOptions{digits, 12, exec});
}

QuadResult quad_sinh_over_z(unsigned q, unsigned big_n, unsigned digits, Execution exec) {
  closed_form::IntegralSpec{closed_form::Family::sinh_over_z, q, big_n, 0}.validate();
  const long even = 2L * q;
  const long rest = static_cast<long>(big_n) - even;
  Integrand f = [even, rest](const BigReal& z, mpfr_prec_t) {
    return numerics::pow(numerics::tanh(z), even) * numerics::pow(sech(z), rest) / z;
  };
  return integrate_half_line(f, QuadOptions{digits, 12, exec});
}

QuadResult quad_spec(const closed_form::IntegralSpec& spec, unsigned digits, Execution exec) {
  spec.validate();
  switch (spec.family) {
    case closed_form::Family::log_odd_cosh:
    case closed_form::Family::log_even_cosh:
      return quad_log_family(spec.q, spec.cosh_exponent(), digits, exec);
    case closed_form::Family::sinh_over_z:
      return quad_sinh_over_z(spec.q, spec.n, digits, exec);
    case closed_form::Family::phi1:
      return quad_phi(1, spec.s, digits, exec);
    case closed_form::Family::phi2:
      return quad_phi(2, spec.s, digits, exec);
  }
  throw std::logic_error("unknown family");
}

}  // namespace mellin::quadrature
