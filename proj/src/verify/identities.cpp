#include <chrono>
#include <stdexcept>

#include "mellin/closed_form.hpp"
#include "mellin/series.hpp"
#include "mellin/verify.hpp"

namespace mellin::verify {
namespace {

using exact::binomial;
using exact::factorial;
using exact::Integer;
using exact::pow2;
using exact::Rational;
using exact::sign_power;

struct FamilyInfo {
  FamilyId id;
  const char* name;
  Range defaults;
};

const FamilyInfo kFamilies[] = {
    {FamilyId::alt_binom_odd, "alt-binom-odd", {1, 25}},
    {FamilyId::alt_binom_even, "alt-binom-even", {1, 25}},
    {FamilyId::c_odd_power, "c-odd-power", {1, 25}},
    {FamilyId::eulerian_a_sum, "eulerian-a-sum", {1, 25}},
    {FamilyId::eulerian_b_sum, "eulerian-b-sum", {1, 25}},
    {FamilyId::binom_cosh_sum, "binom-cosh-sum", {1, 25}},
    {FamilyId::prop_vanishing, "prop-vanishing", {1, 20}},
    {FamilyId::prop_eta_coeff, "prop-eta-coeff", {1, 50}},
    {FamilyId::prop_zeta2_coeff, "prop-zeta2-coeff", {2, 25}},
    {FamilyId::prop_d_identity, "prop-d-identity", {0, 15}},
    {FamilyId::lemma_euler_bernoulli, "lemma-euler-bernoulli", {1, 15}},
    {FamilyId::ln_pi_free, "ln-pi-free", {3, 16}},
    {FamilyId::coupled_series, "coupled-series", {30, 30}},
    {FamilyId::bounds, "bounds", {1, 1}},
    {FamilyId::cross_rep, "cross-rep", {1, 6}},
};

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : kFamilies) {
    if (f.id == id) return f;
  }
  throw std::logic_error("unknown family");
}

Integer ipow(long base, unsigned exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exponent);
  if (base < 0 && exponent % 2 == 1) out = -out;
  return out;
}

Cell make_cell(std::vector<std::pair<std::string, std::string>> params, const Rational& expected,
               const Rational& actual) {
  Cell c;
  c.params = std::move(params);
  c.expected = expected.to_string();
  c.actual = actual.to_string();
  c.pass = expected == actual;
  return c;
}

std::string str(long v) { return std::to_string(v); }

// One parameter value -> the cells it produces.
using CellBuilder = std::vector<Cell> (*)(unsigned);

std::vector<Cell> alt_binom_odd(unsigned n) {
  std::vector<Cell> out;
  for (unsigned j = 0; j <= n; ++j) {
    Integer sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
      sum += sign_power(k) * binomial(2 * n + 1, k) * ipow(2 * n + 1 - 2 * k, 2 * j + 1);
    }
    const Integer expected = j < n ? Integer(0) : Integer(pow2(2 * n) * factorial(2 * n + 1));
    out.push_back(make_cell({{"n", str(n)}, {"j", str(j)}}, expected, sum));
  }
  return out;
}

std::vector<Cell> alt_binom_even(unsigned n) {
  std::vector<Cell> out;
  for (unsigned j = 0; j <= n; ++j) {
    Integer sum = 0;
    for (unsigned k = 0; k < n; ++k) {
      sum += sign_power(k) * binomial(2 * n, k) * ipow(2 * n - 2 * k, 2 * j);
    }
    Integer expected = 0;
    if (j == 0) {
      expected = sign_power(n + 1) * binomial(2 * n, n);
    } else if (j == n) {
      expected = pow2(2 * n) * factorial(2 * n) / 2;
    }
    out.push_back(make_cell({{"n", str(n)}, {"j", str(j)}}, expected, sum));
  }
  return out;
}

std::vector<Cell> c_odd_power(unsigned n) {
  std::vector<Cell> out;
  for (unsigned k = 0; k <= n; ++k) {
    Rational sum = 0;
    for (unsigned m = 0; m <= n; ++m) {
      sum += series::c_coeff(2 * m, n) * Rational(ipow(2 * k + 1, 2 * n - 2 * m), factorial(2 * n - 2 * m));
    }
    const Rational expected = k < n ? Rational(0) : Rational(pow2(2 * n));
    out.push_back(make_cell({{"n", str(n)}, {"k", str(k)}}, expected, sum));
  }
  return out;
}

std::vector<Cell> eulerian_a_sum(unsigned n) {
  // Inner sums over k depend only on r.
  std::vector<Integer> inner(n + 1);
  for (unsigned r = 0; r <= n; ++r) {
    for (unsigned k = 0; k < n; ++k) {
      inner[r] += exact::eulerian(exact::EulerianKind::A, 2 * n, n - 1 - k) * ipow(2 * k + 1, 2 * r);
    }
  }
  std::vector<Cell> out;
  for (unsigned p = 0; p <= n; ++p) {
    Rational sum = 0;
    for (unsigned r = 0; r <= n - p; ++r) {
      sum += series::c_coeff(2L * (n - p - r), n) * Rational(inner[r], factorial(2 * r));
    }
    const Rational expected = p < n ? Rational(0) : Rational(factorial(2 * n), Integer(2));
    out.push_back(make_cell({{"n", str(n)}, {"p", str(p)}}, expected, sum));
  }
  return out;
}

std::vector<Cell> eulerian_b_sum(unsigned n) {
  std::vector<Integer> inner(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    for (unsigned k = 0; k < n; ++k) {
      inner[m] += exact::eulerian(exact::EulerianKind::B, 2 * n - 1, k) * ipow(2L * n - 1 - 2L * k, 2 * m);
    }
  }
  std::vector<Cell> out;
  for (unsigned p = 0; p <= n; ++p) {
    Rational sum = 0;
    for (unsigned m = 0; m <= n - p; ++m) {
      sum += series::d_coeff(2L * (n - m - p), n) * Rational(inner[m], factorial(2 * m));
    }
    Rational expected = 0;
    if (p == 0) {
      expected = Rational(pow2(2 * n - 2) * (pow2(2 * n - 1) - 1)) * exact::bernoulli(2 * n) / Rational(n);
    } else if (p == n) {
      expected = Rational(pow2(2 * n - 2) * factorial(2 * n - 1));
    }
    out.push_back(make_cell({{"n", str(n)}, {"p", str(p)}}, expected, sum));
  }
  return out;
}

std::vector<Cell> binom_cosh_sum(unsigned n) {
  std::vector<Cell> out;
  for (unsigned q = 0; q <= n; ++q) {
    Rational sum = 0;
    for (unsigned m = 0; m <= n; ++m) {
      Integer inner = 0;
      for (unsigned k = 0; k <= q; ++k) inner += binomial(2 * q + 1, k) * ipow(2 * q + 1 - 2 * k, 2 * m);
      sum += series::c_coeff(2L * (n - m), n) * Rational(inner, factorial(2 * m));
    }
    const Rational expected = q < n ? Rational(0) : Rational(pow2(2 * n));
    out.push_back(make_cell({{"n", str(n)}, {"q", str(q)}}, expected, sum));
  }
  return out;
}

std::vector<Cell> prop_vanishing(unsigned n) {
  std::vector<Cell> out;
  for (unsigned q = 0; q < n; ++q) {
    Rational sum = 0;
    for (unsigned m = 0; m <= n; ++m) {
      sum += series::c_coeff(2L * (n - m), n) / Rational(factorial(2 * m)) * series::omega(q, m);
    }
    out.push_back(make_cell({{"n", str(n)}, {"q", str(q)}}, Rational(0), sum));
  }
  return out;
}

std::vector<Cell> prop_eta_coeff(unsigned n) {
  return {make_cell({{"n", str(n)}}, Rational(4, 2 * n + 1), closed_form::phi_odd_coeff(1, 0, n))};
}

std::vector<Cell> prop_zeta2_coeff(unsigned n) {
  const auto cf = closed_form::sinh_over_z_integral(n - 1, 2 * n);
  return {make_cell({{"n", str(n)}}, Rational(-6, 2L * n - 1),
                    cf.coeff(closed_form::BasisSymbol::zeta_ratio(0)))};
}

std::vector<Cell> prop_d_identity(unsigned n) {
  Rational sum = 0;
  for (unsigned m = 0; m <= n; ++m) {
    Integer inner = 0;
    for (unsigned k = 0; k <= n; ++k) inner += binomial(4 * n + 2, 2 * n - 2 * k) * ipow(2 * k + 1, 2 * n - 2 * m);
    sum += series::d_coeff(2 * m, n + 1) * Rational(inner, factorial(2 * n - 2 * m));
  }
  return {make_cell({{"n", str(n)}}, Rational(pow2(2 * n), Integer(2 * n + 1)), sum)};
}

std::vector<Cell> lemma_euler_bernoulli(unsigned n) {
  std::vector<Cell> out;
  for (unsigned q = 0; q < n; ++q) {
    Rational first = 0;
    for (unsigned m = 0; m <= n; ++m) {
      Rational inner = 0;
      for (unsigned p = 1; p <= m; ++p) {
        const Rational weight =
            Rational(pow2(2 * p - 1) * (pow2(2 * p) - 1), Integer(p)) * exact::bernoulli(2 * p);
        inner += Rational(binomial(2 * m, 2 * m - 2 * p)) * series::omega(q, m - p) * weight;
      }
      first += series::c_coeff(2L * (n - m), n) / Rational(factorial(2 * m)) * inner;
    }
    const Rational first_expected =
        Rational(sign_power(q + n + 1) * factorial(q) * factorial(n - q - 1), 2 * factorial(n));
    auto c1 = make_cell({{"n", str(n)}, {"q", str(q)}, {"line", "1"}}, first_expected, first);
    out.push_back(std::move(c1));

    Rational second = 0;
    for (unsigned m = 0; m + 1 <= n; ++m) {
      Rational inner = 0;
      for (unsigned p = 0; p <= m; ++p) {
        inner += Rational(binomial(2 * m + 1, 2 * m - 2 * p)) * series::omega(q, m - p) *
                 Rational(exact::euler_number(2 * p));
      }
      second += series::d_coeff(2L * (n - m) - 2, n) / Rational(factorial(2 * m + 1)) * inner;
    }
    const Rational second_expected =
        Rational(sign_power(q + n + 1) * pow2(2 * q + 1) * factorial(q) * factorial(n) * factorial(2 * n - 2 * q - 2),
                 factorial(n - q - 1) * factorial(2 * n));
    out.push_back(make_cell({{"n", str(n)}, {"q", str(q)}, {"line", "2"}}, second_expected, second));
  }
  return out;
}

std::vector<Cell> ln_pi_free(unsigned big_n) {
  // Coefficient of ln(pi) in the combination that builds sinh_over_z(q, N).
  std::vector<Cell> out;
  for (unsigned q = 1; 2 * q < big_n; ++q) {
    Rational coeff;
    if (big_n % 2 == 0) {
      const unsigned n = big_n / 2;
      coeff = Rational(2L * n) * closed_form::log_odd_ln_pi_coeff(q, n) -
              Rational(2L * q) * closed_form::log_odd_ln_pi_coeff(q - 1, n - 1);
    } else {
      const unsigned n = (big_n - 1) / 2;
      coeff = Rational(2L * n + 1) * closed_form::log_even_ln_pi_coeff(q, n + 1) -
              Rational(2L * q) * closed_form::log_even_ln_pi_coeff(q - 1, n);
    }
    out.push_back(make_cell({{"N", str(big_n)}, {"q", str(q)}}, Rational(0), coeff));
  }
  return out;
}

CellBuilder builder(FamilyId id) {
  switch (id) {
    case FamilyId::alt_binom_odd: return alt_binom_odd;
    case FamilyId::alt_binom_even: return alt_binom_even;
    case FamilyId::c_odd_power: return c_odd_power;
    case FamilyId::eulerian_a_sum: return eulerian_a_sum;
    case FamilyId::eulerian_b_sum: return eulerian_b_sum;
    case FamilyId::binom_cosh_sum: return binom_cosh_sum;
    case FamilyId::prop_vanishing: return prop_vanishing;
    case FamilyId::prop_eta_coeff: return prop_eta_coeff;
    case FamilyId::prop_zeta2_coeff: return prop_zeta2_coeff;
    case FamilyId::prop_d_identity: return prop_d_identity;
    case FamilyId::lemma_euler_bernoulli: return lemma_euler_bernoulli;
    case FamilyId::ln_pi_free: return ln_pi_free;
    default: return nullptr;
  }
}

unsigned min_parameter(FamilyId id) {
  switch (id) {
    case FamilyId::prop_zeta2_coeff: return 2;
    case FamilyId::prop_d_identity: return 0;
    case FamilyId::ln_pi_free: return 3;
    default: return 1;
  }
}

}  // namespace

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& f : kFamilies) v.push_back(f.id);
    return v;
  }();
  return ids;
}

std::string family_name(FamilyId id) { return info(id).name; }

std::optional<FamilyId> parse_family(const std::string& name) {
  for (const auto& f : kFamilies) {
    if (name == f.name) return f.id;
  }
  return std::nullopt;
}

bool is_exact_family(FamilyId id) { return builder(id) != nullptr; }

Range default_range(FamilyId id) { return info(id).defaults; }

Range parse_range(const std::string& text) {
  auto parse_uint = [&](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) {
      throw std::invalid_argument("malformed range '" + text + "': expected a..b with non-negative integers");
    }
    return static_cast<unsigned>(std::stoul(part));
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_uint(text);
  } else {
    r.lo = parse_uint(text.substr(0, dots));
    r.hi = parse_uint(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("malformed range '" + text + "': lower end exceeds upper end");
  return r;
}

VerifyReport run_identity(FamilyId family, Range range, unsigned digits, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  switch (family) {
    case FamilyId::coupled_series: {
      // range selects the truncation; s in {2, 4, 6}
      for (double s : {2.0, 4.0, 6.0}) {
        auto part = check_coupled(s, range.hi, digits, exec);
        report.precision_digits = part.precision_digits;
        report.tolerance = part.tolerance;
        for (auto& c : part.cells) report.cells.push_back(std::move(c));
      }
      break;
    }
    case FamilyId::bounds:
      report = check_bounds(default_bounds_grid(), digits, exec);
      break;
    case FamilyId::cross_rep:
      report = check_cross_representation(range.hi, digits, exec);
      break;
    default: {
      if (range.lo < min_parameter(family)) {
        throw std::invalid_argument(family_name(family) + ": range must start at " +
                                    std::to_string(min_parameter(family)) + " or above");
      }
      const CellBuilder build = builder(family);
      const std::size_t count = range.hi - range.lo + 1;
      std::vector<std::vector<Cell>> slots(count);
      for_each_index(count, exec, [&](std::size_t i) { slots[i] = build(range.lo + static_cast<unsigned>(i)); });
      for (auto& slot : slots) {
        for (auto& c : slot) report.cells.push_back(std::move(c));
      }
    }
  }
  report.family = family_name(family);
  report.range = range;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mellin::verify
