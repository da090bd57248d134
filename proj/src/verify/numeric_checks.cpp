#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mellin/lfunc.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/verify.hpp"

namespace mellin::verify {
namespace {

using closed_form::BasisSymbol;
using closed_form::ClosedForm;
using closed_form::Family;
using closed_form::IntegralSpec;
using exact::Rational;
using numerics::BigReal;

// Large enough that the analytic remainder of the tail bounds is negligible.
constexpr long kExplicitTailTerms = 200000;

std::string fmt(const BigReal& x) { return x.to_scientific(25); }

std::string fmt_s(double s) {
  std::string out = std::to_string(s);
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

std::string fmt_d(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Le", x);
  return buf;
}

std::string tolerance_text(unsigned digits) { return "1e-" + std::to_string(digits - 5); }

bool close(const BigReal& a, const BigReal& b, unsigned digits) {
  return abs(a - b) < numerics::ten_pow_neg(digits - 5, digits + 10);
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Phi quadratures shared by several cells.
class PhiTable {
 public:
  PhiTable(unsigned digits) : digits_(digits) {}

  // Computes every missing (which, s) in parallel.
  void fill(const std::vector<std::pair<int, double>>& keys, Execution exec) {
    std::vector<std::pair<int, double>> todo;
    for (const auto& k : keys) {
      if (!values_.count(k) && std::find(todo.begin(), todo.end(), k) == todo.end()) todo.push_back(k);
    }
    std::vector<BigReal> out(todo.size(), BigReal(digits_));
    for_each_index(todo.size(), exec, [&](std::size_t i) {
      out[i] = quadrature::quad_phi(todo[i].first, todo[i].second, digits_, Execution::serial).value;
    });
    for (std::size_t i = 0; i < todo.size(); ++i) values_.emplace(todo[i], out[i]);
  }

  const BigReal& at(int which, double s) const { return values_.at({which, s}); }

 private:
  unsigned digits_;
  std::map<std::pair<int, double>, BigReal> values_;
};

// C(2n,n)/4^n for n = 0..count-1.
std::vector<long double> central_weights(long count) {
  std::vector<long double> a(static_cast<std::size_t>(count));
  long double v = 1;
  for (long n = 0; n < count; ++n) {
    a[static_cast<std::size_t>(n)] = v;
    v *= static_cast<long double>(2 * n + 1) / static_cast<long double>(2 * n + 2);
  }
  return a;
}

long double phi1_upper(long double t) { return 1.0L / (t - 1); }
long double phi1_lower(long double t) { return 2.0L / (t * t - 1); }
long double phi2_upper(long double t) {
  return std::sqrt(std::acos(-1.0L)) / 2 * std::exp(std::lgamma((t - 1) / 2) - std::lgamma(t / 2));
}
long double phi2_lower(long double t) { return phi2_upper(t) / t; }

// Bounds on sum_{n>=start} w_n Phi_which(s + 2n), where w_n = a_n for which=1
// and a_n/(2n-1) for which=2.
std::pair<long double, long double> tail_bounds(int which, double s, long start) {
  if (kExplicitTailTerms < s + 1) throw std::logic_error("tail bound needs more explicit terms");
  const auto a = central_weights(kExplicitTailTerms);
  long double lower = 0, upper = 0;
  for (long n = kExplicitTailTerms - 1; n >= start; --n) {
    const long double t = s + 2.0L * n;
    const long double w = which == 1 ? a[static_cast<std::size_t>(n)]
                                     : a[static_cast<std::size_t>(n)] / static_cast<long double>(2 * n - 1);
    lower += w * (which == 1 ? phi1_lower(t) : phi2_lower(t));
    upper += w * (which == 1 ? phi1_upper(t) : phi2_upper(t));
  }
  const long double m = kExplicitTailTerms - 1;
  // a_n <= 1/sqrt(pi n); Gautschi's inequality for the gamma ratio.
  upper += which == 1 ? 1.0L / std::sqrt(std::acos(-1.0L) * m) : std::sqrt(6.0L) / (8 * m);
  return {lower, upper};
}

std::vector<std::pair<int, double>> coupled_keys(double s, unsigned truncation) {
  std::vector<std::pair<int, double>> keys{{1, s}, {2, s}};
  for (unsigned n = 0; n < truncation; ++n) {
    keys.push_back({1, s + 2.0 * n});
    keys.push_back({2, s + 2.0 * n});
  }
  return keys;
}

BigReal central_weight(unsigned n, unsigned digits) {
  return BigReal(Rational(exact::binomial(2 * n, n), exact::pow2(2 * n)), digits);
}

CoupledResidual exact_residual(const PhiTable& phi, int identity, double s, unsigned truncation, unsigned digits) {
  const unsigned wd = digits + numerics::kGuardDigits;
  BigReal partial(wd);
  for (unsigned n = 0; n < truncation; ++n) {
    const BigReal w = central_weight(n, wd);
    if (identity == 1) {
      partial += w * phi.at(1, s + 2.0 * n);
    } else {
      partial -= w * phi.at(2, s + 2.0 * n) / (2L * n - 1);
    }
  }
  CoupledResidual r;
  r.residual = identity == 1 ? (phi.at(2, s) - partial).to_double() : (partial - phi.at(1, s)).to_double();
  const auto [lo, hi] = tail_bounds(identity == 1 ? 1 : 2, s, truncation);
  r.lower_tail = static_cast<double>(lo);
  r.upper_tail = static_cast<double>(hi);
  return r;
}

Cell residual_cell(int identity, double s, unsigned truncation, const CoupledResidual& r) {
  Cell c;
  c.params = {{"identity", std::to_string(identity)}, {"s", fmt_s(s)}, {"T", std::to_string(truncation)}};
  c.expected = "[" + fmt_d(r.lower_tail) + ", " + fmt_d(r.upper_tail) + "]";
  c.actual = fmt_d(r.residual);
  c.pass = r.lower_tail < r.residual && r.residual < r.upper_tail;
  c.note = "residual within tail bounds";
  return c;
}

// Relations between odd zeta and even beta values obtained from the coupled
// system after substituting known even-argument values.
struct ValueTerm {
  bool zeta;     // zeta(arg)/pi^{arg-1}, else beta(arg)/pi^{arg-1}
  unsigned arg;
  const char* coeff;
};

struct CoupledDisplay {
  std::vector<ValueTerm> lhs;
  std::vector<ValueTerm> finite;
  int tail_phi;        // Phi index inside the tail sum
  unsigned shift;      // tail terms are Phi(shift + 2n)
  unsigned tail_start;
};

const std::vector<CoupledDisplay>& coupled_displays() {
  static const std::vector<CoupledDisplay> displays = {
      {{{true, 3, "7"}},
       {{false, 2, "5386925/3407872"},
        {false, 4, "1492525919/94617600"},
        {false, 6, "-3669179/92160"},
        {false, 8, "357259/2880"},
        {false, 10, "-11967/40"},
        {false, 12, "462"},
        {false, 14, "-336"}},
       2, 2, 7},
      {{{true, 3, "14/3"}, {true, 5, "-31"}},
       {{false, 2, "11197885/9371648"},
        {false, 4, "56749463/14192640"},
        {false, 6, "-120684359/1451520"},
        {false, 8, "80843/432"},
        {false, 10, "-4189/10"},
        {false, 12, "1880/3"},
        {false, 14, "-448"}},
       2, 4, 6},
      {{{true, 3, "161/45"}, {true, 5, "-124/3"}, {true, 7, "127"}},
       {{false, 2, "44248103/42172416"},
        {false, 4, "-200799329/106444800"},
        {false, 6, "-9160721/145152"},
        {false, 8, "415337/1080"},
        {false, 10, "-659"},
        {false, 12, "2768/3"},
        {false, 14, "-640"}},
       2, 6, 5},
      {{{false, 2, "4"}},
       {{true, 3, "87350741/6589440"},
        {true, 5, "-13911343/172800"},
        {true, 7, "10591927/23040"},
        {true, 9, "-11093299/5760"},
        {true, 11, "5602639/1024"},
        {true, 13, "-1204077/128"},
        {true, 15, "7569177/1024"}},
       1, 2, 7},
      {{{false, 2, "10/3"}, {false, 4, "-16"}},
       {{true, 3, "9308719/988416"},
        {true, 5, "-2158068007/19958400"},
        {true, 7, "9143873/17280"},
        {true, 9, "-1547819/720"},
        {true, 11, "4632361/768"},
        {true, 13, "-1318751/128"},
        {true, 15, "2064321/256"}},
       1, 4, 6},
      {{{false, 2, "89/30"}, {false, 4, "-24"}, {false, 6, "64"}},
       {{true, 3, "88983991/12355200"},
        {true, 5, "-27337753/249480"},
        {true, 7, "13701649/20160"},
        {true, 9, "-1075655/432"},
        {true, 11, "2618113/384"},
        {true, 13, "-368595/32"},
        {true, 15, "1146845/128"}},
       1, 6, 5},
      {{{false, 2, "381/140"}, {false, 4, "-434/15"}, {false, 6, "416/3"}, {false, 8, "-256"}},
       {{true, 3, "20241929/3603600"},
        {true, 5, "-6040691/59400"},
        {true, 7, "5856097/7560"},
        {true, 9, "-432671/135"},
        {true, 11, "128961/16"},
        {true, 13, "-106483/8"},
        {true, 15, "163835/16"}},
       1, 8, 4},
  };
  return displays;
}

BigReal value_terms(const std::vector<ValueTerm>& terms, unsigned digits) {
  const unsigned wd = digits + numerics::kGuardDigits;
  const BigReal pi = numerics::pi(wd);
  BigReal sum(wd);
  for (const auto& t : terms) {
    const double s = t.arg;
    BigReal v = t.zeta ? numerics::eta(s, wd) / (BigReal(1L, wd) - numerics::pow(BigReal(2L, wd), 1L - t.arg))
                       : numerics::beta(s, wd);
    sum += v / numerics::pow(pi, static_cast<long>(t.arg) - 1) * BigReal(Rational::parse(t.coeff), wd);
  }
  return sum;
}

// Weight of Phi(shift + 2n) in the coupled identity whose left side is Phi_{3-tail_phi}.
BigReal display_weight(int tail_phi, unsigned n, unsigned digits) {
  BigReal w = central_weight(n, digits);
  if (tail_phi == 2) w = -w / (2L * n - 1);
  return w;
}

void append_display_cells(VerifyReport& report, unsigned cap, unsigned digits, Execution exec) {
  const auto& displays = coupled_displays();
  PhiTable phi(digits);
  std::vector<std::pair<int, double>> keys;
  for (const auto& d : displays) {
    keys.push_back({3 - d.tail_phi, static_cast<double>(d.shift)});
    for (unsigned n = 0; n < cap; ++n) keys.push_back({d.tail_phi, d.shift + 2.0 * n});
  }
  phi.fill(keys, exec);
  const unsigned wd = digits + numerics::kGuardDigits;
  for (std::size_t idx = 0; idx < displays.size(); ++idx) {
    const auto& d = displays[idx];
    const std::string label = std::to_string(idx + 1);
    const BigReal lhs = value_terms(d.lhs, digits);
    const BigReal finite = value_terms(d.finite, digits);

    Cell left;
    left.params = {{"display", label}, {"part", "left"}};
    left.expected = fmt(phi.at(3 - d.tail_phi, d.shift));
    left.actual = fmt(lhs);
    left.pass = close(lhs, phi.at(3 - d.tail_phi, d.shift), digits);
    left.note = "left side equals Phi_" + std::to_string(3 - d.tail_phi) + "(" + std::to_string(d.shift) + ")";
    report.cells.push_back(std::move(left));

    BigReal head(wd);
    for (unsigned n = 0; n < d.tail_start; ++n) head += display_weight(d.tail_phi, n, wd) * phi.at(d.tail_phi, d.shift + 2.0 * n);
    Cell fin;
    fin.params = {{"display", label}, {"part", "finite"}};
    fin.expected = fmt(head);
    fin.actual = fmt(finite);
    fin.pass = close(finite, head, digits);
    fin.note = "finite part equals the first terms of the coupled series";
    report.cells.push_back(std::move(fin));

    // What remains after the explicit terms up to cap lies within the tail bounds.
    BigReal rest = lhs - finite;
    for (unsigned n = d.tail_start; n < cap; ++n) rest -= display_weight(d.tail_phi, n, wd) * phi.at(d.tail_phi, d.shift + 2.0 * n);
    const double r = d.tail_phi == 2 ? -rest.to_double() : rest.to_double();
    const auto [lo, hi] = tail_bounds(d.tail_phi, d.shift, cap);
    Cell tail;
    tail.params = {{"display", label}, {"part", "tail"}, {"cap", std::to_string(cap)}};
    tail.expected = "[" + fmt_d(lo) + ", " + fmt_d(hi) + "]";
    tail.actual = fmt_d(r);
    tail.pass = lo < r && r < hi;
    tail.note = "remainder within tail bounds";
    report.cells.push_back(std::move(tail));
  }
}

}  // namespace

ClosedForm c_constant_closed_form(int which) {
  if (which == 1) {
    return ClosedForm{{BasisSymbol::zeta_ratio(0), Rational(-6)},
                      {BasisSymbol::constant(), Rational(-1)},
                      {BasisSymbol::log_pi(), Rational(1)},
                      {BasisSymbol::log2(), Rational(-4, 3)}};
  }
  if (which == 2) {
    return ClosedForm{{BasisSymbol::beta_ratio(0), Rational(-4)},
                      {BasisSymbol::log_pi(), Rational(1)},
                      {BasisSymbol::log2(), Rational(-1)}};
  }
  throw std::invalid_argument("constant index must be 1 or 2");
}

const std::vector<double>& default_bounds_grid() {
  static const std::vector<double> grid = {1.01, 1.1, 1.5, 2, 3, 5, 10, 25};
  return grid;
}

VerifyReport check_bounds(const std::vector<double>& s_grid, unsigned digits, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  for (double s : s_grid) {
    if (!(s > 1.0)) throw closed_form::DomainError("bounds require s > 1 (got s=" + fmt_s(s) + ")");
  }
  VerifyReport report;
  report.family = family_name(FamilyId::bounds);
  report.precision_digits = digits;
  report.tolerance = "margin 1e-" + std::to_string(digits - 10);
  std::vector<Cell> cells(2 * s_grid.size());
  for_each_index(cells.size(), exec, [&](std::size_t i) {
    const double s = s_grid[i / 2];
    const int which = static_cast<int>(i % 2) + 1;
    const auto value = quadrature::quad_phi(which, s, digits, Execution::serial).value;
    const auto b = numerics::mellin_bounds(BigReal(s, digits + numerics::kGuardDigits), digits);
    const BigReal& lo = which == 1 ? b.phi1_lower : b.phi2_lower;
    const BigReal& hi = which == 1 ? b.phi1_upper : b.phi2_upper;
    const BigReal below = value - lo;
    const BigReal above = hi - value;
    const BigReal& margin = below < above ? below : above;
    Cell& c = cells[i];
    c.params = {{"which", std::to_string(which)}, {"s", fmt_s(s)}};
    c.expected = "(" + fmt(lo) + ", " + fmt(hi) + ")";
    c.actual = fmt(value);
    c.pass = margin > numerics::ten_pow_neg(digits - 10, digits);
    c.note = "margin " + margin.to_scientific(6);
  });
  report.cells = std::move(cells);
  report.range = {0, static_cast<unsigned>(s_grid.size())};
  report.seconds = elapsed(start);
  return report;
}

CoupledResidual coupled_residual(int identity, double s, unsigned truncation, unsigned digits, Execution exec) {
  if (identity != 1 && identity != 2) throw std::invalid_argument("coupled identity must be 1 or 2");
  if (!(s > 1.0)) throw closed_form::DomainError("coupled series require s > 1");
  PhiTable phi(digits);
  phi.fill(coupled_keys(s, truncation), exec);
  return exact_residual(phi, identity, s, truncation, digits);
}

VerifyReport check_coupled(double s, unsigned truncation, unsigned digits, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  if (!(s > 1.0)) throw closed_form::DomainError("coupled series require s > 1 (got s=" + fmt_s(s) + ")");
  if (truncation < 4) throw std::invalid_argument("coupled series need truncation >= 4");
  VerifyReport report;
  report.family = family_name(FamilyId::coupled_series);
  report.range = {truncation, truncation};
  report.precision_digits = digits;
  report.tolerance = "tail bounds";
  PhiTable phi(digits);
  phi.fill(coupled_keys(s, truncation), exec);
  const unsigned steps[] = {truncation / 4, truncation / 2, truncation};
  for (int identity : {1, 2}) {
    report.cells.push_back(residual_cell(identity, s, truncation, exact_residual(phi, identity, s, truncation, digits)));
    // The residual shrinks as more terms are kept.
    std::vector<double> residuals;
    std::string trail;
    for (unsigned t : steps) {
      residuals.push_back(exact_residual(phi, identity, s, t, digits).residual);
      trail += (trail.empty() ? "" : " > ") + fmt_d(residuals.back());
    }
    Cell mono;
    mono.params = {{"identity", std::to_string(identity)}, {"s", fmt_s(s)}, {"T", "decreasing"}};
    mono.expected = "strictly decreasing";
    mono.actual = trail;
    mono.pass = residuals[0] > residuals[1] && residuals[1] > residuals[2] && residuals[2] > 0;
    report.cells.push_back(std::move(mono));
  }
  report.seconds = elapsed(start);
  return report;
}

VerifyReport check_asymptotic_constants(unsigned digits, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.family = "asymptotic-constants";
  report.range = {1, 6};
  report.precision_digits = digits;
  report.tolerance = tolerance_text(digits);
  constexpr unsigned kSteps = 6;
  // Per which: C quadrature, regular part at s = 1 + 10^-k (k = 1..6), pole path at 1.001.
  std::vector<BigReal> values(2 * (kSteps + 2), BigReal(digits));
  for_each_index(values.size(), exec, [&](std::size_t i) {
    const int which = static_cast<int>(i / (kSteps + 2)) + 1;
    const std::size_t j = i % (kSteps + 2);
    if (j == 0) {
      values[i] = quadrature::quad_c_constant(which, digits, Execution::serial).value;
    } else if (j <= kSteps) {
      values[i] = quadrature::quad_phi_regular_part(which, 1.0 + std::pow(10.0, -static_cast<double>(j)), digits,
                                                    Execution::serial)
                      .value;
    } else {
      values[i] = quadrature::quad_phi(which, 1.001, digits, Execution::serial).value;
    }
  });
  for (int which : {1, 2}) {
    const std::size_t base = static_cast<std::size_t>(which - 1) * (kSteps + 2);
    const BigReal& c = values[base];
    const std::string w = std::to_string(which);
    // Approach to C as s -> 1+.
    BigReal previous(1L, digits);
    for (unsigned k = 1; k <= kSteps; ++k) {
      const BigReal gap = abs(values[base + k] - c);
      Cell cell;
      cell.params = {{"which", w}, {"s", "1+1e-" + std::to_string(k)}};
      cell.expected = k == 1 ? "gap < 1" : "gap < previous/2";
      cell.actual = gap.to_scientific(6);
      cell.pass = k == 1 ? gap < BigReal(1L, digits) : gap * 2L < previous;
      cell.note = "|Phi(s) - 1/(s-1) - C|";
      report.cells.push_back(std::move(cell));
      previous = gap;
    }
    Cell limit;
    limit.params = {{"which", w}, {"s", "1+1e-6"}};
    limit.expected = "gap < 1e-5";
    limit.actual = previous.to_scientific(6);
    limit.pass = previous < numerics::ten_pow_neg(5, digits);
    report.cells.push_back(std::move(limit));

    const BigReal pole = values[base + kSteps + 1] - BigReal(1000L, digits);
    Cell direct;
    direct.params = {{"which", w}, {"s", "1.001"}};
    direct.expected = "within 1e-2 of " + c.to_scientific(10);
    direct.actual = pole.to_scientific(10);
    direct.pass = abs(pole - c) < numerics::ten_pow_neg(2, digits);
    direct.note = "Phi(s) - 1/(s-1) by direct quadrature";
    report.cells.push_back(std::move(direct));

    const ClosedForm closed = c_constant_closed_form(which);
    const BigReal closed_value = numerics::eval_closed_form(closed, digits);
    Cell agree;
    agree.params = {{"which", w}, {"check", "closed-form"}};
    agree.expected = fmt(closed_value);
    agree.actual = fmt(c);
    agree.pass = close(closed_value, c, digits);
    agree.note = closed.to_string();
    report.cells.push_back(std::move(agree));

    const std::string printed = which == 1 ? kC1Printed : kC2Printed;
    for (const auto& [source, v] : {std::pair<std::string, BigReal>{"quadrature", c}, {"closed-form", closed_value}}) {
      Cell prefix;
      prefix.params = {{"which", w}, {"check", "printed-" + source}};
      prefix.expected = printed;
      prefix.actual = v.to_fixed_truncated(19);
      prefix.pass = prefix.actual == printed;
      report.cells.push_back(std::move(prefix));
    }
  }
  report.seconds = elapsed(start);
  return report;
}

VerifyReport check_cross_representation(unsigned n_max, unsigned digits, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  if (n_max < 1) throw std::invalid_argument("cross-representation requires n_max >= 1");
  VerifyReport report;
  report.family = family_name(FamilyId::cross_rep);
  report.range = {1, n_max};
  report.precision_digits = digits;
  report.tolerance = tolerance_text(digits);
  std::vector<Cell> cells(2 * n_max);
  for_each_index(cells.size(), exec, [&](std::size_t i) {
    const unsigned n = static_cast<unsigned>(i / 2) + 1;
    const int which = static_cast<int>(i % 2) + 1;
    const BigReal negative = numerics::eval_closed_form(closed_form::phi_odd_closed_form(which, n), digits);
    const BigReal via_sinh = numerics::eval_closed_form(closed_form::phi_odd_via_sinh(which, n), digits);
    const BigReal quad = quadrature::quad_phi(which, 2.0 * n + 1, digits, Execution::serial).value;
    Cell& c = cells[i];
    c.params = {{"which", std::to_string(which)}, {"n", std::to_string(n)}};
    c.expected = fmt(quad);
    c.actual = fmt(negative) + " | " + fmt(via_sinh);
    c.pass = close(negative, via_sinh, digits) && close(negative, quad, digits) && close(via_sinh, quad, digits);
    c.note = "negative-argument form | sinh-over-z form vs quadrature";
  });
  report.cells = std::move(cells);
  report.seconds = elapsed(start);
  return report;
}

VerifyReport check_closed_vs_quadrature(unsigned max_exponent, unsigned digits, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<IntegralSpec> specs;
  for (unsigned n = 1; 2 * n + 1 <= max_exponent; ++n) {
    for (unsigned q = 0; q < n; ++q) specs.push_back({Family::log_odd_cosh, q, n, 0});
  }
  for (unsigned n = 1; 2 * n <= max_exponent; ++n) {
    for (unsigned q = 0; q < n; ++q) specs.push_back({Family::log_even_cosh, q, n, 0});
  }
  for (unsigned big_n = 3; big_n <= max_exponent; ++big_n) {
    for (unsigned q = 1; 2 * q < big_n; ++q) specs.push_back({Family::sinh_over_z, q, big_n, 0});
  }
  VerifyReport report;
  report.family = "closed-vs-quadrature";
  report.range = {1, max_exponent};
  report.precision_digits = digits;
  report.tolerance = tolerance_text(digits);
  std::vector<Cell> cells(specs.size());
  for_each_index(specs.size(), exec, [&](std::size_t i) {
    const auto& spec = specs[i];
    const BigReal closed = numerics::eval_closed_form(closed_form::closed_form_for(spec), digits);
    const BigReal quad = quadrature::quad_spec(spec, digits, Execution::serial).value;
    Cell& c = cells[i];
    c.params = {{"integral", spec.describe()}};
    c.expected = fmt(quad);
    c.actual = fmt(closed);
    c.pass = close(closed, quad, digits);
    c.note = "|diff| = " + abs(closed - quad).to_scientific(3);
  });
  report.cells = std::move(cells);
  report.seconds = elapsed(start);
  return report;
}

VerifyReport reproduce_worked_examples(unsigned digits, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.family = "worked-examples";
  report.range = {1, static_cast<unsigned>(worked_integrals().size() + worked_phi_tables().size())};
  const auto& integrals = worked_integrals();
  const auto& tables = worked_phi_tables();
  std::vector<Cell> cells(integrals.size() + tables.size());
  for_each_index(cells.size(), exec, [&](std::size_t i) {
    Cell& c = cells[i];
    ClosedForm expected, actual;
    if (i < integrals.size()) {
      expected = integrals[i].expected;
      actual = closed_form::closed_form_for(integrals[i].spec);
      c.params = {{"integral", integrals[i].label}};
    } else {
      const auto& t = tables[i - integrals.size()];
      expected = t.expected;
      actual = closed_form::phi_odd_closed_form(t.which, t.n);
      c.params = {{"phi", std::to_string(t.which)}, {"s", std::to_string(2 * t.n + 1)}};
    }
    c.expected = expected.to_string();
    c.actual = actual.to_string();
    c.pass = expected == actual;
  });
  report.cells = std::move(cells);
  for (int which : {1, 2}) {
    const std::string printed = which == 1 ? kC1Printed : kC2Printed;
    const BigReal quad = quadrature::quad_c_constant(which, digits, exec).value;
    Cell c;
    c.params = {{"constant", "C" + std::to_string(which)}};
    c.expected = printed;
    c.actual = quad.to_fixed_truncated(19);
    c.pass = c.actual == printed;
    c.note = "19-decimal prefix";
    report.cells.push_back(std::move(c));
  }
  report.precision_digits = digits;
  report.tolerance = "exact; 19-decimal prefix for constants";
  report.seconds = elapsed(start);
  return report;
}

VerifyReport check_coupled_displays(unsigned cap, unsigned digits, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.family = "coupled-displays";
  report.range = {cap, cap};
  report.precision_digits = digits;
  report.tolerance = tolerance_text(digits) + "; tail bounds";
  append_display_cells(report, cap, digits, exec);
  report.seconds = elapsed(start);
  return report;
}

}  // namespace mellin::verify
