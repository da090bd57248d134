// Acceptance criteria 1-9; one PASS/FAIL line each. Exit status is the number
// of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mellin/lfunc.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/series.hpp"
#include "mellin/verify.hpp"

using namespace mellin;
using namespace mellin::verify;
using numerics::BigReal;

namespace {

constexpr unsigned kDigits = 30;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void require(const VerifyReport& r) {
    if (const Cell* c = r.first_counterexample()) {
      std::string where;
      for (const auto& [k, v] : c->params) where += (where.empty() ? "" : ",") + k + "=" + v;
      require(false, r.family + " " + std::to_string(r.failed()) + " failing, first [" + where + "] expected " +
                         c->expected + " got " + c->actual);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double took = seconds_since(start);
  if (took > budget_seconds) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %d. %s (%.2f s, budget %.0f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), took,
              budget_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

VerifyReport subset(const VerifyReport& full, const std::function<bool(const Cell&)>& keep) {
  VerifyReport out = full;
  out.cells.clear();
  for (const auto& c : full.cells) {
    if (keep(c)) out.cells.push_back(c);
  }
  return out;
}

bool has_param(const Cell& c, const std::string& key, const std::string& value) {
  for (const auto& [k, v] : c.params) {
    if (k == key && v == value) return true;
  }
  return false;
}

}  // namespace

int main() {
  criterion(1, "worked log-family and sinh-over-z integrals reproduced exactly", 5, [] {
    Outcome o;
    std::size_t matched = 0;
    for (const auto& ex : worked_integrals()) {
      const bool ok = closed_form::closed_form_for(ex.spec) == ex.expected;
      matched += ok ? 1 : 0;
      o.require(ok, ex.label);
    }
    o.require(worked_integrals().size() == 25, "corpus size");
    if (o.pass) o.detail = std::to_string(matched) + "/25 exact";
    return o;
  });

  criterion(2, "odd-argument tables for Phi_1 and Phi_2, n = 1..4, reproduced exactly", 1, [] {
    Outcome o;
    for (const auto& t : worked_phi_tables()) {
      o.require(closed_form::phi_odd_closed_form(t.which, t.n) == t.expected,
                "Phi_" + std::to_string(t.which) + "(" + std::to_string(2 * t.n + 1) + ")");
    }
    o.require(worked_phi_tables().size() == 8, "table count");
    return o;
  });

  criterion(3, "eta coefficient n<=50, zeta'(2) coefficient 2<=n<=25, d-identity n<=15, ln pi absent N<=16", 60, [] {
    Outcome o;
    o.require(run_identity(FamilyId::prop_eta_coeff, {1, 50}));
    o.require(run_identity(FamilyId::prop_zeta2_coeff, {2, 25}));
    o.require(run_identity(FamilyId::prop_d_identity, {0, 15}));
    o.require(run_identity(FamilyId::ln_pi_free, {3, 16}));
    return o;
  });

  criterion(4, "six alternating/Eulerian identity families n<=25, vanishing residue n<=20, Euler-Bernoulli lemma n<=15",
            300, [] {
              Outcome o;
              for (auto id : {FamilyId::alt_binom_odd, FamilyId::alt_binom_even, FamilyId::c_odd_power,
                              FamilyId::eulerian_a_sum, FamilyId::eulerian_b_sum, FamilyId::binom_cosh_sum}) {
                VerifyReport merged;
                merged.family = family_name(id);
                for (unsigned n = 1; n <= 25; ++n) {
                  const auto start = std::chrono::steady_clock::now();
                  auto r = run_identity(id, {n, n}, kDigits, Execution::serial);
                  const double took = seconds_since(start);
                  for (auto& c : r.cells) merged.cells.push_back(std::move(c));
                  o.require(took < 1.0, family_name(id) + " n=" + std::to_string(n) + " over 1 s");
                }
                o.require(merged);
              }
              o.require(run_identity(FamilyId::prop_vanishing, {1, 20}));
              o.require(run_identity(FamilyId::lemma_euler_bernoulli, {1, 15}));
              return o;
            });

  criterion(5, "closed form vs quadrature, every instance with cosh exponent <= 12, |diff| < 1e-25", 600, [] {
    Outcome o;
    const auto r = check_closed_vs_quadrature(12, kDigits);
    o.require(r);
    o.require(r.cells.size() == 66, "instance count " + std::to_string(r.cells.size()));
    return o;
  });

  criterion(6, "negative-argument form vs sinh-over-z form vs quadrature, n<=6, both Phi, 1e-25", 120, [] {
    Outcome o;
    o.require(check_cross_representation(6, kDigits));
    return o;
  });

  criterion(7, "C_1 and C_2 by quadrature and closed form match the printed 19 decimals", 60, [] {
    Outcome o;
    const auto r = check_asymptotic_constants(kDigits);
    const auto printed = subset(r, [](const Cell& c) {
      return has_param(c, "check", "printed-quadrature") || has_param(c, "check", "printed-closed-form");
    });
    o.require(printed.cells.size() == 4, "prefix cells");
    o.require(printed);
    return o;
  });

  criterion(8, "strict Phi bounds on the s grid; coupled-series residuals within tail bounds at T=30", 300, [] {
    Outcome o;
    o.require(check_bounds(default_bounds_grid(), kDigits));
    for (double s : {2.0, 4.0, 6.0}) {
      const auto r = check_coupled(s, 30, kDigits);
      o.require(subset(r, [](const Cell& c) { return has_param(c, "T", "30"); }));
    }
    return o;
  });

  criterion(9, "series dual path, lfunc precision monotonicity, quadrature level-doubling convergence", 900, [] {
    Outcome o;
    // Power by squaring vs repeated multiplication, serial vs parallel.
    const auto base = series::sinh_over_x(24).reciprocal();
    auto repeated = series::PowerSeries::one(24);
    for (unsigned e = 0; e <= 12; ++e) {
      o.require(base.pow(e, Execution::serial) == repeated, "pow " + std::to_string(e));
      o.require(base.pow(e, Execution::parallel) == repeated, "parallel pow " + std::to_string(e));
      repeated = series::multiply(repeated, base, Execution::serial);
    }
    for (unsigned n = 0; n <= 12; ++n) {
      const auto c = series::c_coeffs(n, 24);
      const auto ref = base.pow(2 * n + 1, Execution::serial);
      for (std::size_t k = 0; k <= 24; ++k) o.require(c[k] == ref.coeff(k), "c coefficient");
    }
    // |v(p) - v(p+20)| < 10^-p for every evaluator.
    using Eval = std::function<BigReal(unsigned)>;
    const std::vector<std::pair<std::string, Eval>> evaluators = {
        {"eta", [](unsigned p) { return numerics::eta(2.5, p); }},
        {"eta_prime", [](unsigned p) { return numerics::eta_prime(3.0, p); }},
        {"beta", [](unsigned p) { return numerics::beta(2.5, p); }},
        {"beta_prime", [](unsigned p) { return numerics::beta_prime(1.0, p); }},
        {"zeta_prime", [](unsigned p) { return numerics::zeta_prime(3.0, p); }},
        {"zeta_even", [](unsigned p) { return numerics::zeta_even(2, p); }},
        {"beta_odd", [](unsigned p) { return numerics::beta_odd(2, p); }},
        {"eta_prime_neg", [](unsigned p) { return numerics::eta_prime_neg(3, p); }},
        {"beta_prime_neg", [](unsigned p) { return numerics::beta_prime_neg(3, p); }},
        {"eta_prime_neg_alt", [](unsigned p) { return numerics::eta_prime_neg_alt(3, p); }},
        {"beta_prime_neg_alt", [](unsigned p) { return numerics::beta_prime_neg_alt(3, p); }},
        {"zeta_prime_em", [](unsigned p) { return numerics::zeta_prime_em(2.5, p); }},
        {"beta_prime_em", [](unsigned p) { return numerics::beta_prime_em(2.5, p); }},
    };
    for (const auto& [name, f] : evaluators) {
      for (unsigned p : {20u, 40u, 80u}) {
        o.require(abs(f(p) - f(p + 20)) < numerics::ten_pow_neg(p, p + 40), name + " at " + std::to_string(p));
      }
    }
    // Successive DE levels differ by less than the reported error estimate.
    const std::vector<std::pair<std::string, std::function<quadrature::QuadResult()>>> quads = {
        {"phi1(2.5)", [] { return quadrature::quad_phi(1, 2.5); }},
        {"phi2(1.3)", [] { return quadrature::quad_phi(2, 1.3); }},
        {"log(1,3)", [] { return quadrature::quad_log_family(1, 6); }},
        {"sinh(2,9)", [] { return quadrature::quad_sinh_over_z(2, 9); }},
        {"C2", [] { return quadrature::quad_c_constant(2); }},
    };
    for (const auto& [name, q] : quads) {
      const auto r = q();
      const auto& lv = r.level_values;
      o.require(r.converged && lv.size() >= 2, name + " not converged");
      if (lv.size() >= 2) {
        o.require(abs(lv.back() - lv[lv.size() - 2]) <= r.error_estimate, name + " estimate");
        o.require(r.error_estimate < numerics::ten_pow_neg(kDigits - 5, kDigits), name + " estimate size");
      }
    }
    return o;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
