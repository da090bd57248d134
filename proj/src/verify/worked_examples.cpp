#include "mellin/verify.hpp"

namespace mellin::verify {
namespace {

using closed_form::BasisSymbol;
using closed_form::ClosedForm;
using closed_form::Family;
using closed_form::IntegralSpec;
using exact::Rational;

struct Term {
  BasisSymbol symbol;
  const char* coeff;
};

Term zeta(unsigned p, const char* c) { return {BasisSymbol::zeta_ratio(p), c}; }
Term beta(unsigned p, const char* c) { return {BasisSymbol::beta_ratio(p), c}; }
Term eta_neg(unsigned i, const char* c) { return {BasisSymbol::eta_neg(i), c}; }
Term beta_neg(unsigned i, const char* c) { return {BasisSymbol::beta_neg(i), c}; }
Term one(const char* c) { return {BasisSymbol::constant(), c}; }
Term ln_pi(const char* c) { return {BasisSymbol::log_pi(), c}; }
Term ln2(const char* c) { return {BasisSymbol::log2(), c}; }

ClosedForm form(std::initializer_list<Term> terms) {
  ClosedForm out;
  for (const auto& t : terms) out.add(t.symbol, Rational::parse(t.coeff));
  return out;
}

WorkedExample log_odd(unsigned q, unsigned n, std::initializer_list<Term> terms) {
  const std::string label = "int sinh^" + std::to_string(2 * q + 1) + " z ln z / cosh^" + std::to_string(2 * n + 1) + " z";
  return {label, IntegralSpec{Family::log_odd_cosh, q, n, 0}, form(terms)};
}

WorkedExample log_even(unsigned q, unsigned n, std::initializer_list<Term> terms) {
  const std::string label = "int sinh^" + std::to_string(2 * q + 1) + " z ln z / cosh^" + std::to_string(2 * n) + " z";
  return {label, IntegralSpec{Family::log_even_cosh, q, n, 0}, form(terms)};
}

WorkedExample sinh_z(unsigned q, unsigned big_n, std::initializer_list<Term> terms) {
  const std::string label = "int sinh^" + std::to_string(2 * q) + " z / (z cosh^" + std::to_string(big_n) + " z)";
  return {label, IntegralSpec{Family::sinh_over_z, q, big_n, 0}, form(terms)};
}

}  // namespace

const std::vector<WorkedExample>& worked_integrals() {
  static const std::vector<WorkedExample> examples = {
      log_odd(0, 1, {zeta(0, "-3"), one("-1/2"), ln_pi("1/2"), ln2("-2/3")}),
      log_odd(0, 2, {zeta(0, "-1"), zeta(1, "-15/2"), one("-23/72"), ln_pi("1/4"), ln2("-14/45")}),
      log_odd(1, 2, {zeta(0, "-2"), zeta(1, "15/2"), one("-13/72"), ln_pi("1/4"), ln2("-16/45")}),
      log_odd(0, 3,
              {zeta(0, "-8/15"), zeta(1, "-5"), zeta(2, "-21"), one("-163/675"), ln_pi("1/6"), ln2("-568/2835")}),
      log_odd(1, 3,
              {zeta(0, "-7/15"), zeta(1, "-5/2"), zeta(2, "21"), one("-421/5400"), ln_pi("1/12"), ln2("-314/2835")}),
      log_odd(2, 3,
              {zeta(0, "-23/15"), zeta(1, "10"), zeta(2, "-21"), one("-277/2700"), ln_pi("1/6"), ln2("-694/2835")}),
      log_even(0, 1, {beta(0, "-4"), ln_pi("1"), ln2("-1")}),
      log_even(0, 2, {beta(0, "-2/3"), beta(1, "-16/3"), one("-1/4"), ln_pi("1/3"), ln2("-1/3")}),
      log_even(1, 2, {beta(0, "-10/3"), beta(1, "16/3"), one("1/4"), ln_pi("2/3"), ln2("-2/3")}),
      log_even(0, 3,
               {beta(0, "-3/10"), beta(1, "-8/3"), beta(2, "-64/5"), one("-61/288"), ln_pi("1/5"), ln2("-1/5")}),
      log_even(1, 3,
               {beta(0, "-11/30"), beta(1, "-8/3"), beta(2, "64/5"), one("-11/288"), ln_pi("2/15"), ln2("-2/15")}),
      log_even(2, 3,
               {beta(0, "-89/30"), beta(1, "8"), beta(2, "-64/5"), one("83/288"), ln_pi("8/15"), ln2("-8/15")}),

      sinh_z(1, 4, {zeta(0, "-2"), zeta(1, "30"), one("5/18"), ln2("-4/45")}),
      sinh_z(1, 6, {zeta(0, "-4/5"), zeta(2, "126"), one("77/450"), ln2("-8/189")}),
      sinh_z(2, 6, {zeta(0, "-6/5"), zeta(1, "30"), zeta(2, "-126"), one("8/75"), ln2("-44/945")}),
      sinh_z(1, 8,
             {zeta(0, "-16/35"), zeta(1, "-2"), zeta(2, "42"), zeta(3, "510"), one("16469/132300"),
              ln2("-368/14175")}),
      sinh_z(2, 8,
             {zeta(0, "-12/35"), zeta(1, "2"), zeta(2, "84"), zeta(3, "-510"), one("6169/132300"),
              ln2("-232/14175")}),
      sinh_z(3, 8,
             {zeta(0, "-6/7"), zeta(1, "28"), zeta(2, "-210"), zeta(3, "510"), one("7943/132300"),
              ln2("-428/14175")}),
      sinh_z(1, 3, {beta(0, "-2"), beta(1, "16"), one("3/4")}),
      sinh_z(1, 5, {beta(0, "-1/2"), beta(1, "-8/3"), beta(2, "64"), one("89/288")}),
      sinh_z(2, 5, {beta(0, "-3/2"), beta(1, "56/3"), beta(2, "-64"), one("127/288")}),
      sinh_z(1, 7, {beta(0, "-1/4"), beta(1, "-82/45"), beta(2, "32/3"), beta(3, "256"), one("4201/21600")}),
      sinh_z(2, 7, {beta(0, "-1/4"), beta(1, "-38/45"), beta(2, "160/3"), beta(3, "-256"), one("1237/10800")}),
      sinh_z(3, 7, {beta(0, "-5/4"), beta(1, "878/45"), beta(2, "-352/3"), beta(3, "256"), one("7051/21600")}),
      sinh_z(1, 9,
             {beta(0, "-5/32"), beta(1, "-397/315"), beta(2, "8/15"), beta(3, "128"), beta(4, "1024"),
              one("4798639/33868800")}),
  };
  return examples;
}

const std::vector<WorkedPhiTable>& worked_phi_tables() {
  static const std::vector<WorkedPhiTable> tables = {
      {1, 1, form({eta_neg(0, "4/3"), eta_neg(1, "8/3")})},
      {2, 1, form({beta_neg(0, "1"), beta_neg(1, "1")})},
      {1, 2, form({eta_neg(0, "4/5"), eta_neg(1, "8/3"), eta_neg(2, "8/15")})},
      {2, 2, form({beta_neg(0, "3/4"), beta_neg(1, "7/6"), beta_neg(2, "1/12")})},
      {1, 3, form({eta_neg(0, "4/7"), eta_neg(1, "112/45"), eta_neg(2, "8/9"), eta_neg(3, "16/315")})},
      {2, 3, form({beta_neg(0, "5/8"), beta_neg(1, "439/360"), beta_neg(2, "11/72"), beta_neg(3, "1/360")})},
      {1, 4,
       form({eta_neg(0, "4/9"), eta_neg(1, "6544/2835"), eta_neg(2, "152/135"), eta_neg(3, "16/135"),
             eta_neg(4, "8/2835")})},
      {2, 4,
       form({beta_neg(0, "35/64"), beta_neg(1, "1247/1008"), beta_neg(2, "301/1440"), beta_neg(3, "1/144"),
             beta_neg(4, "1/20160")})},
  };
  return tables;
}

}  // namespace mellin::verify
