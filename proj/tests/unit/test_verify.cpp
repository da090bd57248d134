#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "mellin/cli.hpp"
#include "mellin/verify.hpp"

using namespace mellin;
using namespace mellin::verify;

namespace {

const Cell& find_cell(const VerifyReport& r, const std::vector<std::pair<std::string, std::string>>& params) {
  for (const auto& c : r.cells) {
    if (c.params == params) return c;
  }
  throw std::runtime_error("cell not found");
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<const char*> args) {
  args.insert(args.begin(), "mellin");
  std::ostringstream out, err;
  const int code = cli::cli_main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("family names round trip") {
  for (auto id : all_families()) CHECK(parse_family(family_name(id)) == id);
  CHECK(family_name(FamilyId::alt_binom_odd) == "alt-binom-odd");
  CHECK_FALSE(parse_family("nope"));
  CHECK(is_exact_family(FamilyId::prop_d_identity));
  CHECK_FALSE(is_exact_family(FamilyId::bounds));
}

TEST_CASE("range parsing") {
  const Range r = parse_range("3..17");
  CHECK(r.lo == 3);
  CHECK(r.hi == 17);
  CHECK(parse_range("5").lo == 5);
  CHECK_THROWS_AS(parse_range("9..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("a..b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("1...3"), std::invalid_argument);
}

TEST_CASE("alternating binomial sums, odd case") {
  const auto r = run_identity(FamilyId::alt_binom_odd, {1, 6});
  CHECK(r.ok());
  CHECK(find_cell(r, {{"n", "2"}, {"j", "1"}}).actual == "0/1");
  CHECK(find_cell(r, {{"n", "2"}, {"j", "2"}}).actual == "1920/1");
}

TEST_CASE("alternating binomial sums, even case") {
  const auto r = run_identity(FamilyId::alt_binom_even, {1, 8});
  // j = 0: the sum is half the listed central binomial value.
  const Cell& j0 = find_cell(r, {{"n", "2"}, {"j", "0"}});
  CHECK(j0.expected == "-6/1");
  CHECK(j0.actual == "-3/1");
  CHECK_FALSE(j0.pass);
  for (const auto& c : r.cells) {
    if (c.params[1].second != "0") CHECK(c.pass);
  }
  REQUIRE(r.first_counterexample() != nullptr);
  CHECK(r.first_counterexample()->params[0].second == "1");
}

TEST_CASE("remaining exact families on small ranges") {
  for (auto id : {FamilyId::c_odd_power, FamilyId::eulerian_a_sum, FamilyId::eulerian_b_sum,
                  FamilyId::binom_cosh_sum, FamilyId::prop_vanishing, FamilyId::prop_eta_coeff,
                  FamilyId::lemma_euler_bernoulli}) {
    CAPTURE(family_name(id));
    const auto r = run_identity(id, {1, 6});
    CHECK(r.ok());
    CHECK(r.cells.size() >= 3);
  }
  CHECK(run_identity(FamilyId::prop_zeta2_coeff, {2, 8}).ok());
  CHECK(run_identity(FamilyId::ln_pi_free, {3, 10}).ok());
  const auto d = run_identity(FamilyId::prop_d_identity, {0, 6});
  CHECK(d.ok());
  CHECK(find_cell(d, {{"n", "1"}}).actual == "4/3");
  CHECK_THROWS_AS(run_identity(FamilyId::prop_zeta2_coeff, {1, 3}), std::invalid_argument);
}

TEST_CASE("Euler-Bernoulli lemma example") {
  const auto r = run_identity(FamilyId::lemma_euler_bernoulli, {1, 3});
  // q = 0, n = 1, second line: (+1) * 2 * 0! * 1! * 0! / (0! * 2!) = 1
  CHECK(find_cell(r, {{"n", "1"}, {"q", "0"}, {"line", "2"}}).expected == "1/1");
  CHECK(find_cell(r, {{"n", "2"}, {"q", "1"}, {"line", "1"}}).expected == "1/4");
  CHECK(r.ok());
}

TEST_CASE("reports are deterministic and schema-stable") {
  const auto a = run_identity(FamilyId::eulerian_b_sum, {1, 10}, 30, Execution::parallel);
  const auto b = run_identity(FamilyId::eulerian_b_sum, {1, 10}, 30, Execution::serial);
  CHECK(a.to_json() == b.to_json());
  const std::string json = a.to_json();
  CHECK(json.find("\"family\": \"eulerian-b-sum\"") != std::string::npos);
  CHECK(json.find("\"first_counterexample\": null") != std::string::npos);
  CHECK(json.find("timing_seconds") == std::string::npos);
  CHECK(a.to_json(true).find("timing_seconds") != std::string::npos);
}

TEST_CASE("numeric suites at reduced size") {
  const auto bounds = check_bounds({1.01, 3.0}, 25);
  CHECK(bounds.ok());
  CHECK(bounds.cells.size() == 4);
  CHECK(bounds.precision_digits == 25u);
  CHECK(check_cross_representation(2, 30).ok());
  const auto coupled = check_coupled(4.0, 8, 25);
  CHECK(coupled.ok());
  const auto r6 = coupled_residual(1, 6.0, 6, 25);
  const auto r12 = coupled_residual(1, 6.0, 12, 25);
  CHECK(r12.residual < r6.residual);
  CHECK(r12.residual < r12.upper_tail);
  CHECK_THROWS_AS(check_bounds({1.0}, 25), closed_form::DomainError);
}

TEST_CASE("worked-example corpus is complete") {
  CHECK(worked_integrals().size() == 25);
  CHECK(worked_phi_tables().size() == 8);
  const auto r = reproduce_worked_examples(30);
  CHECK(r.ok());
  CHECK(r.cells.size() == 35);
}

TEST_CASE("command line") {
  const auto latex = run_cli({"closed-form", "log-odd", "--q", "0", "--n", "1", "--latex"});
  CHECK(latex.code == cli::kExitOk);
  CHECK(latex.out.rfind("-3\\,\\frac{\\zeta'(2)}{\\pi^{2}}", 0) == 0);

  const auto diverge = run_cli({"closed-form", "log-odd", "--q", "3", "--n", "2"});
  CHECK(diverge.code == cli::kExitUsage);
  CHECK(diverge.err.find("diverges") != std::string::npos);

  CHECK(run_cli({"verify", "alt-binom-odd", "--range", "1..25"}).code == cli::kExitOk);
  CHECK(run_cli({"verify", "alt-binom-even", "--range", "1..3"}).code == cli::kExitMismatch);
  CHECK(run_cli({"verify", "no-such-suite"}).code == cli::kExitUsage);
  CHECK(run_cli({"verify", "alt-binom-odd", "--range", "5..1"}).code == cli::kExitUsage);
  CHECK(run_cli({"--max-n", "10", "verify", "alt-binom-odd", "--range", "1..20"}).code == cli::kExitUsage);
  CHECK(run_cli({"--prec", "5", "constants"}).code == cli::kExitUsage);
  CHECK(run_cli({}).code == cli::kExitUsage);

  const auto phi = run_cli({"phi-odd", "1", "--n", "1"});
  CHECK(phi.out == "4/3 * eta'(-1) + 8/3 * eta'(-3)\n");

  const auto json = run_cli({"closed-form", "sinh-over-z", "--q", "1", "--n", "3", "--json"});
  CHECK(json.code == cli::kExitOk);
  CHECK(closed_form::ClosedForm::from_json(json.out) == closed_form::sinh_over_z_integral(1, 3));

  const auto reproduce = run_cli({"reproduce-paper"});
  CHECK(reproduce.code == cli::kExitOk);
  CHECK(reproduce.out.find("35/35") != std::string::npos);
}

TEST_CASE("command line: eval and config files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto form_path = (dir / "mellin_cli_form.json").string();
  {
    std::ofstream f(form_path);
    f << closed_form::log_integral_odd_cosh(0, 1).to_json();
  }
  const auto eval = run_cli({"--prec", "25", "eval", "--json-file", form_path.c_str()});
  CHECK(eval.code == cli::kExitOk);
  CHECK(eval.out.rfind("-1.04752680901330382673175", 0) == 0);
  CHECK(run_cli({"eval", "--json-file", "/nonexistent/form.json"}).code == cli::kExitUsage);

  const auto config_path = (dir / "mellin_cli.cfg").string();
  {
    std::ofstream f(config_path);
    f << "max-n=4\n";
  }
  CHECK(run_cli({"--config", config_path.c_str(), "verify", "alt-binom-odd", "--range", "1..6"}).code ==
        cli::kExitUsage);
  CHECK(run_cli({"--config", config_path.c_str(), "verify", "alt-binom-odd", "--range", "1..4"}).code ==
        cli::kExitOk);
  std::filesystem::remove(form_path);
  std::filesystem::remove(config_path);
}
