#include "mellin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mellin/closed_form.hpp"
#include "mellin/lfunc.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/verify.hpp"

namespace mellin::cli {
namespace {

using closed_form::ClosedForm;
using closed_form::DomainError;
using closed_form::Family;
using closed_form::IntegralSpec;

struct Settings {
  unsigned prec = quadrature::kDefaultDigits;
  unsigned max_n = 200;
  bool timing = false;
  bool serial = false;
  bool json = false;
  bool latex = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Execution exec_of(const Settings& s) { return s.serial ? Execution::serial : Execution::parallel; }

void check_prec(unsigned prec) {
  if (prec < 10 || prec > quadrature::kMaxDigits) {
    throw UsageError("--prec must lie in [10, " + std::to_string(quadrature::kMaxDigits) + "] (got " +
                     std::to_string(prec) + ")");
  }
}

void print_form(std::ostream& out, const ClosedForm& cf, const Settings& s) {
  if (s.json) {
    out << cf.to_json() << '\n';
  } else if (s.latex) {
    out << cf.to_latex() << '\n';
  } else {
    out << cf.to_string() << '\n';
  }
}

// Suites beyond the identity families.
const std::vector<std::string> kExtraSuites = {"closed-vs-quadrature", "asymptotic-constants", "coupled-displays",
                                               "worked-examples", "all"};

int emit(std::ostream& out, const std::vector<verify::VerifyReport>& reports, const Settings& s) {
  bool ok = true;
  if (s.json) {
    if (reports.size() == 1) {
      out << reports.front().to_json(s.timing) << '\n';
    } else {
      out << "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        out << reports[i].to_json(s.timing) << (i + 1 < reports.size() ? ",\n" : "\n");
      }
      out << "]\n";
    }
  } else {
    for (const auto& r : reports) {
      out << r.summary();
      if (s.timing) out << "  (" << r.seconds << " s)\n";
    }
  }
  for (const auto& r : reports) ok = ok && r.ok();
  return ok ? kExitOk : kExitMismatch;
}

verify::VerifyReport run_suite(const std::string& suite, const std::string& range_text, const Settings& s) {
  const Execution exec = exec_of(s);
  auto ranged = [&](verify::Range fallback) {
    const verify::Range r = range_text.empty() ? fallback : verify::parse_range(range_text);
    if (r.hi > s.max_n) {
      throw UsageError("range upper end " + std::to_string(r.hi) + " exceeds the cap max-n=" + std::to_string(s.max_n));
    }
    return r;
  };
  if (suite == "closed-vs-quadrature") return verify::check_closed_vs_quadrature(ranged({1, 12}).hi, s.prec, exec);
  if (suite == "asymptotic-constants") return verify::check_asymptotic_constants(s.prec, exec);
  if (suite == "coupled-displays") return verify::check_coupled_displays(ranged({40, 40}).hi, s.prec, exec);
  if (suite == "worked-examples") return verify::reproduce_worked_examples(s.prec, exec);
  const auto family = verify::parse_family(suite);
  if (!family) throw UsageError("unknown suite '" + suite + "'");
  return verify::run_identity(*family, ranged(verify::default_range(*family)), s.prec, exec);
}

Family parse_integral_family(const std::string& name) {
  if (name == "log-odd") return Family::log_odd_cosh;
  if (name == "log-even") return Family::log_even_cosh;
  if (name == "sinh-over-z") return Family::sinh_over_z;
  throw UsageError("unknown integral family '" + name + "' (expected log-odd, log-even or sinh-over-z)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact closed forms and verification suites for log-hyperbolic and inverse-artanh Mellin integrals",
               "mellin"};
  app.set_config("--config", "", "key=value file with defaults (prec, max-n)");
  app.add_option("--prec", s.prec, "working precision in decimal digits")->capture_default_str();
  app.add_option("--max-n", s.max_n, "cap on the upper end of verification ranges")->capture_default_str();
  app.add_flag("--timing", s.timing, "include timing in reports");
  app.add_flag("--serial", s.serial, "use the serial reference kernels");
  app.require_subcommand(1);
  app.fallthrough();

  std::string family_name;
  unsigned q = 0, n = 0;
  auto* cf_cmd = app.add_subcommand("closed-form", "exact closed form of a log-family or sinh-over-z integral");
  cf_cmd->add_option("family", family_name, "log-odd | log-even | sinh-over-z")->required();
  cf_cmd->add_option("--q", q, "sinh exponent index")->required();
  cf_cmd->add_option("--n", n, "cosh exponent index (N for sinh-over-z)")->required();
  auto* cf_json = cf_cmd->add_flag("--json", s.json, "canonical JSON");
  cf_cmd->add_flag("--latex", s.latex, "LaTeX")->excludes(cf_json);

  int which = 1;
  unsigned phi_n = 1;
  bool via_sinh = false;
  auto* phi_cmd = app.add_subcommand("phi-odd", "Phi_1(2n+1) or Phi_2(2n+1) in the negative-argument basis");
  phi_cmd->add_option("which", which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  phi_cmd->add_option("--n", phi_n, "argument index, s = 2n+1")->required()->check(CLI::PositiveNumber);
  phi_cmd->add_flag("--via-sinh", via_sinh, "use the sinh-over-z form instead");
  auto* phi_json = phi_cmd->add_flag("--json", s.json, "canonical JSON");
  phi_cmd->add_flag("--latex", s.latex, "LaTeX")->excludes(phi_json);

  std::string suite, range_text;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites;
  for (auto id : verify::all_families()) suites.push_back(verify::family_name(id));
  suites.insert(suites.end(), kExtraSuites.begin(), kExtraSuites.end());
  verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--range", range_text, "parameter range a..b");
  verify_cmd->add_flag("--json", s.json, "JSON report");

  std::string json_file;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a closed form given as JSON");
  eval_cmd->add_option("--json-file", json_file, "closed-form JSON")->required();

  auto* constants_cmd = app.add_subcommand("constants", "C_1 and C_2 by quadrature and closed form");

  auto* reproduce_cmd = app.add_subcommand("reproduce-paper", "check the worked-example corpus");
  reproduce_cmd->add_flag("--json", s.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    check_prec(s.prec);
    const Execution exec = exec_of(s);
    if (*cf_cmd) {
      const IntegralSpec spec{parse_integral_family(family_name), q, n, 0};
      print_form(out, closed_form::closed_form_for(spec), s);
      return kExitOk;
    }
    if (*phi_cmd) {
      print_form(out, via_sinh ? closed_form::phi_odd_via_sinh(which, phi_n) : closed_form::phi_odd_closed_form(which, phi_n), s);
      return kExitOk;
    }
    if (*verify_cmd) {
      std::vector<verify::VerifyReport> reports;
      if (suite == "all") {
        if (!range_text.empty()) throw UsageError("--range cannot be combined with 'all'");
        for (auto id : verify::all_families()) reports.push_back(run_suite(verify::family_name(id), "", s));
        for (const auto& extra : kExtraSuites) {
          if (extra != "all") reports.push_back(run_suite(extra, "", s));
        }
      } else {
        reports.push_back(run_suite(suite, range_text, s));
      }
      return emit(out, reports, s);
    }
    if (*eval_cmd) {
      const ClosedForm cf = ClosedForm::from_json(read_file(json_file));
      out << numerics::eval_closed_form(cf, s.prec).to_scientific(s.prec) << '\n';
      return kExitOk;
    }
    if (*constants_cmd) {
      for (int w : {1, 2}) {
        const auto quad = quadrature::quad_c_constant(w, s.prec, exec);
        out << "C" << w << " = " << quad.value.to_fixed_truncated(s.prec) << "  (quadrature, error estimate "
            << quad.error_estimate.to_scientific(3) << ")\n";
        const auto closed = verify::c_constant_closed_form(w);
        out << "C" << w << " = " << numerics::eval_closed_form(closed, s.prec).to_fixed_truncated(s.prec)
            << "  (" << closed.to_string() << ")\n";
      }
      return kExitOk;
    }
    if (*reproduce_cmd) {
      return emit(out, {verify::reproduce_worked_examples(s.prec, exec)}, s);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const numerics::PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mellin::cli
