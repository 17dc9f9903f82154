// Command-line front end for the generalized-factorial library.
//
// Subcommands: eval, constants, estimate, verify.  Every invocation prints
// one JSON object to stdout (or CSV rows for verify --format csv);
// diagnostics go to stderr.  Numbers are rendered with 17 significant
// digits in scientific notation so identical flags always produce
// byte-identical output.
//
// Exit codes: 0 success / verification passed, 1 domain error or failed
// verification, 2 usage error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "eulerfact/asymptotics.hpp"
#include "eulerfact/euler_family.hpp"
#include "eulerfact/identities.hpp"
#include "eulerfact/special_core.hpp"

namespace {

using eulerfact::FamilyKind;

std::string fmt_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string fmt_integer(long long v) { return std::to_string(v); }

std::string fmt_bool(bool v) { return v ? "true" : "false"; }

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof esc, "\\u%04x", c);
          out += esc;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string fmt_array(const std::vector<double>& values) {
  std::string out = "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += fmt_number(values[i]);
  }
  out += ']';
  return out;
}

// Ordered name -> rendered-JSON-fragment map; insertion order is the
// output order, fixed per command.
struct Fields {
  std::vector<std::pair<std::string, std::string>> items;

  void raw(const std::string& name, std::string rendered) {
    items.emplace_back(name, std::move(rendered));
  }
  void number(const std::string& name, double v) { raw(name, fmt_number(v)); }
  void integer(const std::string& name, long long v) {
    raw(name, fmt_integer(v));
  }
  void boolean(const std::string& name, bool v) { raw(name, fmt_bool(v)); }
  void text(const std::string& name, const std::string& v) {
    raw(name, quote(v));
  }

  std::string render() const {
    std::string out = "{";
    for (size_t i = 0; i < items.size(); ++i) {
      if (i) out += ',';
      out += quote(items[i].first) + ":" + items[i].second;
    }
    out += '}';
    return out;
  }
};

struct OutputRecord {
  std::string command;
  Fields inputs;
  Fields outputs;
  std::string status = "ok";
  std::string message;  // non-empty whenever status == "error"

  std::string to_json() const {
    std::string out = "{\"command\":" + quote(command);
    out += ",\"inputs\":" + inputs.render();
    out += ",\"outputs\":" + outputs.render();
    out += ",\"status\":" + quote(status);
    if (status == "error") {
      out += ",\"message\":" + quote(message.empty() ? "unknown error" : message);
    }
    out += '}';
    return out;
  }
};

int emit(const OutputRecord& record, int exit_code) {
  std::cout << record.to_json() << "\n";
  return exit_code;
}

int fail(OutputRecord& record, const std::string& message) {
  record.status = "error";
  record.message = message;
  return emit(record, 1);
}

FamilyKind kind_from_name(const std::string& name) {
  if (name == "gammaE") return FamilyKind::GammaE;
  if (name == "delta") return FamilyKind::Delta;
  return FamilyKind::Theta;
}

// CLI11 validator with a message that actually names the constraint.
const CLI::Validator kPositive(
    [](std::string& s) -> std::string {
      double v = 0.0;
      try {
        v = std::stod(s);
      } catch (...) {
        return "is not a number";
      }
      return v > 0.0 ? std::string{} : std::string("must be strictly positive");
    },
    "POSITIVE");

int run_eval(const std::string& func, double a, double b, double x,
             bool log_scale) {
  OutputRecord record;
  record.command = "eval";
  record.inputs.text("func", func);
  if (func != "gamma") {
    record.inputs.number("a", a);
    record.inputs.number("b", b);
  }
  record.inputs.number("x", x);
  record.inputs.boolean("log", log_scale);
  try {
    const eulerfact::LogValue v =
        func == "gamma" ? eulerfact::signed_log_gamma(x)
                        : eulerfact::evaluate(kind_from_name(func), {a, b}, x);
    if (log_scale) {
      record.outputs.integer("sign", v.sign);
      record.outputs.number("log_abs", v.log_abs);
    } else {
      const double linear = v.value();
      if (!std::isfinite(linear)) {
        return fail(record,
                    "result magnitude exceeds double range; rerun with --log");
      }
      record.outputs.number("value", linear);
    }
    return emit(record, 0);
  } catch (const std::domain_error& e) {
    return fail(record, e.what());
  }
}

int run_constants(double a, double b) {
  OutputRecord record;
  record.command = "constants";
  record.inputs.number("a", a);
  record.inputs.number("b", b);
  try {
    const auto c = eulerfact::assemble_constants({a, b});
    const double sqrt_e = std::exp(0.5);
    record.outputs.number("A", c.A);
    record.outputs.number("B", c.B);
    record.outputs.number("C", c.C);
    record.outputs.number("k", c.k);
    record.outputs.number("residual_A_BC",
                          std::abs(c.A - c.B * c.C / sqrt_e) / c.A);
    record.outputs.number("residual_B_Ck",
                          std::abs(c.B - c.C * c.k * sqrt_e) / c.B);
    record.outputs.number("residual_A_B2k",
                          std::abs(c.A - c.B * c.B / (M_E * c.k)) / c.A);
    return emit(record, 0);
  } catch (const std::logic_error& e) {
    return fail(record, e.what());
  }
}

int run_estimate(const std::string& func, double a, double b, long long n) {
  OutputRecord record;
  record.command = "estimate";
  record.inputs.text("func", func);
  record.inputs.number("a", a);
  record.inputs.number("b", b);
  record.inputs.integer("n", n);
  try {
    const auto est =
        eulerfact::estimate_constant(kind_from_name(func), {a, b}, n);
    record.outputs.integer("n_used", est.n_used);
    record.outputs.number("estimate", est.estimate);
    record.outputs.number("closed_form", est.closed_form);
    record.outputs.number("relative_error", est.relative_error);
    return emit(record, 0);
  } catch (const std::domain_error& e) {
    return fail(record, e.what());
  }
}

void put_report(OutputRecord& record, const eulerfact::VerificationReport& rep) {
  record.outputs.text("identity_name", rep.identity_name);
  record.outputs.integer("points", static_cast<long long>(rep.grid.size()));
  record.outputs.number("tolerance", rep.tolerance);
  record.outputs.number("max_residual", rep.max_residual);
  record.outputs.number("mean_residual", rep.mean_residual);
  record.outputs.boolean("passed", rep.passed);
  record.outputs.raw("grid", fmt_array(rep.grid));
  record.outputs.raw("residuals", fmt_array(rep.residuals));
}

int emit_csv(const eulerfact::VerificationReport& rep) {
  std::string out = "x,residual\n";
  for (size_t i = 0; i < rep.grid.size(); ++i) {
    out += fmt_number(rep.grid[i]) + "," + fmt_number(rep.residuals[i]) + "\n";
  }
  std::cout << out;
  return rep.passed ? 0 : 1;
}

int run_verify(const std::string& identity, int n, double a, double b,
               double x_min, double x_max, int steps, double tolerance,
               const std::string& format) {
  OutputRecord record;
  record.command = "verify";
  record.inputs.text("identity", identity);

  eulerfact::VerificationReport rep;
  if (identity == "chain") {
    record.inputs.number("a", a);
    record.inputs.number("b", b);
    rep = eulerfact::derivation_chain_check({a, b});
  } else {
    const bool is_mult = identity == "multiplication";
    if (is_mult) record.inputs.integer("n", n);
    record.inputs.number("x_min", x_min);
    record.inputs.number("x_max", x_max);
    record.inputs.integer("steps", steps);
    const double tol =
        tolerance > 0.0 ? tolerance
                        : (is_mult ? eulerfact::kMultiplicationTolerance
                                   : eulerfact::kDuplicationTolerance);
    record.inputs.number("tolerance", tol);
    const auto check = is_mult ? eulerfact::IdentityCheck::multiplication(n)
                               : eulerfact::IdentityCheck::duplication();
    rep = eulerfact::verify_grid(check, x_min, x_max, steps, tol);
  }
  if (format == "csv") return emit_csv(rep);
  put_report(record, rep);
  return emit(record, rep.passed ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Euler's generalized factorials (gammaE, delta, theta), their "
      "asymptotic constants, and numerical certification of the Legendre "
      "duplication and Gauss multiplication formulas"};
  app.require_subcommand(1);

  std::string func;
  std::string identity;
  std::string format = "json";
  double a = 0.0, b = 0.0, x = 0.0;
  double x_min = 0.1, x_max = 20.0, tolerance = 0.0;
  long long n_estimate = 0;
  int n_mult = 0, steps = 200;
  bool log_scale = false;

  auto* eval = app.add_subcommand("eval", "Evaluate gamma or a family at x");
  eval->add_option("func", func, "one of gamma|gammaE|delta|theta")
      ->required()
      ->check(CLI::IsMember({"gamma", "gammaE", "delta", "theta"}));
  eval->add_option("--a", a, "family parameter a (positive)")
      ->check(kPositive);
  eval->add_option("--b", b, "family parameter b (positive)")
      ->check(kPositive);
  eval->add_option("--x", x, "evaluation point")->required();
  eval->add_flag("--log", log_scale,
                 "print sign and natural log instead of the linear value");

  auto* constants = app.add_subcommand(
      "constants",
      "Asymptotic constants A, B, C, k and their relation residuals");
  constants->add_option("--a", a, "family parameter a (positive)")
      ->required()
      ->check(kPositive);
  constants->add_option("--b", b, "family parameter b (positive)")
      ->required()
      ->check(kPositive);

  auto* estimate = app.add_subcommand(
      "estimate", "Recover a growth constant from the exact n-term product");
  estimate->add_option("func", func, "one of gammaE|delta|theta")
      ->required()
      ->check(CLI::IsMember({"gammaE", "delta", "theta"}));
  estimate->add_option("--a", a, "family parameter a (positive)")
      ->required()
      ->check(kPositive);
  estimate->add_option("--b", b, "family parameter b (positive)")
      ->required()
      ->check(kPositive);
  estimate->add_option("--n", n_estimate, "product length (>= 10)")
      ->required()
      ->check(CLI::Range(10LL, 1000000000LL));

  auto* verify = app.add_subcommand(
      "verify", "Certify an identity on a grid and report residuals");
  verify->add_option("identity", identity,
                     "one of duplication|multiplication|chain")
      ->required()
      ->check(CLI::IsMember({"duplication", "multiplication", "chain"}));
  verify->add_option("--n", n_mult, "multiplication order (2..12)")
      ->check(CLI::Range(2, 12));
  verify->add_option("--a", a, "chain parameter a (positive)")
      ->check(kPositive);
  verify->add_option("--b", b, "chain parameter b (positive)")
      ->check(kPositive);
  verify->add_option("--x-min", x_min, "grid start (default 0.1)");
  verify->add_option("--x-max", x_max, "grid end (default 20)");
  verify->add_option("--steps", steps, "grid points (default 200)");
  verify->add_option("--tolerance", tolerance,
                     "pass threshold (default 1e-11, or 1e-10 for "
                     "multiplication; chain is fixed at 1e-11)");
  verify->add_option("--format", format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      if (func != "gamma" &&
          (eval->count("--a") == 0 || eval->count("--b") == 0)) {
        std::cerr << "eval " << func << " requires --a and --b\n";
        return 2;
      }
      return run_eval(func, a, b, x, log_scale);
    }
    if (*constants) {
      return run_constants(a, b);
    }
    if (*estimate) {
      return run_estimate(func, a, b, n_estimate);
    }
    if (*verify) {
      if (identity == "multiplication" && verify->count("--n") == 0) {
        std::cerr << "verify multiplication requires --n\n";
        return 2;
      }
      if (identity == "chain" &&
          (verify->count("--a") == 0 || verify->count("--b") == 0)) {
        std::cerr << "verify chain requires --a and --b\n";
        return 2;
      }
      return run_verify(identity, n_mult, a, b, x_min, x_max, steps, tolerance,
                        format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
