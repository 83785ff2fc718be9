// Command-line interface for constructing and verifying 2-Ramsey
// certificates of a*x + b*y = p(z), and for working with the periodic
// 2-colourings the certificates obstruct.
//
// Exit codes across all subcommands:
//   0  affirmative result (certificate verified, colouring avoids,
//      solutions found, parity criterion positive)
//   1  negative mathematical result (verification failed, no avoiding
//      colouring, no solutions, recipe hypothesis unsatisfied)
//   2  unusable input or exhausted work budget (bad arguments, violated
//      preconditions, parse failures)

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ramseycert/colouring.hpp"
#include "ramseycert/construct.hpp"
#include "ramseycert/io.hpp"

namespace {

using ramsey::AvoidanceVerdict;
using ramsey::BudgetError;
using ramsey::Certificate;
using ramsey::ConditionReport;
using ramsey::ConditionStatus;
using ramsey::ConstructionResult;
using ramsey::EquationSpec;
using ramsey::Error;
using ramsey::HypothesisError;
using ramsey::InconsistentSystemError;
using ramsey::Int;
using ramsey::IntPolynomial;
using ramsey::Json;
using ramsey::ParseError;
using ramsey::PeriodicColouring;
using ramsey::PreconditionError;
using ramsey::ScaledConstruction;
using ramsey::ScalingStep;
using ramsey::SignFunction;
using ramsey::TableColouring;
using ramsey::ThresholdError;
using ramsey::Triple;
using ramsey::Witness;
using ramsey::to_json;
using ramsey::to_string;

// ---------------------------------------------------------------------------
// Output plumbing

void emit_json(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

void emit_plain(const std::vector<std::string>& lines) {
  for (const auto& line : lines) std::cout << line << "\n";
}

std::string equation_text(const EquationSpec& eq) {
  return to_string(eq.a) + "*x + " + to_string(eq.b) + "*y = " + eq.p.pretty();
}

std::string certificate_text(const Certificate& c) {
  return "d=" + to_string(c.d) + " u=" + to_string(c.u) + " t=" + to_string(c.t) +
         " v=" + to_string(c.v);
}

std::string witness_text(const Witness& w) {
  std::vector<std::string> parts;
  if (w.k) parts.push_back("k=" + to_string(*w.k));
  if (w.q) parts.push_back("q=" + to_string(*w.q));
  if (w.j) parts.push_back("j=" + to_string(*w.j));
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + ")";
}

void append_report_lines(const ConditionReport& report,
                         std::vector<std::string>* lines) {
  lines->push_back(std::string("verification: ") +
                   (report.overall ? "pass" : "fail"));
  for (const auto& entry : report.conditions) {
    std::string line = "  (" + std::to_string(entry.index) + ") " +
                       (entry.status == ConditionStatus::pass ? "pass" : "FAIL");
    if (!entry.witnesses.empty()) {
      line += "  witnesses:";
      for (const auto& w : entry.witnesses) line += " " + witness_text(w);
    }
    lines->push_back(line);
  }
}

void report_error(bool plain, const std::string& status, const std::string& message) {
  if (plain) {
    std::cerr << "error (" << status << "): " << message << "\n";
  } else {
    emit_json(Json{{"status", status}, {"error", message}});
  }
}

// Routes every library error to the documented exit code, keeping the
// distinction between "no" (exit 1) and "cannot answer" (exit 2) visible.
int guarded(bool plain, const std::function<int()>& body) {
  try {
    return body();
  } catch (const HypothesisError& e) {
    report_error(plain, "hypothesis-unsatisfied", e.what());
    return 1;
  } catch (const BudgetError& e) {
    report_error(plain, "budget-exhausted", e.what());
    return 2;
  } catch (const InconsistentSystemError& e) {
    report_error(plain, "precondition-failed", e.what());
    return 2;
  } catch (const PreconditionError& e) {
    report_error(plain, "precondition-failed", e.what());
    return 2;
  } catch (const ParseError& e) {
    report_error(plain, "parse-error", e.what());
    return 2;
  } catch (const ThresholdError& e) {
    report_error(plain, "below-threshold", e.what());
    return 2;
  } catch (const Error& e) {
    report_error(plain, "error", e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error(plain, "error", e.what());
    return 2;
  }
}

// ---------------------------------------------------------------------------
// Argument conversion

Int parse_int_arg(const std::string& text, const char* what) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string(what) + " is not an integer: \"" + text + "\"");
  }
}

EquationSpec parse_equation(const std::string& a, const std::string& b,
                            const std::string& poly) {
  return EquationSpec(parse_int_arg(a, "a"), parse_int_arg(b, "b"),
                      IntPolynomial::parse(poly));
}

// Colouring argument grammar: "builtin:NAME", "file:PATH" or a bare PATH for
// a periodic colouring file, "table:PATH" for a finite colour table.
bool has_prefix(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

PeriodicColouring resolve_periodic(const std::string& source) {
  if (has_prefix(source, "builtin:")) return ramsey::builtin_colouring(source.substr(8));
  if (has_prefix(source, "table:"))
    throw PreconditionError(
        "a finite colour table cannot witness avoidance; pass a periodic "
        "colouring (builtin:NAME, file:PATH or a bare path)");
  if (has_prefix(source, "file:")) return ramsey::load_periodic_colouring(source.substr(5));
  return ramsey::load_periodic_colouring(source);
}

Json periodic_json(const PeriodicColouring& col) {
  return Json{{"modulus", col.modulus}, {"signs", col.sign_string()}};
}

struct ColourArg {
  SignFunction fn;
  Json desc;
  std::string text;
};

// For solution enumeration any total sign function works, so finite tables
// are accepted here (the enumeration bound must stay inside the table).
ColourArg resolve_sign_source(const std::string& source, const Int& bound) {
  if (has_prefix(source, "table:")) {
    TableColouring table = ramsey::load_table_colouring(source.substr(6));
    const Int size(static_cast<unsigned long>(table.signs.size()));
    if (bound > size)
      throw PreconditionError("colour table covers 1.." + to_string(size) +
                              " but the enumeration bound is " + to_string(bound));
    return {table.fn(), Json{{"table_size", table.signs.size()}},
            "table of " + std::to_string(table.signs.size()) + " signs"};
  }
  PeriodicColouring col = resolve_periodic(source);
  return {col.fn(), periodic_json(col),
          "modulus " + std::to_string(col.modulus) + " signs " + col.sign_string()};
}

// ---------------------------------------------------------------------------
// certify

struct CertifyArgs {
  std::string a, b, poly;
  std::string method = "auto";
  std::string alpha_prime;  // optional override for the power recipe
  std::uint64_t factor_budget = ramsey::kDefaultFactorBudget;
  std::uint64_t scan_budget = ramsey::kDefaultScanBudget;
};

// p = c * z^e with c > 0 and e >= 1.
std::optional<std::pair<Int, unsigned long>> as_monomial(const IntPolynomial& p) {
  if (p.degree() < 1 || p.leading_coefficient() <= 0) return std::nullopt;
  for (std::size_t i = 0; i + 1 <= p.degree(); ++i)
    if (p.coefficient(i) != 0) return std::nullopt;
  return std::make_pair(p.leading_coefficient(),
                        static_cast<unsigned long>(p.degree()));
}

struct CertifyOutcome {
  ConstructionResult result;
  std::vector<ScalingStep> chain;
};

CertifyOutcome run_method(const std::string& method, const EquationSpec& eq,
                          const CertifyArgs& args) {
  const auto mono = as_monomial(eq.p);
  if (method == "general")
    return {ramsey::construct_general(eq.a, eq.b, eq.p, args.factor_budget), {}};
  if (method == "power") {
    if (eq.b != 1 || !mono || mono->first != 1 || mono->second < 2)
      throw PreconditionError(
          "the power recipe applies to a*x + y = z^n (b = 1, p a unit monomial "
          "of degree >= 2)");
    std::optional<Int> override_val;
    if (!args.alpha_prime.empty())
      override_val = parse_int_arg(args.alpha_prime, "--alpha-prime");
    return {ramsey::construct_power(eq.a, Int(static_cast<long>(mono->second)),
                                    override_val, args.factor_budget),
            {}};
  }
  if (method == "czp") {
    if (!mono || !ramsey::is_prime(Int(static_cast<long>(mono->second))))
      throw PreconditionError(
          "the prime-power recipe applies to a*x + b*y = c*z^q with q prime");
    return {ramsey::construct_czp(eq.a, eq.b, mono->first,
                                  Int(static_cast<long>(mono->second)),
                                  args.scan_budget),
            {}};
  }
  if (method == "cz2") {
    if (!mono || mono->second != 2)
      throw PreconditionError("the square recipe applies to a*x + b*y = c*z^2");
    return {ramsey::construct_cz2(eq.a, eq.b, mono->first, args.scan_budget), {}};
  }
  if (method == "scaled-cz2") {
    if (!mono || mono->second != 2)
      throw PreconditionError(
          "the scaled square recipe applies to a*x + b*y = c*z^2");
    ScaledConstruction sc =
        ramsey::construct_scaled_cz2(eq.a, eq.b, mono->first, args.scan_budget);
    return {std::move(sc.result), std::move(sc.chain)};
  }
  throw PreconditionError("unknown construction method \"" + method + "\"");
}

int cmd_certify(const CertifyArgs& args, bool plain) {
  const EquationSpec eq = parse_equation(args.a, args.b, args.poly);

  // x + y = p(z) is decided outright by the parity of p(1)*p(2); the
  // certificate machinery is not needed (and the recipes may not apply).
  if (args.method == "auto" && eq.a == 1 && eq.b == 1) {
    const bool ramsey_positive = ramsey::unit_coeff_criterion(eq.p);
    const Int product = eq.p(1) * eq.p(2);
    if (plain) {
      emit_plain({"method: parity-criterion", "equation: " + equation_text(eq),
                  "p(1)*p(2) = " + to_string(product) + " (" +
                      (ramsey_positive ? "even" : "odd") + ")",
                  std::string("ramsey: ") + (ramsey_positive ? "yes" : "no"),
                  "note: no certificate emitted"});
    } else {
      emit_json(Json{{"command", "certify"},
                     {"method", "parity-criterion"},
                     {"equation", to_json(eq)},
                     {"product", to_string(product)},
                     {"product_parity", ramsey_positive ? "even" : "odd"},
                     {"ramsey", ramsey_positive},
                     {"certificate", nullptr},
                     {"note", "no certificate emitted"}});
    }
    return ramsey_positive ? 0 : 1;
  }

  std::optional<CertifyOutcome> outcome;
  if (args.method == "auto") {
    const auto mono = as_monomial(eq.p);
    std::vector<std::string> order{"general"};
    if (eq.b == 1 && mono && mono->first == 1 && mono->second >= 2)
      order.push_back("power");
    if (mono && ramsey::is_prime(Int(static_cast<long>(mono->second))))
      order.push_back(mono->second == 2 ? "cz2" : "czp");
    if (mono && mono->second == 2) order.push_back("scaled-cz2");

    std::optional<std::string> first_failure;
    std::optional<std::string> hypothesis_failure;
    for (const auto& method : order) {
      try {
        outcome = run_method(method, eq, args);
        break;
      } catch (const HypothesisError& e) {
        if (!hypothesis_failure) hypothesis_failure = e.what();
      } catch (const PreconditionError& e) {
        if (!first_failure) first_failure = e.what();
      }
    }
    if (!outcome) {
      // A hypothesis decided false is a genuine negative; a precondition
      // mismatch merely means no recipe fits the input shape.
      if (hypothesis_failure) throw HypothesisError(*hypothesis_failure);
      throw PreconditionError(*first_failure);
    }
  } else {
    outcome = run_method(args.method, eq, args);
  }

  const ConstructionResult& res = outcome->result;
  const ConditionReport report =
      ramsey::verify_certificate(res.equation, res.certificate);

  if (plain) {
    std::vector<std::string> lines{"method: " + res.method,
                                   "equation: " + equation_text(res.equation),
                                   std::string("swapped: ") +
                                       (res.swapped ? "yes" : "no"),
                                   "certificate: " + certificate_text(res.certificate)};
    for (const auto& step : outcome->chain)
      lines.push_back("reduction: factor " + to_string(step.factor) + ": " +
                      equation_text(step.original) + "  ->  " +
                      equation_text(step.reduced));
    append_report_lines(report, &lines);
    emit_plain(lines);
  } else {
    Json doc{{"command", "certify"},
             {"method", res.method},
             {"swapped", res.swapped},
             {"equation", to_json(res.equation)},
             {"certificate", to_json(res.certificate)}};
    if (!outcome->chain.empty()) {
      Json chain = Json::array();
      for (const auto& step : outcome->chain) chain.push_back(to_json(step));
      doc["chain"] = std::move(chain);
    }
    doc["verification"] = to_json(report);
    emit_json(doc);
  }
  return report.overall ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string a, b, poly, d, u;
  std::string t = "0";
  std::string v = "0";
};

int cmd_verify(const VerifyArgs& args, bool plain) {
  const EquationSpec eq = parse_equation(args.a, args.b, args.poly);
  const Certificate cert(parse_int_arg(args.d, "d"), parse_int_arg(args.u, "u"),
                         parse_int_arg(args.t, "t"), parse_int_arg(args.v, "v"));
  const ConditionReport report = ramsey::verify_certificate(eq, cert);
  if (plain) {
    std::vector<std::string> lines{"equation: " + equation_text(eq),
                                   "certificate: " + certificate_text(cert)};
    append_report_lines(report, &lines);
    emit_plain(lines);
  } else {
    emit_json(Json{{"command", "verify"},
                   {"equation", to_json(eq)},
                   {"certificate", to_json(cert)},
                   {"verification", to_json(report)}});
  }
  return report.overall ? 0 : 1;
}

// ---------------------------------------------------------------------------
// check-colouring

struct CheckColouringArgs {
  std::string a, b, poly, colouring;
  std::uint64_t lift_budget = ramsey::kDefaultLiftBudget;
};

int cmd_check_colouring(const CheckColouringArgs& args, bool plain) {
  const EquationSpec eq = parse_equation(args.a, args.b, args.poly);
  const PeriodicColouring col = resolve_periodic(args.colouring);
  const AvoidanceVerdict verdict =
      ramsey::check_periodic_avoidance(eq, col, args.lift_budget);

  if (plain) {
    std::vector<std::string> lines{
        "equation: " + equation_text(eq),
        "colouring: modulus " + std::to_string(col.modulus) + " signs " +
            col.sign_string(),
        std::string("avoids: ") + (verdict.avoids ? "yes" : "no")};
    for (const auto& viol : verdict.violations) {
      std::string line = "violation: residues (x=" + to_string(viol.triple.x) +
                         ", y=" + to_string(viol.triple.y) +
                         ", z=" + to_string(viol.triple.z) + ") colour " +
                         (viol.colour == 1 ? "+" : "-");
      if (viol.lift)
        line += "  lift (" + to_string(viol.lift->x) + ", " +
                to_string(viol.lift->y) + ", " + to_string(viol.lift->z) + ")";
      else
        line += "  lift not found within budget";
      lines.push_back(line);
    }
    emit_plain(lines);
  } else {
    Json violations = Json::array();
    for (const auto& viol : verdict.violations) violations.push_back(to_json(viol));
    emit_json(Json{{"command", "check-colouring"},
                   {"equation", to_json(eq)},
                   {"colouring", periodic_json(col)},
                   {"avoids", verdict.avoids},
                   {"violations", std::move(violations)}});
  }
  return verdict.avoids ? 0 : 1;
}

// ---------------------------------------------------------------------------
// search-colouring

struct SearchArgs {
  std::string a, b, poly;
  long max_mod = 12;
  long ceiling = ramsey::kDefaultSearchCeiling;
};

int cmd_search_colouring(const SearchArgs& args, bool plain) {
  const EquationSpec eq = parse_equation(args.a, args.b, args.poly);
  if (args.max_mod < 1)
    throw PreconditionError("--max-mod must be >= 1");
  if (args.max_mod > args.ceiling)
    throw PreconditionError("--max-mod " + std::to_string(args.max_mod) +
                            " exceeds --ceiling " + std::to_string(args.ceiling));
  for (long m = 1; m <= args.max_mod; ++m) {
    const auto found = ramsey::search_avoiding_colouring(eq, m, args.ceiling);
    if (!found) continue;
    if (plain) {
      emit_plain({"equation: " + equation_text(eq), "found: yes",
                  "modulus: " + std::to_string(found->modulus),
                  "signs: " + found->sign_string()});
    } else {
      emit_json(Json{{"command", "search-colouring"},
                     {"equation", to_json(eq)},
                     {"found", true},
                     {"colouring", periodic_json(*found)}});
    }
    return 0;
  }
  if (plain) {
    emit_plain({"equation: " + equation_text(eq), "found: no",
                "max modulus tried: " + std::to_string(args.max_mod)});
  } else {
    emit_json(Json{{"command", "search-colouring"},
                   {"equation", to_json(eq)},
                   {"found", false},
                   {"max_modulus", args.max_mod}});
  }
  return 1;
}

// ---------------------------------------------------------------------------
// solutions

struct SolutionsArgs {
  std::string a, b, poly;
  std::string colouring = "builtin:const";
  std::string max = "100";
};

int cmd_solutions(const SolutionsArgs& args, bool plain) {
  const EquationSpec eq = parse_equation(args.a, args.b, args.poly);
  const Int bound = parse_int_arg(args.max, "--max");
  const ColourArg colour = resolve_sign_source(args.colouring, bound);
  const auto solutions = ramsey::enumerate_mono_solutions(eq, colour.fn, bound);

  if (plain) {
    std::vector<std::string> lines{
        "equation: " + equation_text(eq), "colouring: " + colour.text,
        "bound: " + to_string(bound),
        "count: " + std::to_string(solutions.size())};
    for (const auto& sol : solutions)
      lines.push_back("solution: x=" + to_string(sol.x) + " y=" + to_string(sol.y) +
                      " z=" + to_string(sol.z) + " colour " +
                      (sol.colour == 1 ? "+" : "-"));
    emit_plain(lines);
  } else {
    Json list = Json::array();
    for (const auto& sol : solutions) list.push_back(to_json(sol));
    emit_json(Json{{"command", "solutions"},
                   {"equation", to_json(eq)},
                   {"colouring", colour.desc},
                   {"bound", to_string(bound)},
                   {"count", solutions.size()},
                   {"solutions", std::move(list)}});
  }
  return solutions.empty() ? 1 : 0;
}

// ---------------------------------------------------------------------------
// construct-solution

struct ConstructSolutionArgs {
  std::string a, b, poly, d;
  std::string t = "0";
  std::string min = "1";
};

int cmd_construct_solution(const ConstructSolutionArgs& args, bool plain) {
  const EquationSpec eq = parse_equation(args.a, args.b, args.poly);
  const Int d = parse_int_arg(args.d, "d");
  const Int t = parse_int_arg(args.t, "t");
  const Int K = parse_int_arg(args.min, "--min");
  const Triple sol = ramsey::construct_solution_in_class(eq, d, t, K);

  if (plain) {
    emit_plain({"equation: " + equation_text(eq),
                "class: d=" + to_string(d) + " t=" + to_string(t) +
                    " min=" + to_string(K),
                "solution: x=" + to_string(sol.x) + " y=" + to_string(sol.y) +
                    " z=" + to_string(sol.z)});
  } else {
    emit_json(Json{{"command", "construct-solution"},
                   {"equation", to_json(eq)},
                   {"d", to_string(d)},
                   {"t", to_string(t)},
                   {"min", to_string(K)},
                   {"solution", to_json(sol)}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "2-Ramsey certificates for a*x + b*y = p(z): construction, "
      "verification, colouring checks and searches"};
  app.require_subcommand(1);
  bool plain = false;
  app.add_flag("--plain", plain, "human-readable text instead of JSON");

  // Polynomials are written low-to-high as comma-separated coefficients
  // ("0,1,1" is z^2+z) or as an expression in z ("z^2+z").
  const std::string poly_help =
      "polynomial p(z): coefficients low-to-high (\"2,3,1\") or an expression (\"z^2+3*z+2\")";

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand(
      "certify", "construct a certificate with one of the built-in recipes");
  certify->fallthrough();
  certify->add_option("-a,--a", certify_args.a, "coefficient of x")->required();
  certify->add_option("-b,--b", certify_args.b, "coefficient of y")->required();
  certify->add_option("-p,--poly", certify_args.poly, poly_help)->required();
  certify
      ->add_option("--method", certify_args.method,
                   "recipe to use (default: first applicable)")
      ->check(CLI::IsMember({"auto", "general", "power", "cz2", "czp", "scaled-cz2"}));
  certify->add_option("--alpha-prime", certify_args.alpha_prime,
                      "override the 2-exponent of d in the power recipe");
  certify->add_option("--factor-budget", certify_args.factor_budget,
                      "trial-division probes allowed per factorization");
  certify->add_option("--scan-budget", certify_args.scan_budget,
                      "candidates the prime-power recipe's t-scan may try");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "verify a certificate (d, u, t, v) against an equation");
  verify->fallthrough();
  verify->add_option("-a,--a", verify_args.a, "coefficient of x")->required();
  verify->add_option("-b,--b", verify_args.b, "coefficient of y")->required();
  verify->add_option("-p,--poly", verify_args.poly, poly_help)->required();
  verify->add_option("-d,--d", verify_args.d, "period d >= 1")->required();
  verify->add_option("-u,--u", verify_args.u, "period u >= 1")->required();
  verify->add_option("-t,--t", verify_args.t, "residue t (normalized mod d)");
  verify->add_option("-v,--v", verify_args.v, "residue v (normalized mod u)");

  CheckColouringArgs check_args;
  auto* check = app.add_subcommand(
      "check-colouring",
      "decide whether a periodic colouring avoids monochromatic solutions");
  check->fallthrough();
  check->add_option("-a,--a", check_args.a, "coefficient of x")->required();
  check->add_option("-b,--b", check_args.b, "coefficient of y")->required();
  check->add_option("-p,--poly", check_args.poly, poly_help)->required();
  check
      ->add_option("-c,--colouring", check_args.colouring,
                   "builtin:NAME (parity, example2:q,n, example3, const), "
                   "file:PATH or a bare path")
      ->required();
  check->add_option("--lift-budget", check_args.lift_budget,
                    "z-candidates tried when lifting a violation to a concrete solution");

  SearchArgs search_args;
  auto* search = app.add_subcommand(
      "search-colouring", "search for an avoiding periodic colouring by rising modulus");
  search->fallthrough();
  search->add_option("-a,--a", search_args.a, "coefficient of x")->required();
  search->add_option("-b,--b", search_args.b, "coefficient of y")->required();
  search->add_option("-p,--poly", search_args.poly, poly_help)->required();
  search->add_option("-m,--max-mod", search_args.max_mod,
                     "largest modulus to try (default 12)");
  search->add_option("--ceiling", search_args.ceiling,
                     "hard cap on the modulus the search will accept");

  SolutionsArgs solutions_args;
  auto* solutions = app.add_subcommand(
      "solutions", "enumerate monochromatic solutions with x, y, z <= bound");
  solutions->fallthrough();
  solutions->add_option("-a,--a", solutions_args.a, "coefficient of x")->required();
  solutions->add_option("-b,--b", solutions_args.b, "coefficient of y")->required();
  solutions->add_option("-p,--poly", solutions_args.poly, poly_help)->required();
  solutions->add_option("-c,--colouring", solutions_args.colouring,
                        "builtin:NAME, file:PATH, table:PATH or a bare path "
                        "(default builtin:const = all solutions)");
  solutions->add_option("-n,--max", solutions_args.max,
                        "enumeration bound for x, y and z (default 100)");

  ConstructSolutionArgs construct_args;
  auto* construct = app.add_subcommand(
      "construct-solution",
      "produce a solution with x = y = z = t (mod d), all entries >= a floor");
  construct->fallthrough();
  construct->add_option("-a,--a", construct_args.a, "coefficient of x")->required();
  construct->add_option("-b,--b", construct_args.b, "coefficient of y")->required();
  construct->add_option("-p,--poly", construct_args.poly, poly_help)->required();
  construct->add_option("-d,--d", construct_args.d, "period d >= 1")->required();
  construct->add_option("-t,--t", construct_args.t, "residue class mod d (default 0)");
  construct->add_option("-k,--min", construct_args.min,
                        "lower bound K for x, y and z (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help stays 0; usage errors are exit 2
  }

  if (certify->parsed())
    return guarded(plain, [&] { return cmd_certify(certify_args, plain); });
  if (verify->parsed())
    return guarded(plain, [&] { return cmd_verify(verify_args, plain); });
  if (check->parsed())
    return guarded(plain, [&] { return cmd_check_colouring(check_args, plain); });
  if (search->parsed())
    return guarded(plain, [&] { return cmd_search_colouring(search_args, plain); });
  if (solutions->parsed())
    return guarded(plain, [&] { return cmd_solutions(solutions_args, plain); });
  if (construct->parsed())
    return guarded(plain,
                   [&] { return cmd_construct_solution(construct_args, plain); });
  return 2;
}
