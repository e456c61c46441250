// ppb: rational preperiodic points of polynomials over Q, the bad places that
// control them, and the uniform bound in terms of those places.
//
// Exit codes: 0 success, 1 usage, 2 parse, 3 size guard, 4 internal error
// (including a failed verification).

#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "ppb/parse.hpp"
#include "ppb/report.hpp"

namespace {

using namespace ppb;
using namespace ppb::cli;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kSizeGuard = 3, kInternal = 4 };

struct Common {
  bool json = false;
  int jobs = 0;  // 0: OpenMP default
  std::uint64_t limit = preperiodic::kDefaultCandidateLimit;

  preperiodic::EnumerateOptions options() const {
    if (jobs > 0) omp_set_num_threads(jobs);
    return {limit, jobs == 1 ? preperiodic::Execution::Serial : preperiodic::Execution::Parallel};
  }
};

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.json)
    std::cout << dump(j);
  else
    std::cout << text;
}

int cmd_analyze(const Common& c, const std::string& text, bool with_case) {
  const auto r = analyze(parse_poly(text), c.options(), with_case);
  emit(c, to_json(r), analysis_text(r));
  return kOk;
}

int cmd_enumerate(const Common& c, const std::string& text) {
  const Polynomial phi = parse_poly(text);
  const auto set = preperiodic::enumerate_preperiodic(phi, c.options());
  Json j = to_json(set);
  j["polynomial"] = render(phi);
  emit(c, j, "phi(z) = " + render(phi) + "\n" + set_text(set));
  return kOk;
}

int cmd_verify(const Common& c, const std::string& text) {
  const auto r = analyze(parse_poly(text), c.options(), false);
  Json j{{"polynomial", render(r.phi)},
         {"finite_count", r.set.finite_count()},
         {"verification", to_json(r.verification)}};
  emit(c, j, "phi(z) = " + render(r.phi) + "\n" + verification_text(r.verification));
  return r.verification.all() ? kOk : kInternal;
}

struct BoundArgs {
  std::optional<std::string> poly;
  std::optional<long> d, D, s, s_inf, q;
};

int cmd_bound(const Common& c, const BoundArgs& a) {
  Json j;
  std::string text;
  std::optional<bound::BoundInput> in;
  if (a.poly) {
    if (a.d || a.D || a.s || a.s_inf || a.q) throw CLI::ValidationError("bound", "give a polynomial or --d/--s, not both");
    const Polynomial phi = parse_poly(*a.poly);
    const auto census = reduction::bad_census(phi);
    in.emplace(bound::BoundInput::over_Q(phi.degree(), census.s));
    j["polynomial"] = render(phi);
    j["census"] = to_json(census);
    text = "phi(z) = " + render(phi) + "\n" + census_text(census);
  } else {
    if (!a.d || !a.s) throw CLI::ValidationError("bound", "need a polynomial, or --d and --s");
    if (a.q) {
      if (a.D) throw CLI::ValidationError("bound", "--q (function field) excludes --D");
      in.emplace(*a.d, bound::FunctionField{*a.q}, *a.s, a.s_inf.value_or(0));
    } else {
      in.emplace(*a.d, bound::NumberField{a.D.value_or(1)}, *a.s, a.s_inf.value_or(1));
    }
  }
  const auto rep = bound::theorem_bound(*in);
  j["input"] = bound_input_json(*in);
  j["bound"] = to_json(rep);
  text += bound_text(rep);
  if (in->d == 2 && in->is_number_field() && in->D() == 1 && in->s >= 1) {
    const Real refined = bound::quadratic_refined_bound(in->s);
    j["refined_quadratic_M"] = refined.to_string();
    text += "  refined quadratic bound over Q: " + refined.to_string() + "\n";
  }
  emit(c, j, text);
  return kOk;
}

struct ScanArgs {
  long den = 0;
  std::string min, max;
  bool all = false;
};

int cmd_scan(const Common& c, const ScanArgs& a) {
  if (a.den < 1) throw CLI::ValidationError("--den", "must be >= 1");
  const preperiodic::ScanRange range{a.den, parse_rational(a.min), parse_rational(a.max)};
  if (range.min > range.max) throw CLI::ValidationError("scan", "--min exceeds --max");
  const auto rows = preperiodic::scan_quadratic(range, c.options());
  emit(c, scan_json(range, rows), scan_text(rows, a.all));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational preperiodic points of polynomial maps over Q"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Key-sorted JSON output");
    sub->add_option("--jobs", common.jobs, "OpenMP threads (1 = serial reference path)")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-candidates", common.limit, "Refuse enumerations with more candidates (exit 3)");
  };

  std::string poly_text;
  bool with_case = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Census, bound, enumeration and verification");
  analyze_cmd->add_option("poly", poly_text, "Polynomial in z, e.g. \"z^2 - 29/16\"")->required();
  analyze_cmd->add_flag("--case", with_case, "Report which proof case the map falls into");
  add_common(analyze_cmd);

  BoundArgs bargs;
  auto* bound_cmd = app.add_subcommand("bound", "Uniform bound from a polynomial or from (d, D, s, s_inf) / (d, q, s)");
  bound_cmd->add_option("poly", bargs.poly, "Polynomial in z (over Q)");
  bound_cmd->add_option("--d", bargs.d, "Degree");
  bound_cmd->add_option("--D", bargs.D, "Number field degree [K:Q] (default 1)");
  bound_cmd->add_option("--s", bargs.s, "Bad places, archimedean included");
  bound_cmd->add_option("--s-inf", bargs.s_inf, "Archimedean places (default 1, 0 for function fields)");
  bound_cmd->add_option("--q", bargs.q, "Function field: smallest residue field size");
  add_common(bound_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "All rational preperiodic points");
  enum_cmd->add_option("poly", poly_text, "Polynomial in z")->required();
  add_common(enum_cmd);

  ScanArgs sargs;
  auto* scan_cmd = app.add_subcommand("scan", "Count preperiodic points of z^2 + j/den^2 over a c-range");
  scan_cmd->add_option("--den", sargs.den, "Denominator m of c = j/m^2")->required();
  scan_cmd->add_option("--min", sargs.min, "Smallest c (inclusive), e.g. -12 or -1/4")->required();
  scan_cmd->add_option("--max", sargs.max, "Largest c (inclusive)")->required();
  scan_cmd->add_flag("--all", sargs.all, "List rows with zero finite points too (text output)");
  add_common(scan_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the enumeration against the product identities");
  verify_cmd->add_option("poly", poly_text, "Polynomial in z")->required();
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(common, poly_text, with_case);
    if (*bound_cmd) return cmd_bound(common, bargs);
    if (*enum_cmd) return cmd_enumerate(common, poly_text);
    if (*scan_cmd) return cmd_scan(common, sargs);
    if (*verify_cmd) return cmd_verify(common, poly_text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
