#pragma once

// Report assembly for the command-line tool: each analysis is a JSON value
// (key-sorted, exact numbers as strings) plus a human-readable rendering.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppb/bound.hpp"
#include "ppb/capacity.hpp"
#include "ppb/poly.hpp"
#include "ppb/preperiodic.hpp"
#include "ppb/reduction.hpp"

namespace ppb::cli {

using Json = nlohmann::json;

/// Cross-checks of an enumerated set against the library's identities.
struct VerificationSummary {
  bool product_formula = true;   // coefficients and the difference product
  std::size_t product_formula_checks = 0;
  bool capbd = true;             // full finite set at every relevant place
  std::size_t capbd_checks = 0;
  std::optional<Real> capbd_min_margin;
  bool minrad = true;            // vacuous when the finite set is empty
  bool minrad_applicable = false;
  bool forward_invariant = true;
  bool within_bound = true;      // total <= count_bound

  bool all() const { return product_formula && capbd && minrad && forward_invariant && within_bound; }
};

VerificationSummary verify(const Polynomial& phi, const reduction::BadPrimeCensus& census,
                           const preperiodic::PreperiodicSet& set, const bound::BoundReport& bound);

struct AnalysisReport {
  Polynomial phi;
  reduction::BadPrimeCensus census;
  bound::BoundReport bound;
  preperiodic::PreperiodicSet set;
  VerificationSummary verification;
  std::optional<bound::CaseReport> proof_case;
};

AnalysisReport analyze(const Polynomial& phi, const preperiodic::EnumerateOptions& options, bool with_case);

Json to_json(const reduction::BadPrimeCensus& census);
Json to_json(const bound::BoundReport& report);
Json to_json(const preperiodic::PreperiodicSet& set);
Json to_json(const VerificationSummary& v);
Json to_json(const bound::CaseReport& c);
Json to_json(const AnalysisReport& r);
Json bound_input_json(const bound::BoundInput& in);
Json scan_json(const preperiodic::ScanRange& range, const std::vector<preperiodic::ScanRow>& rows);

std::string census_text(const reduction::BadPrimeCensus& census);
std::string bound_text(const bound::BoundReport& report);
std::string set_text(const preperiodic::PreperiodicSet& set);
std::string verification_text(const VerificationSummary& v);
std::string case_text(const bound::CaseReport& c);
std::string analysis_text(const AnalysisReport& r);
/// Rows with a nonzero count (every row when all_rows), then the maxima.
std::string scan_text(const std::vector<preperiodic::ScanRow>& rows, bool all_rows);

/// Compact JSON with a trailing newline; byte-stable for equal values.
std::string dump(const Json& j);

}  // namespace ppb::cli
