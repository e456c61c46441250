#include "ppb/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ppb/parse.hpp"

namespace ppb::cli {

namespace {

Json real_json(const Real& x) { return x.to_string(); }

std::string ok(bool b) { return b ? "ok" : "FAILED"; }

std::vector<Rational> finite_values(const preperiodic::PreperiodicSet& set) { return set.values(); }

Rational half_product(const std::vector<Rational>& pts) {
  Rational prod(1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) prod *= pts[i] - pts[j];
  return prod;
}

void note_margin(VerificationSummary& v, const Real& m) {
  if (!v.capbd_min_margin || m < *v.capbd_min_margin) v.capbd_min_margin = m;
}

}  // namespace

VerificationSummary verify(const Polynomial& phi, const reduction::BadPrimeCensus& census,
                           const preperiodic::PreperiodicSet& set, const bound::BoundReport& bound) {
  VerificationSummary v;
  const std::vector<Rational> pts = finite_values(set);

  for (const auto& a : phi.coeffs()) {
    if (a == 0) continue;
    v.product_formula = v.product_formula && verify_product_formula(a);
    ++v.product_formula_checks;
  }

  const std::set<Rational> members(pts.begin(), pts.end());
  for (const auto& x : pts) v.forward_invariant = v.forward_invariant && members.count(phi(x)) == 1;

  v.within_bound = Integer(static_cast<unsigned long>(set.total())) <= bound.count_bound;

  if (!pts.empty()) {
    v.minrad_applicable = true;
    for (const auto& r : census.reports)
      if (!r.place.is_archimedean()) v.minrad = v.minrad && reduction::minrad_holds(phi, r);
  }

  if (pts.size() >= 2) {
    const Rational h = half_product(pts);
    v.product_formula = v.product_formula && verify_product_formula(h) && capacity::global_product_is_one(pts);
    v.product_formula_checks += 2;

    const auto arch = capacity::check_capbd(phi, pts, census.reports.front());
    v.capbd = v.capbd && arch.holds;
    ++v.capbd_checks;
    note_margin(v, arch.margin);

    std::set<Integer> primes;
    for (const auto& q : prime_divisors(h.get_num() * h.get_den())) primes.insert(q);
    for (const auto& r : census.reports)
      if (!r.place.is_archimedean()) primes.insert(r.place.prime().value());
    for (const auto& q : primes) {
      const Prime p(q);
      // Outside the census every prime has plain good reduction: rho = 0.
      auto it = std::find_if(census.reports.begin(), census.reports.end(), [&](const auto& r) {
        return !r.place.is_archimedean() && r.place.prime() == p;
      });
      const reduction::PlaceReport report =
          it != census.reports.end()
              ? *it
              : reduction::PlaceReport{Place::finite(p), Rational(0), Rational(0), false};
      const auto c = capacity::check_capbd(phi, pts, report);
      v.capbd = v.capbd && c.holds;
      ++v.capbd_checks;
      note_margin(v, c.margin);
    }
  }
  return v;
}

AnalysisReport analyze(const Polynomial& phi, const preperiodic::EnumerateOptions& options, bool with_case) {
  auto census = reduction::bad_census(phi);
  auto bound = bound::theorem_bound(bound::BoundInput::over_Q(phi.degree(), census.s));
  auto set = preperiodic::enumerate_preperiodic(phi, options);
  auto v = verify(phi, census, set, bound);
  std::optional<bound::CaseReport> pc;
  if (with_case) pc = bound::classify_case(phi, census);
  return AnalysisReport{phi, std::move(census), std::move(bound), std::move(set), std::move(v), std::move(pc)};
}

Json to_json(const reduction::BadPrimeCensus& census) {
  Json places = Json::array();
  for (const auto& r : census.reports) {
    Json p{{"place", r.place.name()}, {"bad", r.bad}};
    if (r.rho) {
      p["rho"] = LogAbs(r.place.prime(), *r.rho).to_string();
      p["r_prime"] = LogAbs(r.place.prime(), *r.r_prime_rho).to_string();
    } else {
      p["rho"] = nullptr;
      p["r_prime"] = nullptr;
    }
    places.push_back(std::move(p));
  }
  return Json{{"places", places}, {"s", census.s}, {"s_inf", census.s_inf}};
}

Json to_json(const bound::BoundReport& b) {
  return Json{{"row", bound::to_string(b.row)},
              {"sigma", to_string(b.sigma)},
              {"beta", b.beta},
              {"t", real_json(b.t)},
              {"M", real_json(b.M)},
              {"count_bound", to_string(b.count_bound)},
              {"flagged", b.flagged},
              {"precision_bits", configured_precision()}};
}

Json to_json(const preperiodic::PreperiodicSet& set) {
  Json pts = Json::array();
  for (const auto& p : set.finite_points)
    pts.push_back(Json{{"x", to_string(p.x)}, {"tail", p.tail}, {"period", p.period}});
  return Json{{"points", pts},
              {"finite_count", set.finite_count()},
              {"total", set.total()},
              {"includes_infinity", set.includes_infinity}};
}

Json to_json(const VerificationSummary& v) {
  Json j{{"product_formula", v.product_formula},
         {"product_formula_checks", v.product_formula_checks},
         {"capbd", v.capbd},
         {"capbd_checks", v.capbd_checks},
         {"minrad", v.minrad},
         {"minrad_applicable", v.minrad_applicable},
         {"forward_invariant", v.forward_invariant},
         {"within_bound", v.within_bound},
         {"all", v.all()},
         {"precision_bits", configured_precision()}};
  j["capbd_min_margin"] = v.capbd_min_margin ? real_json(*v.capbd_min_margin) : Json(nullptr);
  return j;
}

Json to_json(const bound::CaseReport& c) {
  return Json{{"proof_case", c.proof_case},
              {"case1_certified", c.case1_certified},
              {"witness", c.witness},
              {"note", c.note}};
}

Json to_json(const AnalysisReport& r) {
  Json j{{"polynomial", render(r.phi)},
         {"degree", r.phi.degree()},
         {"census", to_json(r.census)},
         {"bound", to_json(r.bound)},
         {"enumeration", to_json(r.set)},
         {"verification", to_json(r.verification)}};
  if (r.proof_case) j["case"] = to_json(*r.proof_case);
  return j;
}

Json bound_input_json(const bound::BoundInput& in) {
  Json j{{"d", in.d}, {"s", in.s}, {"s_inf", in.s_inf}};
  if (const auto* nf = std::get_if<bound::NumberField>(&in.field)) {
    j["field"] = "number";
    j["D"] = nf->D;
  } else {
    j["field"] = "function";
    j["q"] = std::get<bound::FunctionField>(in.field).q;
  }
  return j;
}

Json scan_json(const preperiodic::ScanRange& range, const std::vector<preperiodic::ScanRow>& rows) {
  Json out = Json::array();
  std::size_t best = 0;
  for (const auto& r : rows) best = std::max(best, r.finite_count);
  Json maxima = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"c", to_string(r.c)}, {"finite_count", r.finite_count}});
    if (!rows.empty() && r.finite_count == best) maxima.push_back(to_string(r.c));
  }
  return Json{{"den", range.den},
              {"min", to_string(range.min)},
              {"max", to_string(range.max)},
              {"rows", out},
              {"count", rows.size()},
              {"max_finite_count", best},
              {"argmax", maxima}};
}

std::string census_text(const reduction::BadPrimeCensus& census) {
  std::ostringstream os;
  os << "bad places: s = " << census.s << ", s_inf = " << census.s_inf << "\n";
  for (const auto& r : census.reports) {
    os << "  " << r.place.name() << "  " << (r.bad ? "bad" : "good");
    if (r.rho)
      os << "  r = " << LogAbs(r.place.prime(), *r.rho).to_string()
         << "  r' = " << LogAbs(r.place.prime(), *r.r_prime_rho).to_string();
    os << "\n";
  }
  return os.str();
}

std::string bound_text(const bound::BoundReport& b) {
  std::ostringstream os;
  os << "bound: row " << bound::to_string(b.row) << ", sigma = " << to_string(b.sigma)
     << ", beta = " << b.beta << ", t = " << b.t.to_string() << "\n"
     << "  M = " << b.M.to_string() << ", count bound (with infinity) = " << to_string(b.count_bound)
     << (b.flagged ? "  [flagged: t <= 0]" : "") << "\n";
  return os.str();
}

std::string set_text(const preperiodic::PreperiodicSet& set) {
  std::ostringstream os;
  os << "preperiodic points: " << set.finite_count() << " finite, " << set.total()
     << " total including infinity\n";
  for (const auto& p : set.finite_points)
    os << "  " << to_string(p.x) << "  tail " << p.tail << "  period " << p.period << "\n";
  return os.str();
}

std::string verification_text(const VerificationSummary& v) {
  std::ostringstream os;
  os << "verification: " << (v.all() ? "ok" : "FAILED") << "\n"
     << "  product formula   " << ok(v.product_formula) << " (" << v.product_formula_checks << " checks)\n"
     << "  pairwise product  " << ok(v.capbd) << " (" << v.capbd_checks << " places";
  if (v.capbd_min_margin) os << ", min log margin " << v.capbd_min_margin->to_string(12);
  os << ")\n"
     << "  minimal radius    " << (v.minrad_applicable ? ok(v.minrad) : "n/a") << "\n"
     << "  forward invariant " << ok(v.forward_invariant) << "\n"
     << "  within bound      " << ok(v.within_bound) << "\n";
  return os.str();
}

std::string case_text(const bound::CaseReport& c) {
  std::ostringstream os;
  os << "proof case: " << c.proof_case;
  if (c.case1_certified) os << " (certified at " << c.witness << ")";
  if (!c.note.empty()) os << "  " << c.note;
  os << "\n";
  return os.str();
}

std::string analysis_text(const AnalysisReport& r) {
  std::string out = "phi(z) = " + render(r.phi) + "\n";
  out += census_text(r.census);
  out += bound_text(r.bound);
  out += set_text(r.set);
  out += verification_text(r.verification);
  if (r.proof_case) out += case_text(*r.proof_case);
  return out;
}

std::string scan_text(const std::vector<preperiodic::ScanRow>& rows, bool all_rows) {
  std::ostringstream os;
  std::size_t best = 0;
  for (const auto& r : rows) best = std::max(best, r.finite_count);
  for (const auto& r : rows)
    if (all_rows || r.finite_count > 0) os << to_string(r.c) << "  " << r.finite_count << "\n";
  os << "scanned " << rows.size() << " values; maximum finite count " << best << " at:\n";
  for (const auto& r : rows)
    if (r.finite_count == best) os << "  c = " << to_string(r.c) << "\n";
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ppb::cli
