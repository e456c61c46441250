#include "ppb/bound.hpp"

#include <algorithm>

namespace ppb::bound {

BoundInput::BoundInput(long d_, FieldKind field_, long s_, long s_inf_)
    : d(d_), field(field_), s(s_), s_inf(s_inf_) {
  if (d < 2) throw ArgumentError("bound needs degree d >= 2");
  if (s < 0 || s_inf < 0) throw ArgumentError("s and s_inf must be nonnegative");
  if (const auto* nf = std::get_if<NumberField>(&field)) {
    if (nf->D < 1) throw ArgumentError("number field degree D must be >= 1");
    if (s < s_inf) throw ArgumentError("s counts the archimedean places, so s >= s_inf");
    if (s >= 1 && s_inf < 1) throw ArgumentError("a number field has s_inf >= 1");
    if (s_inf > nf->D) throw ArgumentError("a number field has at most D archimedean places");
  } else {
    const auto& ff = std::get<FunctionField>(field);
    if (ff.q < 2) throw ArgumentError("residue field size q must be >= 2");
    if (s_inf != 0) throw ArgumentError("function fields have no archimedean places");
  }
}

long BoundInput::D() const {
  if (const auto* nf = std::get_if<NumberField>(&field)) return nf->D;
  return 0;
}

std::string to_string(Row r) {
  switch (r) {
    case Row::FunctionFieldS0:
      return "FunctionFieldS0";
    case Row::ArchOnly:
      return "ArchOnly";
    case Row::SmallT:
      return "SmallT";
    case Row::General:
      return "General";
  }
  return "?";
}

Rational sigma_of(long d) {
  if (d < 2) throw ArgumentError("sigma needs d >= 2");
  if (d == 2) return Rational(7);
  const long e = (d - 1) * (d - 2);
  return make_rational(2 * pow(Integer(33), static_cast<unsigned long>(e)), Integer(e));
}

namespace {

bool within_sigma(const BoundInput& in, const Rational& sigma) {
  return in.is_number_field() && Rational(in.s) <= sigma * in.D();
}

}  // namespace

long beta_of(const BoundInput& in, const Rational& sigma) {
  if (!within_sigma(in, sigma)) return 1;
  return in.d == 2 ? 9 : std::max(11L, 2 * in.d);
}

Real t_of(const BoundInput& in) {
  if (!in.is_number_field()) return Real(in.s);
  if (within_sigma(in, sigma_of(in.d))) return Real(in.s - in.s_inf);
  // s + D log2(d) / 2
  const Real half_log = Real::div(Real::mul(Real(in.D()), log2(Real(in.d), Rounding::Up), Rounding::Up),
                                  Real(2), Rounding::Up);
  return Real::add(Real(in.s), half_log, Rounding::Up);
}

BoundReport theorem_bound(const BoundInput& in) {
  const Rational sigma = sigma_of(in.d);
  const long beta = beta_of(in, sigma);
  const Real t = t_of(in);
  const long d = in.d;
  const Integer beta_D = pow(Integer(beta), static_cast<unsigned long>(in.D()));

  BoundReport rep{sigma, beta, t, Row::General, Real(), Integer(0), false};
  if (!in.is_number_field() && in.s == 0) {
    rep.row = Row::FunctionFieldS0;
    rep.M = Real(std::get<FunctionField>(in.field).q);
  } else if (in.is_number_field() && in.s == in.s_inf) {
    rep.row = Row::ArchOnly;
    rep.M = Real(beta_D);
  } else if (t.sign() <= 0) {
    // Unreachable for validated inputs: t >= 1 whenever s > s_inf.
    rep.row = Row::ArchOnly;
    rep.M = Real(beta_D);
    rep.flagged = true;
  } else {
    // t >= 1 here, so all logarithms below are nonnegative and upward
    // rounding at each step gives an upper bound.
    const Real lt = log_base(t, d, Rounding::Up);
    Real inner = Real::add(lt, Real(3), Rounding::Up);
    if (t < Real(d)) {
      rep.row = Row::SmallT;
    } else {
      rep.row = Row::General;
      inner = Real::add(inner, log_base(max(Real(1), lt), d, Rounding::Up), Rounding::Up);
    }
    const Real scale(Integer(beta_D * (d * d - 2 * d + 2)));
    rep.M = Real::mul(scale, Real::mul(t, inner, Rounding::Up), Rounding::Up);
  }
  rep.count_bound = rep.M.ceil() + 1;
  return rep;
}

Real quadratic_refined_bound(long s) {
  if (s < 1) throw ArgumentError("refined quadratic bound needs s >= 1");
  if (s == 1) return Real(5);
  const Real n(2 * s + 1);
  const Real l = log2(n, Rounding::Up);
  const Real ll = log2(Real::sub(l, Real(1), Rounding::Up), Rounding::Up);
  const Real inner = Real::add(Real::add(l, ll, Rounding::Up), Real(2), Rounding::Up);
  return Real::mul(n, inner, Rounding::Up);
}

Real C_of(long d) {
  if (d < 2) throw ArgumentError("C_d needs d >= 2");
  if (d == 2) return Real(1);
  // d^{-(d-2)/(d-1)}
  const Real e = Real(-(d - 2)) / Real(d - 1);
  return exp(e * log(Real(d)));
}

Case1Thresholds case1_threshold(long d) {
  const Real C = C_of(d);
  Real arch = d == 2 ? Real(4) : Real(4) + sqrt(Real(3));
  Real r = arch / C;
  return Case1Thresholds{Real(4), std::move(arch), std::move(r)};
}

CaseReport classify_case(const Polynomial& phi, const reduction::BadPrimeCensus& census) {
  const long d = phi.degree();
  const int fallback = d == 2 ? 2 : 3;
  CaseReport out{fallback, false, "", ""};
  if (census.s - census.s_inf < 1) {
    out.note = "no finite bad place; the archimedean covering case applies";
    return out;
  }
  // Largest finite R_p = p^rho, compared exactly.
  std::optional<LogAbs> best;
  for (const auto& r : census.reports) {
    if (r.place.is_archimedean() || !r.bad) continue;
    LogAbs cand(r.place.prime(), *r.rho);
    if (!best || compare(cand, *best) > 0) best = cand;
  }
  const bool finite_big = compare(*best, LogAbs(Prime(2), Rational(2))) >= 0;

  // Archimedean R = C_d |a_d|^{1/(d-1)} r'. Exact for z^2 + c with c < 0.
  Rational c;
  const bool exact_arch = phi.is_quadratic_family(&c) && c < 0;
  const Real lead_scale =
      exp(log(Real(Rational(abs(phi.leading())))) / Real(d - 1));
  const Real arch_R = C_of(d) * lead_scale * Real(reduction::arch_disk_radius(phi), Rounding::Up);
  const Real best_R = exp(log(Real(best->base.value())) * Real(best->exponent));

  if (finite_big && arch_R <= best_R) {
    out.proof_case = 1;
    out.case1_certified = true;
    out.witness = best->base.value().get_str();
    out.note = "largest normalized radius at a finite bad prime, R >= 4";
  } else if (exact_arch && [&] {
               // Lower bound for (1 + sqrt(1 - 4c))/2; C_2 = 1 and a_d = 1.
               const Real beta_low = (Real(1) + sqrt(Real(Rational(1 - 4 * c)), Rounding::Down)) / Real(2);
               return beta_low >= best_R && beta_low >= case1_threshold(d).arch_CR;
             }()) {
    out.proof_case = 1;
    out.case1_certified = true;
    out.witness = "inf";
    out.note = "largest normalized radius at the archimedean place, C_d r >= 4";
  } else {
    out.note = finite_big ? "archimedean radius not determined exactly"
                          : "no place reaches the main-case radius threshold";
  }
  return out;
}

}  // namespace ppb::bound
