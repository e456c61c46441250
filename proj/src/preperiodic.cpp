#include "ppb/preperiodic.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include "ppb/reduction.hpp"

namespace ppb::preperiodic {

std::optional<Place> CandidateBox::violation(const Rational& x) const {
  if (abs(x) > arch_bound) return Place::archimedean();
  Integer rest = x.get_den();
  for (const auto& [p, cap] : prime_caps) {
    Integer stripped;
    const auto e = mpz_remove(stripped.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (static_cast<long>(e) > cap) return Place::finite(Prime(p));
    rest = stripped;
  }
  if (rest != 1) return Place::finite(Prime(prime_divisors(rest).front()));
  return std::nullopt;
}

std::vector<Integer> CandidateBox::denominators() const {
  std::vector<Integer> dens{Integer(1)};
  for (const auto& [p, cap] : prime_caps) {
    std::vector<Integer> next;
    for (const auto& w : dens) {
      Integer pw = w;
      for (long e = 0; e <= cap; ++e, pw *= p) next.push_back(pw);
    }
    dens = std::move(next);
  }
  std::sort(dens.begin(), dens.end());
  return dens;
}

namespace {

Integer numerator_bound(const Rational& arch_bound, const Integer& w) {
  Integer u;
  const Rational scaled = arch_bound * w;
  mpz_fdiv_q(u.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return u;
}

}  // namespace

Integer CandidateBox::candidate_count() const {
  Integer total = 0;
  for (const auto& w : denominators()) total += 2 * numerator_bound(arch_bound, w) + 1;
  return total;
}

std::vector<Rational> PreperiodicSet::values() const {
  std::vector<Rational> out;
  out.reserve(finite_points.size());
  for (const auto& p : finite_points) out.push_back(p.x);
  return out;
}

CandidateBox build_box(const Polynomial& phi) {
  CandidateBox box;
  box.arch_bound = reduction::arch_escape_radius(phi);
  const long d = phi.degree();
  for (const auto& p : reduction::candidate_primes(phi)) {
    const long vd = valuation_nonzero(phi.leading(), p);
    Rational L = make_rational(Integer(vd), Integer(d - 1));
    for (long i = 0; i < d; ++i) {
      const Rational a = phi.coeff(i);
      if (a == 0) continue;
      const Rational cand = make_rational(Integer(vd - valuation_nonzero(a, p)), Integer(d - i));
      if (cand > L) L = cand;
    }
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), L.get_num_mpz_t(), L.get_den_mpz_t());
    box.prime_caps[p.value()] = std::max(0L, fl.get_si());
  }
  return box;
}

OrbitResult classify_orbit(const Polynomial& phi, const Rational& x, const CandidateBox& box) {
  if (auto v = box.violation(x))
    throw ArgumentError("starting point " + x.get_str() + " lies outside the candidate box at " +
                        v->name());
  std::map<Rational, long> seen;
  Rational y = x;
  for (long step = 0;; ++step) {
    auto [it, inserted] = seen.emplace(y, step);
    if (!inserted) return OrbitResult{Preperiodic{it->second, step - it->second}};
    y = phi(y);
    if (auto v = box.violation(y)) return OrbitResult{EscapesBox{step + 1, *v}};
  }
}

namespace {

struct Chunk {
  Integer w;
  Integer lo;
  Integer hi;
};

constexpr long kChunkSize = 2048;

void run_chunk(const Polynomial& phi, const CandidateBox& box, const Chunk& c,
               std::vector<PrePoint>& out) {
  Integer g;
  for (Integer u = c.lo; u <= c.hi; ++u) {
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), c.w.get_mpz_t());
    if (g != 1) continue;
    const Rational x = make_rational(u, c.w);
    const OrbitResult r = classify_orbit(phi, x, box);
    if (const auto* pre = std::get_if<Preperiodic>(&r.kind))
      out.push_back(PrePoint{x, pre->tail, pre->period});
  }
}

// phi(S) is inside S and each reported cycle closes after exactly `period`
// steps from its tail.
void verify_set(const Polynomial& phi, const std::vector<PrePoint>& pts) {
  std::map<Rational, const PrePoint*> index;
  for (const auto& p : pts) index.emplace(p.x, &p);
  for (const auto& p : pts) {
    if (!index.count(phi(p.x))) throw InternalError("enumerated set is not forward invariant");
    Rational a = p.x;
    for (long i = 0; i < p.tail; ++i) a = phi(a);
    Rational b = a;
    for (long i = 0; i < p.period; ++i) b = phi(b);
    if (a != b) throw InternalError("reported cycle does not close");
  }
}

}  // namespace

PreperiodicSet enumerate_preperiodic(const Polynomial& phi, const EnumerateOptions& options) {
  const CandidateBox box = build_box(phi);
  const Integer count = box.candidate_count();
  if (count > Integer(std::to_string(options.candidate_limit)))
    throw SizeGuardError("candidate box holds " + count.get_str() + " candidates (limit " +
                         std::to_string(options.candidate_limit) + ")");

  std::vector<Chunk> chunks;
  for (const auto& w : box.denominators()) {
    const Integer U = numerator_bound(box.arch_bound, w);
    for (Integer lo = -U; lo <= U; lo += kChunkSize) {
      Integer hi = lo + (kChunkSize - 1);
      if (hi > U) hi = U;
      chunks.push_back({w, lo, hi});
    }
  }

  std::vector<std::vector<PrePoint>> found(chunks.size());
  const long n = static_cast<long>(chunks.size());
  if (options.execution == Execution::Parallel) {
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        run_chunk(phi, box, chunks[static_cast<std::size_t>(i)], found[static_cast<std::size_t>(i)]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (long i = 0; i < n; ++i)
      run_chunk(phi, box, chunks[static_cast<std::size_t>(i)], found[static_cast<std::size_t>(i)]);
  }

  PreperiodicSet set;
  for (auto& f : found)
    for (auto& p : f) set.finite_points.push_back(std::move(p));
  std::sort(set.finite_points.begin(), set.finite_points.end(),
            [](const PrePoint& a, const PrePoint& b) { return a.x < b.x; });
  verify_set(phi, set.finite_points);
  return set;
}

std::vector<ScanRow> scan_quadratic(const ScanRange& range, const EnumerateOptions& options) {
  if (range.den < 1) throw ArgumentError("scan denominator must be >= 1");
  const Integer den2 = Integer(range.den) * range.den;
  Integer jmin, jmax;
  const Rational lo = range.min * den2, hi = range.max * den2;
  mpz_cdiv_q(jmin.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_fdiv_q(jmax.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  if (jmax < jmin) return {};

  const long n = Integer(jmax - jmin + 1).get_si();
  std::vector<ScanRow> rows(static_cast<std::size_t>(n));
  EnumerateOptions inner = options;
  inner.execution = Execution::Serial;

  auto one = [&](long i) {
    const Rational c = make_rational(jmin + i, den2);
    const Polynomial phi(std::vector<Rational>{c, Rational(0), Rational(1)});
    rows[static_cast<std::size_t>(i)] = ScanRow{c, enumerate_preperiodic(phi, inner).finite_count()};
  };

  if (options.execution == Execution::Parallel) {
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        one(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (long i = 0; i < n; ++i) one(i);
  }
  return rows;
}

}  // namespace ppb::preperiodic
