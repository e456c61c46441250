#pragma once

// Complete enumeration of the rational preperiodic points of phi in Q[z].
//
// Soundness of the candidate box. At a finite prime p let
//   L_p = max( v_p(a_d)/(d-1), max_{i<d} (v_p(a_d) - v_p(a_i))/(d-i) ),
// the log_p of the non-archimedean escape radius. If v_p(x) < -L_p then the
// a_d x^d term strictly dominates every other term, so
//   |phi(x)|_p = |a_d|_p |x|_p^d > |x|_p,
// and by induction |phi^n(x)|_p increases strictly: x is not preperiodic.
// At primes where phi has plain good reduction L_p <= 0, so preperiodic
// points are p-integral there. The archimedean bound B comes from
// reduction::arch_escape_radius. Hence every preperiodic x satisfies
//   |x| <= B,  v_p(x) >= -floor(L_p) at candidate primes,  v_p(x) >= 0 elsewhere,
// and so does every iterate of x. The box is finite, so iterating a box point
// either leaves the box (a proof of escape) or revisits a point.

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "ppb/arith.hpp"
#include "ppb/poly.hpp"

namespace ppb::preperiodic {

struct CandidateBox {
  Rational arch_bound;
  std::map<Integer, long> prime_caps;  // prime -> e_p >= 0, meaning v_p(x) >= -e_p

  /// First violated constraint (archimedean checked first), or nullopt.
  /// A denominator prime outside prime_caps is reported as that prime.
  std::optional<Place> violation(const Rational& x) const;
  bool contains(const Rational& x) const { return !violation(x).has_value(); }

  /// All admissible denominators, ascending.
  std::vector<Integer> denominators() const;
  /// Number of u/w candidates scanned by the enumerator (before gcd filtering).
  Integer candidate_count() const;
};

struct Preperiodic {
  long tail;    // m: steps before entering the cycle
  long period;  // n - m: minimal cycle length
};

struct EscapesBox {
  long step;  // index of the first iterate outside the box
  Place place;
};

struct OrbitResult {
  std::variant<Preperiodic, EscapesBox> kind;
  bool is_preperiodic() const { return std::holds_alternative<Preperiodic>(kind); }
};

struct PrePoint {
  Rational x;
  long tail;
  long period;
  friend bool operator==(const PrePoint&, const PrePoint&) = default;
};

struct PreperiodicSet {
  std::vector<PrePoint> finite_points;  // sorted by value
  bool includes_infinity = true;

  std::size_t finite_count() const { return finite_points.size(); }
  std::size_t total() const { return finite_points.size() + 1; }
  std::vector<Rational> values() const;
};

enum class Execution { Serial, Parallel };

inline constexpr std::uint64_t kDefaultCandidateLimit = 100'000'000;

struct EnumerateOptions {
  std::uint64_t candidate_limit = kDefaultCandidateLimit;
  Execution execution = Execution::Parallel;
};

CandidateBox build_box(const Polynomial& phi);

/// Iterates phi from x until a revisit or until an iterate leaves the box.
/// Throws ArgumentError if x itself is outside the box.
OrbitResult classify_orbit(const Polynomial& phi, const Rational& x, const CandidateBox& box);

/// Every rational preperiodic point of phi. Throws SizeGuardError when the
/// box holds more than options.candidate_limit candidates.
PreperiodicSet enumerate_preperiodic(const Polynomial& phi, const EnumerateOptions& options = {});

/// c = j/den^2 for integers j with min <= c <= max (both ends inclusive).
struct ScanRange {
  long den;
  Rational min;
  Rational max;
};

struct ScanRow {
  Rational c;
  std::size_t finite_count;
};

/// Runs enumerate_preperiodic(z^2 + c) for every c in range, ascending in c.
/// Parallel execution fans out across c values.
std::vector<ScanRow> scan_quadratic(const ScanRange& range, const EnumerateOptions& options = {});

}  // namespace ppb::preperiodic
