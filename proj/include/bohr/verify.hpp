#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/series.hpp"
#include "bohr/weights.hpp"

namespace bohr {

// Truncation order used for all sampled series; reported violations are
// reconfirmed at twice this order before they are believed.
inline constexpr std::size_t kDefaultOrder = 256;

// Constructive families of disk functions. Single members are drawn from
// blaschke / mobius / schwarz; the pair and triple families assemble the
// hypothesis structure of the comparison checks:
//   subordinate_pair  f = g(omega(z)), omega schwarz
//   quasi_sub_triple  f = W(z) * g(omega(z)), W bounded, omega schwarz
//   harmonic_pair     h with Re h <= 1, h(0) = a0 in (0,1), plus g with
//                     g' = k * s * h' for a schwarz factor s
//   majorized_pair    g(0) = 0 and f = h(z) * g(z) with h bounded, so
//                     |f| <= |g| pointwise and f(0) = 0
//   odd_pair          g odd and bounded, f = t(z^2) * g(z) with t bounded,
//                     so f is odd and |f| <= |g|
enum class Family {
  blaschke,
  mobius,
  schwarz,
  subordinate_pair,
  quasi_sub_triple,
  harmonic_pair,
  majorized_pair,
  odd_pair,
};

std::string family_name(Family family);

// Everything gen needs to rebuild a sample bit-for-bit: parameters are drawn
// from the seed before any series is expanded, so the same spec reproduces
// the same coefficient prefix at any truncation order.
struct TestFunctionSpec {
  Family family = Family::blaschke;
  std::uint64_t seed = 0;
  std::size_t degree = 4;   // Blaschke zeros drawn per factor, at most 8
  std::optional<double> a;  // mobius parameter override; drawn when absent
  double a0 = 0.5;          // harmonic_pair: h(0), must lie in (0,1)
  double k = 1.0;           // harmonic_pair: derivative ratio, in [0,1]
};

// Expand the sample. Result layout per family:
//   blaschke / mobius / schwarz -> {f}
//   subordinate_pair            -> {f, g}
//   quasi_sub_triple            -> {f, g, W}
//   harmonic_pair               -> {h, g}
//   majorized_pair              -> {f, g}
//   odd_pair                    -> {f, g}
// Every series carries the tags its construction guarantees.
std::vector<PowerSeries> gen(const TestFunctionSpec& spec, std::size_t order);

struct ViolationRecord {
  TestFunctionSpec spec;
  double r = 0.0;  // grid radius; 0 for checks indexed by something else
  double lhs = 0.0;
  double rhs = 0.0;
};

struct WitnessRecord {
  double a = 0.0;
  double r = 0.0;
  double value = 0.0;
};

// Outcome of one check. An inequality lhs <= rhs is recorded as violated
// only when lhs.value alone exceeds rhs.value + rhs.tail_bound by more than
// 1e-9, and every such hit is recomputed at doubled order; if the excess
// does not survive, the check aborts with a tooling error instead of
// reporting noise. max_lhs_minus_rhs tracks the largest such excess over
// all evaluations (-infinity when nothing was evaluated; serialized null).
struct VerificationReport {
  std::string check;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t order = kDefaultOrder;
  std::vector<double> grid;
  double max_lhs_minus_rhs = 0.0;
  std::vector<ViolationRecord> violations;
  std::vector<WitnessRecord> witnesses;
  bool skipped = false;
  std::string skip_reason;

  bool passed() const { return !skipped && violations.empty(); }

  // Stable serialization: keys sorted, identical runs give identical bytes.
  std::string to_json() const;
};

// Weighted head-plus-remainder inequality against phi_0(r) on a 64-point
// grid of [0, R], R the general-equation radius for (w, p); every sample is
// a bounded function drawn from the three single-member families in
// rotation. No radius -> skipped report.
VerificationReport check_refined_bohr(const WeightSequence& w, double p,
                                      std::size_t samples, std::uint64_t seed);

// Optimality probe: scans a in {0.9, 0.99, 0.999, 0.9999} and r on a
// 64-point grid of (R, R + eps], recording every (a, r) where the mobius
// functional minus its tail exceeds phi_0(r) + 1e-12. Finding no witness is
// a reported outcome, not an error. No radius -> skipped report.
VerificationReport probe_sharpness(const WeightSequence& w, double p, double eps);

// Majorant comparison under quasi-subordination triples on [0, R] with R
// from 1 = 2 * sum_{n>=1} phi_n(x). Requires phi_0 identically 1 and
// submultiplicative weights; either failing -> skipped report.
VerificationReport check_quasi_majorant(const WeightSequence& w,
                                        std::size_t samples, std::uint64_t seed);

// Weight rule for the quadratic correction term of check_weighted_quasi:
// a constant, or 1/(1 + |a_0|) + sum_{n>=1} phi_n(r) with a_0 taken from
// the dominated function of the pair.
struct LambdaMode {
  enum class Kind { constant, carlson };
  Kind kind = Kind::constant;
  double c = 1.0;

  static LambdaMode constant(double value);
  static LambdaMode carlson();
};

// Majorant-plus-quadratic comparison over subordinate pairs on
// [0, min(R, r_psi)). Hypotheses as in check_quasi_majorant plus a
// decreasing psi. Subordination proper is required: the quadratic term
// fails under mere quasi-subordination because the constant terms need
// not match (counterexample in the functional tests).
VerificationReport check_weighted_quasi(const WeightSequence& w,
                                        const QuadraticWeight& psi,
                                        const LambdaMode& lambda,
                                        std::size_t samples, std::uint64_t seed);

// Quadratic coefficient comparison for subordinate pairs on a 64-point grid
// of [0, min(0.95, r_psi - 1e-3)], plus the underlying partial-sum
// comparison sum_{k<=n} |a_k|^2 <= sum_{k<=n} |b_k|^2 for n <= 32 (recorded
// with r = 0 on failure).
VerificationReport check_goluzin(const QuadraticWeight& psi, std::size_t samples,
                                 std::uint64_t seed);

// Bounded-real-part pair inequality on [0, R] with R the harmonic radius
// for k = (K-1)/(K+1). Non-decreasing weights or no radius -> skipped.
VerificationReport check_harmonic(const WeightSequence& w, double p, double K,
                                  std::size_t samples, std::uint64_t seed);

// Derivative majorant against phi_0 for origin-fixing samples on [0, R0],
// plus a built-in optimality probe with z(a - z)/(1 - a z) on
// (R0, R0 + 0.05]. No radius -> skipped.
VerificationReport check_derivative_bohr(const WeightSequence& w,
                                         std::size_t samples, std::uint64_t seed);

enum class MajorizationMode {
  subordination,  // subordinate_pair samples, compared on [0, min(R, R0)]
  modulus,        // majorized_pair samples, compared on [0, R0]
};

// Derivative-majorant comparison between pair members: the weighted sum
// sum (n+1) |a_{n+1}| phi_n(r) of f against the same sum for g. Requires
// phi_0 identically 1 and submultiplicative weights.
VerificationReport check_derivative_majorization(const WeightSequence& w,
                                                 MajorizationMode mode,
                                                 std::size_t samples,
                                                 std::uint64_t seed);

// Majorant comparison for odd pairs on [0, R] with R the odd radius.
// No radius -> skipped.
VerificationReport check_odd_majorant(const WeightSequence& w,
                                      std::size_t samples, std::uint64_t seed);

// Geometric majorant against the closed-form upper bound on a 64-point
// grid of [1/3, 0.95].
VerificationReport check_bombieri(std::size_t samples, std::uint64_t seed);

// Coefficient residuals of sampled Blaschke products (degree cycling 1..8):
// a sample violates when any residual drops below -1e-12, a stricter floor
// than the inequality checks use; max_lhs_minus_rhs records the worst
// negated residual.
VerificationReport check_carlson(std::size_t samples, std::uint64_t seed);

// Re-solves the truncated-equation roots for the requested p in {1, 2} and
// diffs them against the embedded reference values (tolerance 1e-6);
// violations carry the row index n in the r slot.
VerificationReport check_reference_table(double p);

}  // namespace bohr
