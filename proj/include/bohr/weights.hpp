#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bohr {

// A weight sequence phi = {phi_k(r)}_{k>=0}: every phi_k is nonnegative and
// continuous on [0,1), and sum_k phi_k(r) converges locally uniformly there.
// Built-in kinds:
//   geometric             phi_k(r) = r^k
//   power(alpha)          phi_0 = 1, phi_k(r) = (k+1)^alpha r^k
//   truncated_geometric(n) phi_k(r) = r^k for k <= n, 0 beyond
//   custom(b, cap)        phi_k(r) = b_k r^k on the supplied prefix, 0 beyond;
//                         cap <= 1 declares limsup b_k^(1/k) <= 1
enum class WeightKind { geometric, power, truncated_geometric, custom };

// Value of a convergent sum together with a rigorous bound on the
// truncation-plus-rounding error of its evaluation.
struct TailValue {
  double value = 0.0;
  double bound = 0.0;
};

// One failed grid comparison: lhs > rhs + tolerance at indices (i, j) and
// radius r. The decreasing check reports j = i + 1.
struct GridViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  double r = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct GridCheckReport {
  bool ok = true;
  std::vector<GridViolation> violations;  // capped; first failures win
};

class WeightSequence {
 public:
  static WeightSequence geometric();
  static WeightSequence power(double alpha);
  static WeightSequence truncated_geometric(std::size_t n);
  static WeightSequence custom(std::vector<double> b, double growth_cap = 1.0);

  WeightKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::size_t cutoff() const { return cutoff_; }
  const std::vector<double>& prefix() const { return b_; }

  // phi_k(r). Requires r in [0,1).
  double weight_at(std::size_t k, double r) const;
  double phi0(double r) const { return weight_at(0, r); }

  // phi_0(r)..phi_kmax(r) in one running-power pass.
  std::vector<double> profile(double r, std::size_t kmax) const;

  // Phi_N(r) = sum_{k>=N} phi_k(r). Closed forms where available, otherwise
  // direct summation with a geometric-comparison stopping rule.
  TailValue tail_sum(std::size_t N, double r) const;

  // sum_{n>=N} (n+1) phi_n(r): the series behind derivative-type bounds.
  TailValue tail_sum_linear(std::size_t N, double r) const;

  // sum_{n>=N} phi_{2n}(r) for N >= 1: the even-index series.
  TailValue tail_sum_even(std::size_t N, double r) const;

  // Phi_{2n+1}(r) for n = 0..nmax, computed backward from one tail_sum call
  // so each entry is a sum of nonnegative terms (no cancellation). If bound
  // is non-null it receives one error bound valid for every entry.
  std::vector<double> odd_tail_profile(double r, std::size_t nmax,
                                       double* bound = nullptr) const;

  // phi_{m+n}(r) <= phi_m(r) phi_n(r) + 1e-15 over the grid, m,n <= max_index.
  GridCheckReport check_submultiplicative(std::span<const double> r_grid,
                                          std::size_t max_index) const;

  // phi_{k+1}(r) <= phi_k(r) + 1e-15 over the grid, 1 <= k < max_index.
  GridCheckReport check_decreasing(std::span<const double> r_grid,
                                   std::size_t max_index) const;

  // Descriptor round-trip, e.g. {"kind":"power","alpha":-1.0}.
  std::string to_json() const;
  static WeightSequence from_json(const std::string& text);

  // Short display name, e.g. "power(-1)".
  std::string describe() const;

 private:
  WeightSequence() = default;

  WeightKind kind_ = WeightKind::geometric;
  double alpha_ = 0.0;
  std::size_t cutoff_ = 0;
  std::vector<double> b_;
  double growth_cap_ = 1.0;
};

}  // namespace bohr
