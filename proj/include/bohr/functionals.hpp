#pragma once

#include <cstddef>
#include <vector>

#include "bohr/series.hpp"
#include "bohr/weights.hpp"

namespace bohr {

// Weighted coefficient functionals over truncated series. Every value is
// computed from the stored prefix and carries a rigorous bound on what the
// omitted coefficients could add, derived from the series' membership tags.
//
// Checking convention: an inequality lhs <= rhs passes when
// lhs.value + lhs.tail_bound stays below rhs; it is called violated only
// when lhs.value alone exceeds rhs, so claims are robust to truncation.
struct FunctionalValue {
  double value = 0.0;
  double tail_bound = 0.0;  // >= 0
};

// Quadratic coefficient weights psi_k (k >= 1) for the Goluzin-type sums
// sum |a_k|^2 psi_k(r). Each kind is decreasing in k exactly while r stays
// below r_psi():
//   norm        psi_k = r^(2k)        r_psi = 1
//   linear      psi_k = k r^(2k)      r_psi = 1/sqrt(2)
//   derivative  psi_k = k^2 r^(2k-2)  r_psi = 1/2
class QuadraticWeight {
 public:
  enum class Kind { norm, linear, derivative };

  static QuadraticWeight norm() { return QuadraticWeight(Kind::norm); }
  static QuadraticWeight linear() { return QuadraticWeight(Kind::linear); }
  static QuadraticWeight derivative() { return QuadraticWeight(Kind::derivative); }

  // Parses "norm" | "linear" | "derivative".
  static QuadraticWeight parse(const std::string& name);

  Kind kind() const { return kind_; }
  double r_psi() const;
  const char* name() const;

  // psi_k(r) for k >= 1, r in [0,1).
  double psi(std::size_t k, double r) const;

  // sum_{k>=M} psi_k(r) in closed form, M >= 1, r in [0,1).
  double tail(std::size_t M, double r) const;

 private:
  explicit QuadraticWeight(Kind kind) : kind_(kind) {}
  Kind kind_;
};

// sum_{n=N}^{order} |a_n| phi_n(r), tail bounded via |a_n| <= 1. The series
// must be tagged bounded-by-one; without the tag no tail bound exists.
FunctionalValue majorant(const PowerSeries& f, const WeightSequence& w,
                         std::size_t N, double r);

// sum_{n>=1} |a_n|^2 (phi_{2n}(r)/(1+|a_0|) + Phi_{2n+1}(r)): the quadratic
// remainder that sharpens the plain majorant.
FunctionalValue refined_remainder(const PowerSeries& f, const WeightSequence& w,
                                  double r);

// sum_{n>=1} |a_n|^2 r^(2n), the squared weighted norm of f - f(0).
FunctionalValue norm_sq(const PowerSeries& f, double r);

// |a_0|^p phi_0(r) + sum_{n>=1} |a_n| phi_n(r), p in (0,2].
FunctionalValue bohr_functional(const PowerSeries& f, const WeightSequence& w,
                                double p, double r);

// bohr_functional plus refined_remainder: the sharpened left-hand side whose
// bound by phi_0(r) holds up to the weighted radius.
FunctionalValue refined_functional(const PowerSeries& f, const WeightSequence& w,
                                   double p, double r);

// sum_{n>=0} (n+1) |a_{n+1}| phi_n(r): the majorant of f'. Requires the
// schwarz tag (f bounded with f(0) = 0).
FunctionalValue derivative_majorant(const PowerSeries& f, const WeightSequence& w,
                                    double r);

// sum_{k>=1} |a_k|^2 psi_k(r) for r < r_psi. The coefficients must satisfy
// |a_k| <= 1 termwise; the visible prefix is checked and the tail bound
// assumes the same for the unseen coefficients (no tag required: the
// hypothesis is weaker than unit-ball membership).
FunctionalValue quadratic_weighted_sum(const PowerSeries& f,
                                       const QuadraticWeight& psi, double r);

// a_0^p + sum_{n>=1} |a_n| phi_n(r) + sum_{n>=1} |b_n| phi_n(r) for an
// analytic pair (h, g) with Re h <= 1, h(0) = a_0 real in (0,1], and
// |g'| <= k |h'| for some k <= 1. Tails use the Caratheodory estimate
// |a_n| <= 2(1-a_0) and its consequence |b_n| <= 2(1-a_0) sqrt(n); the
// visible prefix is checked against both. p in (0,1].
FunctionalValue harmonic_functional(const PowerSeries& h, const PowerSeries& g,
                                    const WeightSequence& w, double p, double r);

// Slack in the coefficient bounds satisfied by the unit ball:
//   odd[n]  = 1 - sum_{k<=n} |a_k|^2                          - |a_{2n+1}|
//   even[n-1] = 1 - sum_{k<=n-1} |a_k|^2 - |a_n|^2/(1+|a_0|)  - |a_{2n}|
// for n = 0..n_max resp. 1..n_max; both are >= 0 for bounded functions.
struct CarlsonResiduals {
  std::vector<double> odd;
  std::vector<double> even;
};

CarlsonResiduals carlson_residuals(const PowerSeries& f, std::size_t n_max);

// Sharp majorant ceiling for the unit ball on the classical-to-boundary
// range: (3 - sqrt(8(1-r^2)))/r on [1/3, 1/sqrt(2)], 1/sqrt(1-r^2) beyond.
double bombieri_bound(double r);

// max over `samples` equispaced points z on |z| = r of |sum_{k<=n} a_k z^k|.
double partial_sum_sup(const PowerSeries& f, std::size_t n, double r,
                       std::size_t samples);

}  // namespace bohr
