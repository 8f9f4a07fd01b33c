#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "bohr/weights.hpp"

namespace bohr {

// Each radius is the minimal positive root of a scalar equation written as a
// residual G with G(0) > 0. The variants:
//   general            G(x) = p*phi_0(x) - 2*sum_{n>=1} phi_n(x)
//   truncated          G(x) = p*(1-x) - 2*x*(1-x^n), the general equation for
//                      truncated geometric weights with the 1/(1-x) pole
//                      cleared (same roots on (0,1))
//   power_alpha        G(x) = p/2 - sum_{n>=1} (n+1)^alpha x^n, except
//                      alpha = 2 which uses the quadratic-coefficient form
//                      G(x) = p*(1-x)^2 - 2*x*(3-x)
//   harmonic           G(x) = 1 - (2/p)*(1+k)*sum_{n>=1} phi_n(x)
//   schwarz_derivative G(x) = phi_0(x) - 2*sum_{n>=1} (n+1)*phi_n(x)
//   odd                G(x) = 1 - 2*sum_{n>=1} phi_{2n}(x)
enum class RadiusEquation {
  general,
  truncated,
  power_alpha,
  harmonic,
  schwarz_derivative,
  odd,
};

// Display name used by the CLI, e.g. "schwarz-derivative".
std::string equation_name(RadiusEquation equation);

class RadiusProblem {
 public:
  // p is the exponent of the |a_0|^p head term, restricted to (0,2].
  static RadiusProblem general(WeightSequence w, double p);

  // Minimal positive root of p*(1-x) = 2*x*(1-x^n), n >= 1.
  static RadiusProblem truncated(std::size_t n, double p);

  // Power weights phi_n = (n+1)^alpha r^n with the head scaled out.
  static RadiusProblem power(double alpha, double p);

  // Pair bound for bounded real part plus dilated derivative: p in (0,1],
  // dilation ratio k in [0,1]. The decreasing-weights hypothesis is checked
  // by radius_harmonic, not here.
  static RadiusProblem harmonic(WeightSequence w, double p, double k);

  // Derivative majorant of a function fixing the origin.
  static RadiusProblem schwarz_derivative(WeightSequence w);

  // Majorant comparison for odd functions: only even-index weights enter.
  static RadiusProblem odd(WeightSequence w);

  RadiusEquation equation() const { return equation_; }
  const WeightSequence& weights() const { return weights_; }
  double p() const { return p_; }
  double k() const { return k_; }
  std::size_t n() const { return n_; }
  double alpha() const { return alpha_; }

  // G(x) for x in [0,1). Positive before the sought root.
  double residual(double x) const;

  // Human-readable equation with parameters filled in.
  std::string describe() const;

 private:
  RadiusProblem() = default;

  RadiusEquation equation_ = RadiusEquation::general;
  WeightSequence weights_ = WeightSequence::geometric();
  double p_ = 1.0;
  double k_ = 0.0;
  std::size_t n_ = 1;
  double alpha_ = 0.0;
};

struct SolveOptions {
  double tol = 1e-12;        // final bracket width
  double step = 1.0 / 1024;  // scan step before bisection
};

// found == false means G stayed positive on the whole scan range: the
// underlying condition holds everywhere or fails everywhere, and there is
// nothing to report beyond that. crossing distinguishes a sign change from a
// residual that only touches zero; sharpness claims need crossing == true.
struct RadiusResult {
  bool found = false;
  double value = 0.0;
  double residual = 0.0;
  bool crossing = false;
};

// Scan x = j*step on (0, 1-1e-6] until G <= 0, then bisect. The returned
// value satisfies |G(value)| <= tol whenever the residual slope allows it
// (refinement continues past the tol bracket until the residual itself is
// below tol or the bracket hits floating-point resolution).
// Throws std::invalid_argument if G(0) <= 0 or the options are out of range.
RadiusResult solve(const RadiusProblem& problem, const SolveOptions& options = {});

// Closed form of the minimal positive root where one is known, e.g.
// p/(2+p) for the general equation with geometric weights. Returns nullopt
// when no closed form applies or the closed form lands outside (0, 1-1e-6).
std::optional<double> closed_form(const RadiusProblem& problem);

// Named conveniences: solve and return the root, throwing no_radius_error
// when there is no sign change.
double radius_general(const WeightSequence& w, double p,
                      const SolveOptions& options = {});
double radius_truncated(std::size_t n, double p,
                        const SolveOptions& options = {});
double radius_power(double alpha, double p, const SolveOptions& options = {});

// Additionally verifies that phi_1 >= phi_2 >= ... holds on a grid spanning
// (0, R] before returning R; throws std::invalid_argument otherwise.
double radius_harmonic(const WeightSequence& w, double p, double k,
                       const SolveOptions& options = {});
double radius_schwarz_derivative(const WeightSequence& w,
                                 const SolveOptions& options = {});
double radius_odd(const WeightSequence& w, const SolveOptions& options = {});

// Smallest entry of a nonempty list; combines a root with a validity radius
// such as 1/sqrt(2). Throws std::invalid_argument on an empty list.
double min_radius(std::span<const double> values);

// Reference values for the truncated-equation roots R_n(p), six decimals.
struct ReferenceRadius {
  std::size_t n = 0;
  double p = 0.0;
  double value = 0.0;
};

// The 28 published reference entries: p in {1, 2}, n in {2..10, 15, 20, 25,
// 30, 35}, ordered by p then n.
std::span<const ReferenceRadius> reference_truncated_radii();

}  // namespace bohr
