#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

// Truncated power series: the coefficient prefix a_0..a_N of a function
// analytic on the unit disk. Coefficients beyond the order are unknown, not
// zero; anything that needs them must bound tails from the tags below.
//
// Tags are claims about the underlying function, not about the prefix:
//   bounded-by-one  sup |f| <= 1 on the disk (so sum |a_n|^2 <= 1)
//   schwarz         bounded-by-one and f(0) = 0
// Setting a tag validates the necessary condition visible in the prefix.
class PowerSeries {
 public:
  PowerSeries() : coeffs_(1, Complex{0.0, 0.0}) {}
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(Complex c, std::size_t order);
  static PowerSeries identity(std::size_t order);          // z
  static PowerSeries geometric_series(std::size_t order);  // 1 + z + z^2 + ...

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(std::size_t n) const;  // throws beyond the stored prefix

  bool bounded_by_one() const { return bounded_by_one_; }
  bool schwarz() const { return schwarz_; }
  void set_bounded_by_one();
  void set_schwarz();

  std::string to_json() const;
  static PowerSeries from_json(const std::string& text);

 private:
  std::vector<Complex> coeffs_;
  bool bounded_by_one_ = false;
  bool schwarz_ = false;
};

// Coefficientwise sum; result order is the shorter operand's. Untagged.
PowerSeries add(const PowerSeries& f, const PowerSeries& g);

// Truncated Cauchy product; result order is the shorter operand's. The
// convolution is accumulated symmetrically so the operation commutes exactly
// in floating point. Tag propagation: bounded x bounded stays bounded, and
// the product is schwarz when bounded and either factor is.
PowerSeries cauchy_product(const PowerSeries& f, const PowerSeries& g);

// g(omega(z)) for omega tagged schwarz (omega(0) = 0 makes the coefficient
// triangularity exact: prefix coefficients of the result are exact).
PowerSeries compose(const PowerSeries& g, const PowerSeries& omega);

// Coefficients (n+1) a_{n+1}; order drops by one. Untagged.
PowerSeries derivative(const PowerSeries& f);

// Antiderivative vanishing at 0; order grows by one. Untagged.
PowerSeries integrate(const PowerSeries& f);

// z * f(z), dropping the top coefficient so the order is preserved. Schwarz
// whenever f is bounded-by-one.
PowerSeries shift_up(const PowerSeries& f);

// (a - z)/(1 - a z) for real a in [0,1): a_0 = a, a_n = -(1-a^2) a^(n-1).
PowerSeries mobius(double a, std::size_t order);

// rotation * prod_i (z_i - z)/(1 - conj(z_i) z), |z_i| < 1, |rotation| = 1,
// expanded by repeated Cauchy products of the closed-form factor series.
PowerSeries blaschke(const std::vector<Complex>& zeros, Complex rotation, std::size_t order);

// Horner evaluation of the stored prefix.
Complex eval_at(const PowerSeries& f, Complex z);

}  // namespace bohr
