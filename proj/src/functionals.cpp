#include "bohr/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

void require_unit_range(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("radius must lie in [0,1)");
}

void require_bounded(const PowerSeries& f, const char* what) {
  if (!f.bounded_by_one())
    throw capability_error(std::string(what) +
                           ": series lacks the bounded-by-one tag, so the "
                           "truncation tail cannot be bounded");
}

// Compensated accumulation; the sums here mix scales across hundreds of terms.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double total() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace

FunctionalValue majorant(const PowerSeries& f, const WeightSequence& w,
                         std::size_t N, double r) {
  require_unit_range(r);
  require_bounded(f, "majorant");
  const auto& c = f.coeffs();
  const std::size_t order = f.order();
  KahanSum acc;
  if (N <= order) {
    const std::vector<double> phi = w.profile(r, order);
    for (std::size_t n = N; n <= order; ++n) acc.add(std::abs(c[n]) * phi[n]);
  }
  const TailValue tail = w.tail_sum(std::max(N, order + 1), r);
  return {acc.total(), tail.value + tail.bound};
}

FunctionalValue refined_remainder(const PowerSeries& f, const WeightSequence& w,
                                  double r) {
  require_unit_range(r);
  require_bounded(f, "refined remainder");
  const auto& c = f.coeffs();
  const std::size_t order = f.order();
  const double denom = 1.0 + std::abs(c[0]);

  KahanSum acc;
  double sumsq = 0.0;
  double entry_bound = 0.0;
  if (order >= 1) {
    const std::vector<double> phi = w.profile(r, 2 * order);
    const std::vector<double> odd = w.odd_tail_profile(r, order, &entry_bound);
    for (std::size_t n = 1; n <= order; ++n) {
      const double sq = std::norm(c[n]);
      sumsq += sq;
      acc.add(sq * (phi[2 * n] / denom + odd[n]));
    }
  }

  // Omitted terms, via |a_n| <= 1: even-index tail over the divisor plus
  // sum_{n>order} Phi_{2n+1} <= (1/2) sum_{k>=2*order+3} (k+1) phi_k.
  const TailValue even_tail = w.tail_sum_even(order + 1, r);
  const TailValue lin_tail = w.tail_sum_linear(2 * order + 3, r);
  const double tail = (even_tail.value + even_tail.bound) / denom +
                      (lin_tail.value + lin_tail.bound) / 2.0 +
                      entry_bound * sumsq;
  return {acc.total(), tail};
}

FunctionalValue norm_sq(const PowerSeries& f, double r) {
  require_unit_range(r);
  require_bounded(f, "weighted norm");
  const auto& c = f.coeffs();
  const double x = r * r;
  double pw = 1.0;
  KahanSum acc;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    pw *= x;
    acc.add(std::norm(c[n]) * pw);
  }
  const double tail =
      std::pow(r, 2.0 * static_cast<double>(f.order() + 1)) / (1.0 - x);
  return {acc.total(), tail};
}

namespace {

void require_exponent(double p, double hi, const char* range) {
  if (!(p > 0.0 && p <= hi))
    throw std::domain_error(std::string("exponent p must lie in ") + range);
}

}  // namespace

FunctionalValue bohr_functional(const PowerSeries& f, const WeightSequence& w,
                                double p, double r) {
  require_exponent(p, 2.0, "(0,2]");
  require_unit_range(r);
  const FunctionalValue b1 = majorant(f, w, 1, r);
  // pow(0, p) = 0 for p > 0, which is the continuous-limit convention here.
  const double head = std::pow(std::abs(f.coeff(0)), p) * w.phi0(r);
  return {head + b1.value, b1.tail_bound};
}

FunctionalValue refined_functional(const PowerSeries& f, const WeightSequence& w,
                                   double p, double r) {
  const FunctionalValue plain = bohr_functional(f, w, p, r);
  const FunctionalValue rem = refined_remainder(f, w, r);
  return {plain.value + rem.value, plain.tail_bound + rem.tail_bound};
}

FunctionalValue derivative_majorant(const PowerSeries& f, const WeightSequence& w,
                                    double r) {
  require_unit_range(r);
  if (!f.schwarz())
    throw std::invalid_argument(
        "derivative majorant: series lacks the schwarz tag (bounded with "
        "f(0) = 0)");
  const auto& c = f.coeffs();
  const std::size_t order = f.order();
  KahanSum acc;
  if (order >= 1) {
    const std::vector<double> phi = w.profile(r, order - 1);
    for (std::size_t n = 0; n + 1 <= order; ++n)
      acc.add(static_cast<double>(n + 1) * std::abs(c[n + 1]) * phi[n]);
  }
  const TailValue tail = w.tail_sum_linear(order, r);
  return {acc.total(), tail.value + tail.bound};
}

QuadraticWeight QuadraticWeight::parse(const std::string& name) {
  if (name == "norm") return norm();
  if (name == "linear") return linear();
  if (name == "derivative") return derivative();
  throw std::invalid_argument("unknown quadratic weight: " + name);
}

double QuadraticWeight::r_psi() const {
  switch (kind_) {
    case Kind::norm:
      return 1.0;
    case Kind::linear:
      return std::sqrt(0.5);
    case Kind::derivative:
      return 0.5;
  }
  return 0.0;
}

const char* QuadraticWeight::name() const {
  switch (kind_) {
    case Kind::norm:
      return "norm";
    case Kind::linear:
      return "linear";
    case Kind::derivative:
      return "derivative";
  }
  return "";
}

double QuadraticWeight::psi(std::size_t k, double r) const {
  if (k == 0) throw std::invalid_argument("quadratic weights start at k = 1");
  require_unit_range(r);
  const double kk = static_cast<double>(k);
  switch (kind_) {
    case Kind::norm:
      return std::pow(r, 2.0 * kk);
    case Kind::linear:
      return kk * std::pow(r, 2.0 * kk);
    case Kind::derivative:
      return kk * kk * std::pow(r, 2.0 * kk - 2.0);
  }
  return 0.0;
}

double QuadraticWeight::tail(std::size_t M, double r) const {
  if (M == 0) throw std::invalid_argument("quadratic weights start at k = 1");
  require_unit_range(r);
  const double x = r * r;
  const double m = static_cast<double>(M);
  const double u = 1.0 - x;
  switch (kind_) {
    case Kind::norm:
      return std::pow(x, m) / u;
    case Kind::linear:
      return std::pow(x, m) * (m / u + x / (u * u));
    case Kind::derivative:
      return std::pow(x, m - 1.0) *
             (x * (1.0 + x) / (u * u * u) + 2.0 * m * x / (u * u) + m * m / u);
  }
  return 0.0;
}

FunctionalValue quadratic_weighted_sum(const PowerSeries& f,
                                       const QuadraticWeight& psi, double r) {
  if (!(r >= 0.0 && r < psi.r_psi()))
    throw std::domain_error(std::string("radius must lie in [0, r_psi) for the ") +
                            psi.name() + " weights");
  const auto& c = f.coeffs();
  for (const Complex& a : c) {
    if (std::abs(a) > 1.0 + 1e-9)
      throw std::invalid_argument(
          "quadratic sum: coefficients must satisfy |a_k| <= 1");
  }
  const double x = r * r;
  double pwm = 1.0;  // x^(k-1)
  KahanSum acc;
  for (std::size_t k = 1; k <= f.order(); ++k) {
    const double kk = static_cast<double>(k);
    double term = 0.0;
    switch (psi.kind()) {
      case QuadraticWeight::Kind::norm:
        term = pwm * x;
        break;
      case QuadraticWeight::Kind::linear:
        term = kk * pwm * x;
        break;
      case QuadraticWeight::Kind::derivative:
        term = kk * kk * pwm;
        break;
    }
    acc.add(std::norm(c[k]) * term);
    pwm *= x;
  }
  return {acc.total(), psi.tail(f.order() + 1, r)};
}

FunctionalValue harmonic_functional(const PowerSeries& h, const PowerSeries& g,
                                    const WeightSequence& w, double p, double r) {
  require_exponent(p, 1.0, "(0,1]");
  require_unit_range(r);
  const Complex head = h.coeff(0);
  if (head.imag() != 0.0 || !(head.real() > 0.0) || head.real() > 1.0)
    throw std::invalid_argument("h(0) must be real in (0,1]");
  const double a0 = head.real();
  const double cap = 2.0 * (1.0 - a0);

  const auto& hc = h.coeffs();
  const auto& gc = g.coeffs();
  for (std::size_t n = 1; n < hc.size(); ++n) {
    if (std::abs(hc[n]) > cap + 1e-9)
      throw std::invalid_argument(
          "h coefficients exceed the real-part bound 2(1 - a0)");
  }
  for (std::size_t n = 1; n < gc.size(); ++n) {
    if (std::abs(gc[n]) > cap * std::sqrt(static_cast<double>(n)) + 1e-9)
      throw std::invalid_argument(
          "g coefficients exceed the coupling bound 2(1 - a0) sqrt(n)");
  }

  const std::size_t kmax = std::max(h.order(), g.order());
  const std::vector<double> phi = w.profile(r, std::max<std::size_t>(kmax, 1));
  KahanSum acc;
  acc.add(std::pow(a0, p));
  for (std::size_t n = 1; n <= h.order(); ++n) acc.add(std::abs(hc[n]) * phi[n]);
  for (std::size_t n = 1; n <= g.order(); ++n) acc.add(std::abs(gc[n]) * phi[n]);

  const TailValue ht = w.tail_sum(h.order() + 1, r);
  const TailValue gt = w.tail_sum_linear(g.order() + 1, r);
  const double tail =
      cap * (ht.value + ht.bound) + cap * (gt.value + gt.bound);
  return {acc.total(), tail};
}

CarlsonResiduals carlson_residuals(const PowerSeries& f, std::size_t n_max) {
  require_bounded(f, "coefficient residuals");
  if (2 * n_max + 1 > f.order())
    throw capability_error(
        "coefficient residuals: series order is too small; need coefficients "
        "up to index 2*n_max + 1");
  const auto& c = f.coeffs();
  const double a0 = std::abs(c[0]);
  CarlsonResiduals out;
  out.odd.reserve(n_max + 1);
  out.even.reserve(n_max);
  double prefix = 0.0;  // sum_{k <= n-1} |a_k|^2 at the top of the loop
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n >= 1)
      out.even.push_back(1.0 - prefix - std::norm(c[n]) / (1.0 + a0) -
                         std::abs(c[2 * n]));
    prefix += std::norm(c[n]);
    out.odd.push_back(1.0 - prefix - std::abs(c[2 * n + 1]));
  }
  return out;
}

double bombieri_bound(double r) {
  if (!(r >= 1.0 / 3.0 && r < 1.0))
    throw std::domain_error(
        "the sharp majorant ceiling applies for r in [1/3, 1)");
  // Evaluated in extended precision so the single rounding to double is
  // correct: the left branch touches 1 tangentially at r = 1/3 and plain
  // double arithmetic lands a couple of ulp high there.
  const long double x = r;
  if (r <= std::sqrt(0.5)) {
    return static_cast<double>((3.0L - std::sqrt(8.0L * (1.0L - x * x))) / x);
  }
  return static_cast<double>(1.0L / std::sqrt(1.0L - x * x));
}

double partial_sum_sup(const PowerSeries& f, std::size_t n, double r,
                       std::size_t samples) {
  require_unit_range(r);
  if (n > f.order())
    throw std::invalid_argument("partial-sum degree exceeds the stored prefix");
  if (samples == 0) throw std::invalid_argument("need at least one sample point");
  const auto& c = f.coeffs();
  double best = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(samples);
    const Complex z = std::polar(r, theta);
    Complex s{0.0, 0.0};
    for (std::size_t k = n + 1; k-- > 0;) s = s * z + c[k];
    best = std::max(best, std::abs(s));
  }
  return best;
}

}  // namespace bohr
