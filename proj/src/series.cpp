#include "bohr/series.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace bohr {

namespace {

void check_finite(const std::vector<Complex>& c) {
  for (const auto& v : c) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("series coefficients must be finite");
    }
  }
}

double prefix_energy(const std::vector<Complex>& c) {
  double acc = 0.0;
  for (const auto& v : c) acc += std::norm(v);
  return acc;
}

// Truncated convolution with symmetric pair accumulation: term m and term
// n-m are added together, so swapping the operands reproduces the exact same
// float operations and cauchy_product commutes bitwise.
std::vector<Complex> convolve(const std::vector<Complex>& a, const std::vector<Complex>& b,
                              std::size_t len) {
  std::vector<Complex> out(len);
  for (std::size_t n = 0; n < len; ++n) {
    Complex acc{0.0, 0.0};
    std::size_t m = 0;
    std::size_t k = n;
    for (; m < k; ++m, --k) acc += a[m] * b[k] + a[k] * b[m];
    if (m == k) acc += a[m] * b[m];
    out[n] = acc;
  }
  return out;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  check_finite(coeffs_);
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Complex>(order + 1, Complex{0.0, 0.0}));
}

PowerSeries PowerSeries::constant(Complex c, std::size_t order) {
  std::vector<Complex> v(order + 1, Complex{0.0, 0.0});
  v[0] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::identity(std::size_t order) {
  std::vector<Complex> v(order + 1, Complex{0.0, 0.0});
  if (order >= 1) v[1] = Complex{1.0, 0.0};
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::geometric_series(std::size_t order) {
  return PowerSeries(std::vector<Complex>(order + 1, Complex{1.0, 0.0}));
}

Complex PowerSeries::coeff(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw std::out_of_range("coefficient beyond the stored prefix is unknown");
  }
  return coeffs_[n];
}

void PowerSeries::set_bounded_by_one() {
  if (prefix_energy(coeffs_) > 1.0 + 1e-9) {
    throw std::invalid_argument("bounded-by-one claim contradicts the prefix: sum |a_n|^2 > 1");
  }
  bounded_by_one_ = true;
}

void PowerSeries::set_schwarz() {
  if (coeffs_[0] != Complex{0.0, 0.0}) {
    throw std::invalid_argument("schwarz claim needs a_0 = 0");
  }
  set_bounded_by_one();
  schwarz_ = true;
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
  std::size_t n = std::min(f.order(), g.order());
  std::vector<Complex> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = f.coeffs()[k] + g.coeffs()[k];
  return PowerSeries(std::move(out));
}

PowerSeries cauchy_product(const PowerSeries& f, const PowerSeries& g) {
  std::size_t len = std::min(f.order(), g.order()) + 1;
  PowerSeries out(convolve(f.coeffs(), g.coeffs(), len));
  if (f.bounded_by_one() && g.bounded_by_one()) {
    out.set_bounded_by_one();
    if (f.schwarz() || g.schwarz()) out.set_schwarz();
  }
  return out;
}

PowerSeries compose(const PowerSeries& g, const PowerSeries& omega) {
  if (!omega.schwarz()) {
    throw std::invalid_argument("composition requires a schwarz inner function");
  }
  std::size_t N = std::min(g.order(), omega.order());
  const auto& gc = g.coeffs();
  const auto& wc = omega.coeffs();

  std::vector<Complex> out(N + 1, Complex{0.0, 0.0});
  out[0] = gc[0];
  if (N == 0) return PowerSeries(std::move(out));

  // Power accumulation. pw = omega^k has zero coefficients below index k, so
  // each update touches only indices k..N and prefix coefficients are exact.
  std::vector<Complex> pw(wc.begin(), wc.begin() + N + 1);
  std::vector<Complex> next(N + 1);
  for (std::size_t k = 1; k <= N; ++k) {
    if (k > 1) {
      for (std::size_t n = 0; n < k; ++n) next[n] = Complex{0.0, 0.0};
      for (std::size_t n = k; n <= N; ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = k - 1; i < n; ++i) acc += pw[i] * wc[n - i];
        next[n] = acc;
      }
      pw.swap(next);
    }
    Complex gk = gc[k];
    if (gk != Complex{0.0, 0.0}) {
      for (std::size_t n = k; n <= N; ++n) out[n] += gk * pw[n];
    }
  }
  PowerSeries result(std::move(out));
  if (g.bounded_by_one()) {
    result.set_bounded_by_one();
    if (g.schwarz()) result.set_schwarz();
  }
  return result;
}

PowerSeries derivative(const PowerSeries& f) {
  if (f.order() == 0) return PowerSeries::zero(0);
  std::vector<Complex> out(f.order());
  for (std::size_t n = 0; n + 1 <= f.order(); ++n) {
    out[n] = static_cast<double>(n + 1) * f.coeffs()[n + 1];
  }
  return PowerSeries(std::move(out));
}

PowerSeries integrate(const PowerSeries& f) {
  std::vector<Complex> out(f.order() + 2, Complex{0.0, 0.0});
  for (std::size_t n = 0; n <= f.order(); ++n) {
    out[n + 1] = f.coeffs()[n] / static_cast<double>(n + 1);
  }
  return PowerSeries(std::move(out));
}

PowerSeries shift_up(const PowerSeries& f) {
  std::vector<Complex> out(f.order() + 1, Complex{0.0, 0.0});
  for (std::size_t n = 1; n <= f.order(); ++n) out[n] = f.coeffs()[n - 1];
  PowerSeries result(std::move(out));
  if (f.bounded_by_one()) result.set_schwarz();
  return result;
}

PowerSeries mobius(double a, std::size_t order) {
  if (!(a >= 0.0) || !(a < 1.0)) {
    throw std::invalid_argument("mobius parameter must lie in [0,1)");
  }
  std::vector<Complex> out(order + 1);
  out[0] = Complex{a, 0.0};
  double c = -(1.0 - a * a);
  double p = 1.0;  // a^(n-1)
  for (std::size_t n = 1; n <= order; ++n) {
    out[n] = Complex{c * p, 0.0};
    p *= a;
  }
  PowerSeries f(std::move(out));
  f.set_bounded_by_one();
  return f;
}

PowerSeries blaschke(const std::vector<Complex>& zeros, Complex rotation, std::size_t order) {
  double rho = std::abs(rotation);
  if (!(std::abs(rho - 1.0) <= 1e-9)) {
    throw std::invalid_argument("blaschke rotation must be unimodular");
  }
  rotation /= rho;
  for (const auto& c : zeros) {
    if (!(std::abs(c) < 1.0)) {
      throw std::invalid_argument("blaschke zeros must lie inside the unit disk");
    }
  }

  std::vector<Complex> acc(order + 1, Complex{0.0, 0.0});
  acc[0] = rotation;
  std::vector<Complex> factor(order + 1);
  for (const auto& c : zeros) {
    // (c - z)/(1 - conj(c) z) = c - (1 - |c|^2) sum_{n>=1} conj(c)^(n-1) z^n.
    factor[0] = c;
    Complex cc = std::conj(c);
    Complex p{1.0, 0.0};
    double w = -(1.0 - std::norm(c));
    for (std::size_t n = 1; n <= order; ++n) {
      factor[n] = w * p;
      p *= cc;
    }
    acc = convolve(acc, factor, order + 1);
  }
  PowerSeries f(std::move(acc));
  f.set_bounded_by_one();
  if (order >= 1 && f.coeffs()[0] == Complex{0.0, 0.0}) {
    // Zero constant term happens exactly when some zero sits at the origin.
    f.set_schwarz();
  }
  return f;
}

Complex eval_at(const PowerSeries& f, Complex z) {
  const auto& c = f.coeffs();
  Complex acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

std::string PowerSeries::to_json() const {
  nlohmann::json j;
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back({c.real(), c.imag()});
  j["coeffs"] = std::move(arr);
  auto tags = nlohmann::json::array();
  if (bounded_by_one_) tags.push_back("bounded-by-one");
  if (schwarz_) tags.push_back("schwarz");
  j["tags"] = std::move(tags);
  return j.dump();
}

PowerSeries PowerSeries::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad coefficient file: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array() ||
        j.at("coeffs").empty()) {
      throw std::invalid_argument("coefficient file needs a nonempty \"coeffs\" array");
    }
    std::vector<Complex> coeffs;
    coeffs.reserve(j.at("coeffs").size());
    for (const auto& e : j.at("coeffs")) {
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("each coefficient must be a [re, im] pair");
      }
      coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    PowerSeries f(std::move(coeffs));
    if (j.contains("tags")) {
      bool bounded = false;
      bool schwarz = false;
      for (const auto& t : j.at("tags")) {
        std::string tag = t.get<std::string>();
        if (tag == "bounded-by-one") {
          bounded = true;
        } else if (tag == "schwarz") {
          schwarz = true;
        } else {
          throw std::invalid_argument("unknown series tag: " + tag);
        }
      }
      if (schwarz) {
        f.set_schwarz();
      } else if (bounded) {
        f.set_bounded_by_one();
      }
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad coefficient file: ") + e.what());
  }
}

}  // namespace bohr
