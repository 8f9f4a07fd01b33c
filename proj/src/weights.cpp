#include "bohr/weights.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bohr/errors.hpp"
#include "json.hpp"

namespace bohr {

namespace {

constexpr std::size_t kTermCap = 1000000;  // hard cap for direct summations

void require_radius(double r) {
  if (!(r >= 0.0) || !(r < 1.0)) {
    throw std::domain_error("weight argument r must lie in [0,1)");
  }
}

// (k+1)^alpha with a multiply-only path for small integer alpha.
double index_power(std::size_t k, double alpha) {
  double base = static_cast<double>(k + 1);
  double ri = std::rint(alpha);
  if (ri == alpha && std::abs(ri) <= 8.0) {
    double acc = 1.0;
    for (int i = 0; i < static_cast<int>(std::abs(ri)); ++i) acc *= base;
    return ri < 0.0 ? 1.0 / acc : acc;
  }
  return std::pow(base, alpha);
}

struct KahanSum {
  double acc = 0.0;
  double comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
};

}  // namespace

WeightSequence WeightSequence::geometric() {
  WeightSequence w;
  w.kind_ = WeightKind::geometric;
  return w;
}

WeightSequence WeightSequence::power(double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("power exponent must be finite");
  WeightSequence w;
  w.kind_ = WeightKind::power;
  w.alpha_ = alpha;
  return w;
}

WeightSequence WeightSequence::truncated_geometric(std::size_t n) {
  WeightSequence w;
  w.kind_ = WeightKind::truncated_geometric;
  w.cutoff_ = n;
  return w;
}

WeightSequence WeightSequence::custom(std::vector<double> b, double growth_cap) {
  if (b.empty()) throw std::invalid_argument("custom weights need a nonempty prefix");
  for (double v : b) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("custom weight entries must be finite and nonnegative");
    }
  }
  if (!std::isfinite(growth_cap) || growth_cap < 0.0 || growth_cap > 1.0 + 1e-12) {
    throw std::invalid_argument(
        "growth cap must lie in [0,1]: limsup b_k^(1/k) <= 1 is required for membership");
  }
  WeightSequence w;
  w.kind_ = WeightKind::custom;
  w.b_ = std::move(b);
  w.growth_cap_ = growth_cap;
  return w;
}

double WeightSequence::weight_at(std::size_t k, double r) const {
  require_radius(r);
  switch (kind_) {
    case WeightKind::geometric:
      return std::pow(r, static_cast<double>(k));
    case WeightKind::power:
      return index_power(k, alpha_) * std::pow(r, static_cast<double>(k));
    case WeightKind::truncated_geometric:
      return k <= cutoff_ ? std::pow(r, static_cast<double>(k)) : 0.0;
    case WeightKind::custom:
      return k < b_.size() ? b_[k] * std::pow(r, static_cast<double>(k)) : 0.0;
  }
  return 0.0;
}

std::vector<double> WeightSequence::profile(double r, std::size_t kmax) const {
  require_radius(r);
  std::vector<double> out(kmax + 1);
  double p = 1.0;  // r^k, running
  for (std::size_t k = 0; k <= kmax; ++k) {
    switch (kind_) {
      case WeightKind::geometric:
        out[k] = p;
        break;
      case WeightKind::power:
        out[k] = index_power(k, alpha_) * p;
        break;
      case WeightKind::truncated_geometric:
        out[k] = k <= cutoff_ ? p : 0.0;
        break;
      case WeightKind::custom:
        out[k] = k < b_.size() ? b_[k] * p : 0.0;
        break;
    }
    p *= r;
  }
  return out;
}

TailValue WeightSequence::tail_sum(std::size_t N, double r) const {
  require_radius(r);
  double eps = DBL_EPSILON;
  switch (kind_) {
    case WeightKind::geometric: {
      double v = std::pow(r, static_cast<double>(N)) / (1.0 - r);
      return {v, 8.0 * eps * std::max(1.0, v)};
    }
    case WeightKind::truncated_geometric: {
      if (N > cutoff_) return {0.0, 0.0};
      KahanSum s;
      double p = std::pow(r, static_cast<double>(N));
      for (std::size_t k = N; k <= cutoff_; ++k) {
        s.add(p);
        p *= r;
      }
      return {s.acc, 4.0 * eps * std::max(1.0, s.acc)};
    }
    case WeightKind::custom: {
      if (N >= b_.size()) return {0.0, 0.0};
      KahanSum s;
      double p = std::pow(r, static_cast<double>(N));
      for (std::size_t k = N; k < b_.size(); ++k) {
        s.add(b_[k] * p);
        p *= r;
      }
      return {s.acc, 4.0 * eps * std::max(1.0, s.acc)};
    }
    case WeightKind::power: {
      double n = static_cast<double>(N);
      if (alpha_ == 0.0) {
        double v = std::pow(r, n) / (1.0 - r);
        return {v, 8.0 * eps * std::max(1.0, v)};
      }
      if (alpha_ == 1.0) {
        double u = 1.0 - r;
        double v = std::pow(r, n) * (1.0 / (u * u) + n / u);
        return {v, 8.0 * eps * std::max(1.0, v)};
      }
      if (alpha_ == 2.0) {
        double u = 1.0 - r;
        double v = std::pow(r, n) * ((1.0 + r) / (u * u * u) + 2.0 * n / (u * u) + n * n / u);
        return {v, 8.0 * eps * std::max(1.0, v)};
      }
      // All other exponents (the harmonic-type alpha=-1 included): direct
      // summation with a geometric-comparison stopping rule.
      KahanSum s;
      double p = std::pow(r, n);
      for (std::size_t k = N; k < N + kTermCap; ++k) {
        double term = index_power(k, alpha_) * p;
        s.add(term);
        // Upper bound q on every later term ratio. For alpha > 0 the ratio
        // r ((k+2)/(k+1))^alpha decreases in k; for alpha <= 0 it is < r.
        double q = alpha_ > 0.0
                       ? r * std::pow(static_cast<double>(k + 2) / static_cast<double>(k + 1),
                                      alpha_)
                       : r;
        if (q < 1.0) {
          double rest = term * q / (1.0 - q);
          if (rest <= 1e-15 * std::max(1.0, s.acc)) {
            return {s.acc, rest + 4.0 * eps * std::max(1.0, s.acc)};
          }
        }
        p *= r;
      }
      throw capability_error("weight tail summation did not converge within the term cap");
    }
  }
  return {0.0, 0.0};
}

TailValue WeightSequence::tail_sum_linear(std::size_t N, double r) const {
  require_radius(r);
  double eps = DBL_EPSILON;
  switch (kind_) {
    case WeightKind::geometric: {
      double n = static_cast<double>(N);
      double u = 1.0 - r;
      double v = std::pow(r, n) * (1.0 / (u * u) + n / u);
      return {v, 8.0 * eps * std::max(1.0, v)};
    }
    case WeightKind::truncated_geometric: {
      if (N > cutoff_) return {0.0, 0.0};
      KahanSum s;
      double p = std::pow(r, static_cast<double>(N));
      for (std::size_t k = N; k <= cutoff_; ++k) {
        s.add(static_cast<double>(k + 1) * p);
        p *= r;
      }
      return {s.acc, 4.0 * eps * std::max(1.0, s.acc)};
    }
    case WeightKind::custom: {
      if (N >= b_.size()) return {0.0, 0.0};
      KahanSum s;
      double p = std::pow(r, static_cast<double>(N));
      for (std::size_t k = N; k < b_.size(); ++k) {
        s.add(static_cast<double>(k + 1) * b_[k] * p);
        p *= r;
      }
      return {s.acc, 4.0 * eps * std::max(1.0, s.acc)};
    }
    case WeightKind::power: {
      // (n+1) phi_n has power weights with exponent alpha+1.
      return WeightSequence::power(alpha_ + 1.0).tail_sum(N, r);
    }
  }
  return {0.0, 0.0};
}

TailValue WeightSequence::tail_sum_even(std::size_t N, double r) const {
  require_radius(r);
  if (N == 0) throw std::invalid_argument("even-index tail starts at N >= 1");
  double eps = DBL_EPSILON;
  double r2 = r * r;
  switch (kind_) {
    case WeightKind::geometric: {
      double v = std::pow(r2, static_cast<double>(N)) / (1.0 - r2);
      return {v, 8.0 * eps * std::max(1.0, v)};
    }
    case WeightKind::truncated_geometric:
    case WeightKind::custom: {
      std::size_t top = kind_ == WeightKind::truncated_geometric ? cutoff_
                                                                 : (b_.empty() ? 0 : b_.size() - 1);
      KahanSum s;
      double p = std::pow(r2, static_cast<double>(N));
      for (std::size_t n = N; 2 * n <= top; ++n) {
        double c = kind_ == WeightKind::truncated_geometric ? 1.0 : b_[2 * n];
        s.add(c * p);
        p *= r2;
      }
      return {s.acc, 4.0 * eps * std::max(1.0, s.acc)};
    }
    case WeightKind::power: {
      KahanSum s;
      double p = std::pow(r2, static_cast<double>(N));
      for (std::size_t n = N; n < N + kTermCap; ++n) {
        double term = index_power(2 * n, alpha_) * p;
        s.add(term);
        double q = alpha_ > 0.0
                       ? r2 * std::pow(static_cast<double>(2 * n + 3) /
                                           static_cast<double>(2 * n + 1),
                                       alpha_)
                       : r2;
        if (q < 1.0) {
          double rest = term * q / (1.0 - q);
          if (rest <= 1e-15 * std::max(1.0, s.acc)) {
            return {s.acc, rest + 4.0 * eps * std::max(1.0, s.acc)};
          }
        }
        p *= r2;
      }
      throw capability_error("even-index tail summation did not converge within the term cap");
    }
  }
  return {0.0, 0.0};
}

std::vector<double> WeightSequence::odd_tail_profile(double r, std::size_t nmax,
                                                     double* bound) const {
  require_radius(r);
  std::size_t kmax = 2 * nmax + 2;
  auto phi = profile(r, kmax);
  TailValue top = tail_sum(kmax + 1, r);
  std::vector<double> out(nmax + 1);
  double t = top.value;
  for (std::size_t k = kmax; k >= 1; --k) {
    t += phi[k];
    if (k % 2 == 1) out[(k - 1) / 2] = t;
  }
  if (bound) {
    *bound = top.bound + DBL_EPSILON * static_cast<double>(kmax) * std::max(1.0, t);
  }
  return out;
}

GridCheckReport WeightSequence::check_submultiplicative(std::span<const double> r_grid,
                                                        std::size_t max_index) const {
  constexpr double kTol = 1e-15;
  constexpr std::size_t kMaxReported = 8;
  GridCheckReport rep;
  for (double r : r_grid) {
    auto phi = profile(r, 2 * max_index);
    for (std::size_t m = 0; m <= max_index; ++m) {
      for (std::size_t n = m; n <= max_index; ++n) {
        double lhs = phi[m + n];
        double rhs = phi[m] * phi[n];
        if (lhs > rhs + kTol) {
          rep.ok = false;
          if (rep.violations.size() < kMaxReported) {
            rep.violations.push_back({m, n, r, lhs, rhs});
          }
        }
      }
    }
  }
  return rep;
}

GridCheckReport WeightSequence::check_decreasing(std::span<const double> r_grid,
                                                 std::size_t max_index) const {
  constexpr double kTol = 1e-15;
  constexpr std::size_t kMaxReported = 8;
  GridCheckReport rep;
  for (double r : r_grid) {
    auto phi = profile(r, max_index);
    for (std::size_t k = 1; k + 1 <= max_index; ++k) {
      if (phi[k + 1] > phi[k] + kTol) {
        rep.ok = false;
        if (rep.violations.size() < kMaxReported) {
          rep.violations.push_back({k, k + 1, r, phi[k + 1], phi[k]});
        }
      }
    }
  }
  return rep;
}

std::string WeightSequence::to_json() const {
  nlohmann::json j;
  switch (kind_) {
    case WeightKind::geometric:
      j["kind"] = "geometric";
      break;
    case WeightKind::power:
      j["kind"] = "power";
      j["alpha"] = alpha_;
      break;
    case WeightKind::truncated_geometric:
      j["kind"] = "truncated_geometric";
      j["n"] = cutoff_;
      break;
    case WeightKind::custom:
      j["kind"] = "custom";
      j["b"] = b_;
      j["growth_cap"] = growth_cap_;
      break;
  }
  return j.dump();
}

WeightSequence WeightSequence::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad weight descriptor: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("kind")) {
      throw std::invalid_argument("weight descriptor needs a \"kind\" field");
    }
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "geometric") return geometric();
    if (kind == "power") {
      if (!j.contains("alpha")) throw std::invalid_argument("power weights need \"alpha\"");
      return power(j.at("alpha").get<double>());
    }
    if (kind == "truncated_geometric") {
      if (!j.contains("n")) throw std::invalid_argument("truncated weights need \"n\"");
      auto n = j.at("n").get<long long>();
      if (n < 0) throw std::invalid_argument("truncation index must be nonnegative");
      return truncated_geometric(static_cast<std::size_t>(n));
    }
    if (kind == "custom") {
      if (!j.contains("b")) throw std::invalid_argument("custom weights need \"b\"");
      auto b = j.at("b").get<std::vector<double>>();
      double cap = j.value("growth_cap", 1.0);
      return custom(std::move(b), cap);
    }
    throw std::invalid_argument("unknown weight kind: " + kind);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad weight descriptor: ") + e.what());
  }
}

std::string WeightSequence::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case WeightKind::geometric:
      os << "geometric";
      break;
    case WeightKind::power:
      os << "power(" << alpha_ << ")";
      break;
    case WeightKind::truncated_geometric:
      os << "truncated_geometric(" << cutoff_ << ")";
      break;
    case WeightKind::custom:
      os << "custom(" << b_.size() << ")";
      break;
  }
  return os.str();
}

}  // namespace bohr
