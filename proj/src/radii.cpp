#include "bohr/radii.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

// Scan and closed-form results are confined to (0, kCap): weights degenerate
// as r -> 1 and every equation in scope has its root well below this.
constexpr double kCap = 1.0 - 1e-6;

void require_head_exponent(double p, double hi, const char* range) {
  if (!(p > 0.0) || p > hi) {
    throw std::domain_error(std::string("radius: p must lie in ") + range);
  }
}

std::string format_number(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

bool geometric_like(const WeightSequence& w) {
  return w.kind() == WeightKind::geometric ||
         (w.kind() == WeightKind::power && w.alpha() == 0.0);
}

std::optional<double> in_range(double x) {
  if (x > 0.0 && x < kCap) return x;
  return std::nullopt;
}

}  // namespace

std::string equation_name(RadiusEquation equation) {
  switch (equation) {
    case RadiusEquation::general:
      return "general";
    case RadiusEquation::truncated:
      return "truncated";
    case RadiusEquation::power_alpha:
      return "power";
    case RadiusEquation::harmonic:
      return "harmonic";
    case RadiusEquation::schwarz_derivative:
      return "schwarz-derivative";
    case RadiusEquation::odd:
      return "odd";
  }
  return "unknown";
}

RadiusProblem RadiusProblem::general(WeightSequence w, double p) {
  require_head_exponent(p, 2.0, "(0, 2]");
  RadiusProblem problem;
  problem.equation_ = RadiusEquation::general;
  problem.weights_ = std::move(w);
  problem.p_ = p;
  return problem;
}

RadiusProblem RadiusProblem::truncated(std::size_t n, double p) {
  if (n < 1) throw std::invalid_argument("truncated radius: n must be at least 1");
  require_head_exponent(p, 2.0, "(0, 2]");
  RadiusProblem problem;
  problem.equation_ = RadiusEquation::truncated;
  problem.weights_ = WeightSequence::truncated_geometric(n);
  problem.n_ = n;
  problem.p_ = p;
  return problem;
}

RadiusProblem RadiusProblem::power(double alpha, double p) {
  require_head_exponent(p, 2.0, "(0, 2]");
  RadiusProblem problem;
  problem.equation_ = RadiusEquation::power_alpha;
  problem.weights_ = WeightSequence::power(alpha);
  problem.alpha_ = alpha;
  problem.p_ = p;
  return problem;
}

RadiusProblem RadiusProblem::harmonic(WeightSequence w, double p, double k) {
  require_head_exponent(p, 1.0, "(0, 1]");
  if (!(k >= 0.0) || k > 1.0) {
    throw std::domain_error("harmonic radius: k must lie in [0, 1]");
  }
  RadiusProblem problem;
  problem.equation_ = RadiusEquation::harmonic;
  problem.weights_ = std::move(w);
  problem.p_ = p;
  problem.k_ = k;
  return problem;
}

RadiusProblem RadiusProblem::schwarz_derivative(WeightSequence w) {
  RadiusProblem problem;
  problem.equation_ = RadiusEquation::schwarz_derivative;
  problem.weights_ = std::move(w);
  return problem;
}

RadiusProblem RadiusProblem::odd(WeightSequence w) {
  RadiusProblem problem;
  problem.equation_ = RadiusEquation::odd;
  problem.weights_ = std::move(w);
  return problem;
}

double RadiusProblem::residual(double x) const {
  switch (equation_) {
    case RadiusEquation::general:
      return p_ * weights_.phi0(x) - 2.0 * weights_.tail_sum(1, x).value;
    case RadiusEquation::truncated:
      return p_ * (1.0 - x) -
             2.0 * x * (1.0 - std::pow(x, static_cast<double>(n_)));
    case RadiusEquation::power_alpha:
      if (alpha_ == 2.0) {
        return p_ * (1.0 - x) * (1.0 - x) - 2.0 * x * (3.0 - x);
      }
      return 0.5 * p_ - weights_.tail_sum(1, x).value;
    case RadiusEquation::harmonic:
      return 1.0 - (2.0 / p_) * (1.0 + k_) * weights_.tail_sum(1, x).value;
    case RadiusEquation::schwarz_derivative:
      return weights_.phi0(x) - 2.0 * weights_.tail_sum_linear(1, x).value;
    case RadiusEquation::odd:
      return 1.0 - 2.0 * weights_.tail_sum_even(1, x).value;
  }
  return 0.0;
}

std::string RadiusProblem::describe() const {
  std::ostringstream out;
  switch (equation_) {
    case RadiusEquation::general:
      out << "p*phi_0(x) = 2*sum_{n>=1} phi_n(x) with " << weights_.describe()
          << ", p = " << format_number(p_);
      break;
    case RadiusEquation::truncated:
      out << "p*(1-x) = 2*x*(1-x^n) with n = " << n_
          << ", p = " << format_number(p_);
      break;
    case RadiusEquation::power_alpha:
      if (alpha_ == 2.0) {
        out << "p*(1-x)^2 = 2*x*(3-x) with p = " << format_number(p_);
      } else {
        out << "sum_{n>=1} (n+1)^alpha x^n = p/2 with alpha = "
            << format_number(alpha_) << ", p = " << format_number(p_);
      }
      break;
    case RadiusEquation::harmonic:
      out << "1 = (2/p)*(1+k)*sum_{n>=1} phi_n(x) with " << weights_.describe()
          << ", p = " << format_number(p_) << ", k = " << format_number(k_);
      break;
    case RadiusEquation::schwarz_derivative:
      out << "phi_0(x) = 2*sum_{n>=1} (n+1)*phi_n(x) with "
          << weights_.describe();
      break;
    case RadiusEquation::odd:
      out << "1 = 2*sum_{n>=1} phi_{2n}(x) with " << weights_.describe();
      break;
  }
  return out.str();
}

RadiusResult solve(const RadiusProblem& problem, const SolveOptions& options) {
  if (!(options.tol > 0.0)) {
    throw std::invalid_argument("solve: tol must be positive");
  }
  if (!(options.step > 0.0) || options.step >= 1.0) {
    throw std::invalid_argument("solve: step must lie in (0, 1)");
  }
  if (!(problem.residual(0.0) > 0.0)) {
    throw std::invalid_argument("solve: residual must be positive at x = 0");
  }

  double lo = 0.0;
  double hi = 0.0;
  bool bracketed = false;
  for (std::size_t j = 1; !bracketed; ++j) {
    const double x = std::min(static_cast<double>(j) * options.step, kCap);
    if (problem.residual(x) <= 0.0) {
      hi = x;
      bracketed = true;
    } else {
      lo = x;
      if (x >= kCap) break;
    }
  }
  if (!bracketed) return {};

  while (hi - lo > options.tol) {
    const double mid = 0.5 * (lo + hi);
    (problem.residual(mid) <= 0.0 ? hi : lo) = mid;
  }

  // The bracket bounds the root location to tol; keep halving until the
  // residual itself drops below tol or the bracket hits double resolution.
  double root = 0.5 * (lo + hi);
  double g = problem.residual(root);
  for (int i = 0; i < 200 && std::fabs(g) > options.tol; ++i) {
    (g < 0.0 ? hi : lo) = root;
    const double next = 0.5 * (lo + hi);
    if (next == lo || next == hi) break;
    root = next;
    g = problem.residual(root);
  }

  // A touch point (residual reaching zero without going negative) is
  // reported with crossing == false; sharpness arguments need a genuine
  // sign change just past the root.
  const double beyond = std::min(root + options.step, kCap);
  const bool crossing =
      problem.residual(hi) < 0.0 || problem.residual(beyond) < 0.0;
  return {true, root, g, crossing};
}

std::optional<double> closed_form(const RadiusProblem& problem) {
  const double p = problem.p();
  switch (problem.equation()) {
    case RadiusEquation::general: {
      const WeightSequence& w = problem.weights();
      if (geometric_like(w)) return in_range(p / (2.0 + p));
      if (w.kind() == WeightKind::truncated_geometric) {
        if (w.cutoff() == 1) return in_range(0.5 * p);
        if (w.cutoff() == 2) {
          return in_range(0.5 * (std::sqrt(1.0 + 2.0 * p) - 1.0));
        }
        return std::nullopt;
      }
      if (w.kind() == WeightKind::power && w.alpha() == 1.0) {
        return in_range(1.0 - std::sqrt(2.0 / (2.0 + p)));
      }
      // power alpha = 2 deliberately has none here: the quadratic-coefficient
      // closed form solves the power_alpha variant, whose residual differs
      // from this tail at alpha = 2.
      return std::nullopt;
    }
    case RadiusEquation::truncated: {
      if (problem.n() == 1) return in_range(0.5 * p);
      if (problem.n() == 2) {
        return in_range(0.5 * (std::sqrt(1.0 + 2.0 * p) - 1.0));
      }
      return std::nullopt;
    }
    case RadiusEquation::power_alpha: {
      if (problem.alpha() == 0.0) return in_range(p / (2.0 + p));
      if (problem.alpha() == 1.0) {
        return in_range(1.0 - std::sqrt(2.0 / (2.0 + p)));
      }
      if (problem.alpha() == 2.0) {
        return in_range((p + 3.0 - std::sqrt(4.0 * p + 9.0)) / (p + 2.0));
      }
      return std::nullopt;
    }
    case RadiusEquation::harmonic: {
      if (geometric_like(problem.weights())) {
        return in_range(p / (p + 2.0 * (1.0 + problem.k())));
      }
      return std::nullopt;
    }
    case RadiusEquation::schwarz_derivative: {
      const WeightSequence& w = problem.weights();
      if (geometric_like(w)) return in_range(1.0 - std::sqrt(2.0 / 3.0));
      if (w.kind() == WeightKind::truncated_geometric && w.cutoff() == 1) {
        return in_range(0.25);
      }
      if (w.kind() == WeightKind::power && w.alpha() == -1.0) {
        return in_range(1.0 / 3.0);
      }
      return std::nullopt;
    }
    case RadiusEquation::odd: {
      const WeightSequence& w = problem.weights();
      if (geometric_like(w)) return in_range(std::sqrt(1.0 / 3.0));
      if (w.kind() == WeightKind::truncated_geometric && w.cutoff() / 2 == 1) {
        return in_range(1.0 / std::sqrt(2.0));
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

double solve_or_throw(const RadiusProblem& problem, const SolveOptions& options) {
  const RadiusResult result = solve(problem, options);
  if (!result.found) {
    throw no_radius_error("no radius for " + problem.describe() +
                          ": the residual keeps one sign on (0, 1)");
  }
  return result.value;
}

}  // namespace

double radius_general(const WeightSequence& w, double p,
                      const SolveOptions& options) {
  return solve_or_throw(RadiusProblem::general(w, p), options);
}

double radius_truncated(std::size_t n, double p, const SolveOptions& options) {
  return solve_or_throw(RadiusProblem::truncated(n, p), options);
}

double radius_power(double alpha, double p, const SolveOptions& options) {
  return solve_or_throw(RadiusProblem::power(alpha, p), options);
}

double radius_harmonic(const WeightSequence& w, double p, double k,
                       const SolveOptions& options) {
  const double root = solve_or_throw(RadiusProblem::harmonic(w, p, k), options);
  std::vector<double> grid(16);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    grid[j] = root * static_cast<double>(j + 1) / static_cast<double>(grid.size());
  }
  const GridCheckReport report = w.check_decreasing(grid, 64);
  if (!report.ok) {
    const GridViolation& first = report.violations.front();
    throw std::invalid_argument(
        "harmonic radius: weights must be nonincreasing from index 1 on (0, R]; "
        "phi_" + std::to_string(first.j) + " exceeds phi_" +
        std::to_string(first.i) + " at r = " + format_number(first.r));
  }
  return root;
}

double radius_schwarz_derivative(const WeightSequence& w,
                                 const SolveOptions& options) {
  return solve_or_throw(RadiusProblem::schwarz_derivative(w), options);
}

double radius_odd(const WeightSequence& w, const SolveOptions& options) {
  return solve_or_throw(RadiusProblem::odd(w), options);
}

double min_radius(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("min_radius: the candidate list is empty");
  }
  return *std::min_element(values.begin(), values.end());
}

namespace {

// Published roots of p*(1-r) = 2*r*(1-r^n), six decimals, p in {1, 2}.
constexpr ReferenceRadius kReferenceRadii[] = {
    {2, 1.0, 0.366025},  {3, 1.0, 0.342508},  {4, 1.0, 0.336197},
    {5, 1.0, 0.334263},  {6, 1.0, 0.33364},   {7, 1.0, 0.333435},
    {8, 1.0, 0.333367},  {9, 1.0, 0.333345},  {10, 1.0, 0.333337},
    {15, 1.0, 0.333333}, {20, 1.0, 0.333333}, {25, 1.0, 0.333333},
    {30, 1.0, 0.333333}, {35, 1.0, 0.333333}, {2, 2.0, 0.618034},
    {3, 2.0, 0.543689},  {4, 2.0, 0.51879},   {5, 2.0, 0.50866},
    {6, 2.0, 0.504138},  {7, 2.0, 0.502017},  {8, 2.0, 0.500994},
    {9, 2.0, 0.500493},  {10, 2.0, 0.500245}, {15, 2.0, 0.500008},
    {20, 2.0, 0.5},      {25, 2.0, 0.5},      {30, 2.0, 0.5},
    {35, 2.0, 0.5},
};

}  // namespace

std::span<const ReferenceRadius> reference_truncated_radii() {
  return kReferenceRadii;
}

}  // namespace bohr
