#pragma once

#include <complex>
#include <cstdint>

namespace bohr {

// Fixed 64-bit mixing permutation (splitmix64 finalizer). Used both as the
// stream function of Rng and to derive per-sample seeds, so results are
// reproducible across platforms and independent of evaluation order.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ ((index + 1) * 0x9e3779b97f4a7c15ull));
}

// Deterministic uniform generator. Doubles are built from the top 53 bits,
// never from library distributions, so the stream is bit-stable everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  // Uniform in [0,1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform in {0,...,n}.
  std::uint64_t next_index(std::uint64_t n) { return next_u64() % (n + 1); }

  // Area-uniform in the closed disk of the given radius.
  std::complex<double> disk_point(double radius) {
    double u = next_double();
    double v = next_double();
    double rho = radius * std::sqrt(u);
    double theta = 6.283185307179586476925286766559 * v;
    return {rho * std::cos(theta), rho * std::sin(theta)};
  }

  // Uniform on the unit circle.
  std::complex<double> circle_point() {
    double theta = 6.283185307179586476925286766559 * next_double();
    return {std::cos(theta), std::sin(theta)};
  }

 private:
  std::uint64_t state_;
};

}  // namespace bohr
