#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "bohr/rng.hpp"
#include "bohr/series.hpp"

using bohr::Complex;
using bohr::PowerSeries;

namespace {

// Oracle: evaluate the finite Blaschke product directly, factor by factor.
Complex direct_blaschke(const std::vector<Complex>& zeros, Complex rotation, Complex z) {
  Complex acc = rotation;
  for (Complex c : zeros) acc *= (c - z) / (1.0 - std::conj(c) * z);
  return acc;
}

// Oracle: naive power-sum evaluation (no Horner).
Complex direct_eval(const PowerSeries& f, Complex z) {
  Complex acc{0.0, 0.0};
  Complex p{1.0, 0.0};
  for (std::size_t n = 0; n <= f.order(); ++n) {
    acc += f.coeff(n) * p;
    p *= z;
  }
  return acc;
}

PowerSeries random_poly(bohr::Rng& rng, std::size_t order, double scale = 1.0) {
  std::vector<Complex> c(order + 1);
  for (auto& v : c) v = scale * rng.disk_point(1.0);
  return PowerSeries(std::move(c));
}

double dist(const PowerSeries& f, const PowerSeries& g) {
  std::size_t n = std::min(f.order(), g.order());
  double d = 0.0;
  for (std::size_t k = 0; k <= n; ++k) d = std::max(d, std::abs(f.coeff(k) - g.coeff(k)));
  return d;
}

}  // namespace

TEST_CASE("mobius coefficients") {
  auto f = bohr::mobius(0.5, 6);
  CHECK(f.coeff(0) == Complex{0.5, 0.0});
  CHECK(f.coeff(1).real() == doctest::Approx(-0.75));
  CHECK(f.coeff(2).real() == doctest::Approx(-0.375));
  CHECK(f.coeff(3).real() == doctest::Approx(-0.1875));
  CHECK(f.bounded_by_one());

  auto neg_z = bohr::mobius(0.0, 4);
  CHECK(neg_z.coeff(0) == Complex{0.0, 0.0});
  CHECK(neg_z.coeff(1) == Complex{-1.0, 0.0});
  CHECK(neg_z.coeff(2) == Complex{0.0, 0.0});

  CHECK_THROWS_AS(bohr::mobius(1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(bohr::mobius(-0.1, 4), std::invalid_argument);
}

TEST_CASE("mobius evaluation matches the rational function") {
  for (double a : {0.1, 0.5, 0.9}) {
    auto f = bohr::mobius(a, 128);
    for (int i = 0; i < 8; ++i) {
      double th = 0.7853981633974483 * i;
      Complex z = 0.4 * Complex{std::cos(th), std::sin(th)};
      Complex want = (a - z) / (1.0 - a * z);
      CHECK(std::abs(bohr::eval_at(f, z) - want) < 1e-12);
    }
  }
}

TEST_CASE("blaschke basic forms") {
  auto f = bohr::blaschke({Complex{0.0, 0.0}}, Complex{1.0, 0.0}, 4);
  CHECK(f.coeff(0) == Complex{0.0, 0.0});
  CHECK(f.coeff(1) == Complex{-1.0, 0.0});
  CHECK(f.coeff(2) == Complex{0.0, 0.0});

  auto c = bohr::blaschke({}, Complex{0.0, 1.0}, 3);
  CHECK(c.coeff(0) == Complex{0.0, 1.0});
  CHECK(c.coeff(1) == Complex{0.0, 0.0});
  CHECK(c.bounded_by_one());

  CHECK_THROWS_AS(bohr::blaschke({Complex{1.0, 0.0}}, Complex{1.0, 0.0}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(bohr::blaschke({}, Complex{0.5, 0.0}, 4), std::invalid_argument);
}

TEST_CASE("blaschke pointwise oracle") {
  std::vector<Complex> zeros = {Complex{0.5, 0.0}, Complex{0.0, -0.3}};
  Complex rot{0.0, 1.0};

  // At order 8 the truncation error at |z| = 0.6 is ~1e-5, so only the
  // modulus bound is meaningful there.
  auto low = bohr::blaschke(zeros, rot, 8);
  for (int i = 0; i < 16; ++i) {
    double th = 0.39269908169872414 * i;
    Complex z = 0.6 * Complex{std::cos(th), std::sin(th)};
    CHECK(std::abs(bohr::eval_at(low, z)) <= 1.0 + 1e-9);
  }

  // At order 64 the truncated series matches the product to well below 1e-9.
  auto f = bohr::blaschke(zeros, rot, 64);
  CHECK(f.bounded_by_one());
  for (int i = 0; i < 16; ++i) {
    double th = 0.39269908169872414 * i;
    Complex z = 0.6 * Complex{std::cos(th), std::sin(th)};
    CHECK(std::abs(bohr::eval_at(f, z) - direct_blaschke(zeros, rot, z)) < 1e-9);
  }
}

TEST_CASE("seeded blaschke products stay bounded and match direct evaluation") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    bohr::Rng rng(bohr::mix_seed(404, s));
    std::size_t deg = rng.next_index(8);
    std::vector<Complex> zeros;
    for (std::size_t i = 0; i < deg; ++i) zeros.push_back(rng.disk_point(0.95));
    Complex rot = rng.circle_point();
    auto f = bohr::blaschke(zeros, rot, 256);
    for (int i = 0; i < 16; ++i) {
      double th = 0.39269908169872414 * i;
      Complex z = 0.6 * Complex{std::cos(th), std::sin(th)};
      CHECK(std::abs(bohr::eval_at(f, z) - direct_blaschke(zeros, rot, z)) < 1e-9);
    }
    for (int i = 0; i < 64; ++i) {
      double th = 0.09817477042468103 * i;
      Complex z = 0.7 * Complex{std::cos(th), std::sin(th)};
      CHECK(std::abs(bohr::eval_at(f, z)) <= 1.0 + 1e-8);
    }
  }
}

TEST_CASE("add and cauchy_product basics") {
  PowerSeries f(std::vector<Complex>{{1, 0}, {1, 0}, {0, 0}});
  PowerSeries g(std::vector<Complex>{{1, 0}, {-1, 0}, {0, 0}});
  auto s = bohr::add(f, g);
  CHECK(s.coeff(0) == Complex{2.0, 0.0});
  CHECK(s.coeff(1) == Complex{0.0, 0.0});

  auto p = bohr::cauchy_product(f, g);
  CHECK(p.order() == 2);
  CHECK(p.coeff(0) == Complex{1.0, 0.0});
  CHECK(p.coeff(1) == Complex{0.0, 0.0});
  CHECK(p.coeff(2) == Complex{-1.0, 0.0});

  // Order is the shorter operand's.
  PowerSeries h(std::vector<Complex>{{1, 0}, {2, 0}});
  CHECK(bohr::cauchy_product(f, h).order() == 1);
  CHECK(bohr::add(f, h).order() == 1);
}

TEST_CASE("cauchy_product commutes exactly and is associative to rounding") {
  bohr::Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    auto f = random_poly(rng, 40);
    auto g = random_poly(rng, 40);
    auto h = random_poly(rng, 40);
    auto fg = bohr::cauchy_product(f, g);
    auto gf = bohr::cauchy_product(g, f);
    for (std::size_t n = 0; n <= 40; ++n) {
      CHECK(fg.coeff(n) == gf.coeff(n));  // bitwise
    }
    auto left = bohr::cauchy_product(fg, h);
    auto right = bohr::cauchy_product(f, bohr::cauchy_product(g, h));
    CHECK(dist(left, right) < 1e-12 * 41.0);
  }
}

TEST_CASE("compose basics") {
  auto geo = PowerSeries::geometric_series(8);
  std::vector<Complex> z2(9, Complex{0, 0});
  z2[2] = Complex{1, 0};
  PowerSeries omega(z2);
  omega.set_schwarz();
  auto c = bohr::compose(geo, omega);
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(c.coeff(n) == Complex{n % 2 == 0 ? 1.0 : 0.0, 0.0});
  }

  // compose(g, z) reproduces g exactly.
  bohr::Rng rng(5);
  auto g = random_poly(rng, 32);
  auto id = PowerSeries::identity(32);
  id.set_schwarz();
  auto gid = bohr::compose(g, id);
  for (std::size_t n = 0; n <= 32; ++n) CHECK(gid.coeff(n) == g.coeff(n));

  // omega must be tagged schwarz.
  PowerSeries not_schwarz(std::vector<Complex>{{0.5, 0}, {0.5, 0}});
  CHECK_THROWS_AS(bohr::compose(g, not_schwarz), std::invalid_argument);
}

TEST_CASE("compose associates with inner composition") {
  bohr::Rng rng(17);
  for (int t = 0; t < 6; ++t) {
    auto g = random_poly(rng, 48, 0.8);
    auto w1 = bohr::shift_up(random_poly(rng, 48, 0.1));
    auto w2 = bohr::shift_up(random_poly(rng, 48, 0.1));
    // shift_up of an untagged series is untagged; tag manually for compose.
    PowerSeries w1s(w1.coeffs());
    PowerSeries w2s(w2.coeffs());
    // Scaled coefficients keep sum |a_n|^2 <= 1 so the schwarz claim holds.
    w1s.set_schwarz();
    w2s.set_schwarz();
    auto lhs = bohr::compose(bohr::compose(g, w1s), w2s);
    auto rhs = bohr::compose(g, bohr::compose(w1s, w2s));
    CHECK(dist(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("derivative and integrate") {
  PowerSeries f(std::vector<Complex>{{3, 0}, {1, 0}, {0, 2}, {5, 0}});
  auto d = bohr::derivative(f);
  REQUIRE(d.order() == 2);
  CHECK(d.coeff(0) == Complex{1.0, 0.0});
  CHECK(d.coeff(1) == Complex{0.0, 4.0});
  CHECK(d.coeff(2) == Complex{15.0, 0.0});

  auto back = bohr::integrate(d);
  REQUIRE(back.order() == 3);
  CHECK(back.coeff(0) == Complex{0.0, 0.0});
  for (std::size_t n = 1; n <= 3; ++n) CHECK(std::abs(back.coeff(n) - f.coeff(n)) < 1e-15);

  // Product rule within 1e-12.
  bohr::Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    auto a = random_poly(rng, 30);
    auto b = random_poly(rng, 30);
    auto lhs = bohr::derivative(bohr::cauchy_product(a, b));
    auto rhs = bohr::add(bohr::cauchy_product(bohr::derivative(a), b),
                         bohr::cauchy_product(a, bohr::derivative(b)));
    CHECK(dist(lhs, rhs) < 1e-12 * 31.0);
  }
}

TEST_CASE("shift_up") {
  PowerSeries f(std::vector<Complex>{{1, 0}, {2, 0}, {3, 0}});
  auto s = bohr::shift_up(f);
  REQUIRE(s.order() == 2);
  CHECK(s.coeff(0) == Complex{0.0, 0.0});
  CHECK(s.coeff(1) == Complex{1.0, 0.0});
  CHECK(s.coeff(2) == Complex{2.0, 0.0});

  auto b = bohr::mobius(0.4, 16);
  auto zb = bohr::shift_up(b);
  CHECK(zb.schwarz());
  CHECK(zb.bounded_by_one());
  Complex z{0.3, 0.2};
  // Prefix relation: eval(shift_up(f), z) = z * eval(f truncated one lower).
  Complex want = z * (bohr::eval_at(b, z) - b.coeff(16) * std::pow(z, Complex{16.0, 0.0}));
  CHECK(std::abs(bohr::eval_at(zb, z) - want) < 1e-12);
}

TEST_CASE("eval_at matches naive evaluation") {
  bohr::Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    auto f = random_poly(rng, 64);
    Complex z = rng.disk_point(0.9);
    CHECK(std::abs(bohr::eval_at(f, z) - direct_eval(f, z)) < 1e-12);
  }
}

TEST_CASE("tag validation") {
  PowerSeries big(std::vector<Complex>{{1.0, 0}, {0.5, 0}});
  CHECK_THROWS_AS(big.set_bounded_by_one(), std::invalid_argument);

  PowerSeries nonzero(std::vector<Complex>{{0.5, 0}, {0.5, 0}});
  CHECK_THROWS_AS(nonzero.set_schwarz(), std::invalid_argument);

  PowerSeries ok(std::vector<Complex>{{0.0, 0}, {0.6, 0}, {0.6, 0}});
  CHECK_NOTHROW(ok.set_schwarz());
  CHECK(ok.bounded_by_one());

  CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{}), std::invalid_argument);
}

TEST_CASE("coefficients beyond the prefix are unknown") {
  PowerSeries f(std::vector<Complex>{{1, 0}, {2, 0}});
  CHECK_THROWS_AS(f.coeff(2), std::out_of_range);
}

TEST_CASE("coefficient json round trip") {
  auto f = bohr::blaschke({Complex{0.3, 0.1}}, Complex{1.0, 0.0}, 12);
  auto text = f.to_json();
  auto back = PowerSeries::from_json(text);
  REQUIRE(back.order() == f.order());
  for (std::size_t n = 0; n <= f.order(); ++n) CHECK(back.coeff(n) == f.coeff(n));
  CHECK(back.bounded_by_one());

  CHECK_THROWS_AS(PowerSeries::from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(PowerSeries::from_json("{\"coeffs\":[]}"), std::invalid_argument);
  CHECK_THROWS_AS(PowerSeries::from_json("{\"coeffs\":[[0,0]],\"tags\":[\"wat\"]}"),
                  std::invalid_argument);
  // A bounded-by-one claim inconsistent with the prefix is rejected.
  CHECK_THROWS_AS(
      PowerSeries::from_json("{\"coeffs\":[[1,0],[1,0]],\"tags\":[\"bounded-by-one\"]}"),
      std::invalid_argument);
}
