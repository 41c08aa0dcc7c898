#include "trisolve/problems.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace trisolve;
using std::numbers::pi;

namespace {

// Sixth-order central Laplacian of a smooth function at a point.
double fd_laplacian(const PlanarFunction& f, double x, double y, double h = 1e-2) {
  auto d2 = [&](auto shift) {
    return (2.0 * (shift(-3) + shift(3)) - 27.0 * (shift(-2) + shift(2)) + 270.0 * (shift(-1) + shift(1)) -
            490.0 * shift(0)) / (180.0 * h * h);
  };
  return d2([&](int k) { return f(x + k * h, y); }) + d2([&](int k) { return f(x, y + k * h); });
}

double p_prime(double t) { return 3 * t * t * std::pow(t - 1, 3) + 3 * t * t * t * std::pow(t - 1, 2); }

}  // namespace

TEST_CASE("example 1 manufactured solution values") {
  const auto ms = example1_solution();
  CHECK(ms.u_star(0.5, 0.5) == doctest::Approx(2.44140625e-04).epsilon(1e-15));
  CHECK(ms.u_star(0.0, 0.3) == 0.0);
  CHECK(ms.u_star(0.3, 1.0) == 0.0);
  CHECK(ms.trilap_u_star(0.0, 0.0) == 0.0);
}

TEST_CASE("laplacian chains agree with finite differences at random points") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> pos(0.1, 0.9);
  for (const auto& ms : {example1_solution(), example4_solution()}) {
    const PlanarFunction chain[4] = {ms.u_star, ms.lap_u_star, ms.bilap_u_star, ms.trilap_u_star};
    for (int trial = 0; trial < 200; ++trial) {
      const double x = pos(rng), y = pos(rng);
      for (int level = 0; level < 3; ++level) {
        const double scale = 1.0 + std::abs(chain[level + 1](x, y));
        CHECK(std::abs(fd_laplacian(chain[level], x, y) - chain[level + 1](x, y)) < 1e-7 * scale);
      }
    }
  }
}

TEST_CASE("manufactured right-hand sides are consistent with their solutions") {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  const auto p1 = example1();
  const auto ms1 = example1_solution();
  const auto p4 = example4();
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = pos(rng), y = pos(rng);
    CHECK(std::abs(p1.f(x, y, ms1.u_star(x, y), ms1.lap_u_star(x, y), ms1.bilap_u_star(x, y)) -
                   ms1.trilap_u_star(x, y)) < 1e-12);
    CHECK(std::abs(p4.f(x, y, p4.exact_solution(x, y), 0.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("example 1 boundary data are homogeneous and match the exact traces") {
  const auto p = example1();
  CHECK(p.homogeneous());
  const auto ms = example1_solution();
  for (int k = 0; k <= 20; ++k) {
    const double t = k / 20.0;
    for (auto [x, y] : {std::pair{0.0, t}, std::pair{1.0, t}, std::pair{t, 0.0}, std::pair{t, 1.0}}) {
      CHECK(std::abs(ms.u_star(x, y)) < 1e-14);
      CHECK(std::abs(ms.lap_u_star(x, y)) < 1e-14);
    }
    CHECK(std::abs(p_prime(0.0) * std::pow(t * (t - 1), 3)) < 1e-14);
    CHECK(std::abs(p_prime(1.0) * std::pow(t * (t - 1), 3)) < 1e-14);
  }
}

TEST_CASE("examples 2 and 3 right-hand sides") {
  const auto p2 = example2();
  CHECK_FALSE(p2.has_exact_solution());
  CHECK(p2.homogeneous());
  CHECK(p2.f(0.5, 1.0, 0.0, 0.0, 0.0) == doctest::Approx(std::pow(0.5, 6) + 1.0));
  CHECK(p2.f(0.2, 0.3, 7.0, 0.4, -1.1) ==
        doctest::Approx(std::pow(0.2, 6) + std::pow(0.3, 6) + std::sin(0.4) * std::sin(-1.1) * (std::exp(0.4) - 1.0)));

  const auto p3 = example3();
  CHECK_FALSE(p3.has_exact_solution());
  const double s = std::sin(pi * 0.25) * std::sin(pi * 0.6);
  CHECK(p3.f(0.25, 0.6, 1.0, 1.0, 2.0) == doctest::Approx(-pi * pi * pi * s + 2.0));
  CHECK(p3.f(0.5, 0.5, 0.0, 0.0, 0.0) == doctest::Approx(-pi * pi * pi));
}

TEST_CASE("example 4 boundary data") {
  const auto p = example4();
  CHECK_FALSE(p.homogeneous());
  CHECK(p.g2(0.0, 0.5, Edge::Left) == doctest::Approx(-0.4794255386));
  CHECK(p.g2(1.0, 0.5, Edge::Right) == doctest::Approx(std::exp(1.0) * std::sin(0.5)));
  CHECK(p.g2(0.5, 0.0, Edge::Bottom) == doctest::Approx(-std::exp(0.5)));
  CHECK(p.g2(0.5, 1.0, Edge::Top) == doctest::Approx(std::exp(0.5) * std::cos(1.0)));
  CHECK(p.g1(0.3, 0.7) == p.exact_solution(0.3, 0.7));
  CHECK(p.g3(0.3, 0.7) == 0.0);
}

TEST_CASE("example lookup") {
  for (int id = 1; id <= 4; ++id) CHECK(example(id).name == "example" + std::to_string(id));
  CHECK_THROWS_AS(example(0), std::invalid_argument);
  CHECK_THROWS_AS(example(5), std::invalid_argument);
}

TEST_CASE("verify_manufactured converges at second order") {
  const auto ms = example1_solution();
  const auto coarse = verify_manufactured(ms, unit_square(64));
  const auto fine = verify_manufactured(ms, unit_square(128));
  for (int level = 0; level < 3; ++level) CHECK(coarse[level] / fine[level] == doctest::Approx(4.0).epsilon(0.15));

  auto c = [](double, double) { return 1.0; };
  auto z = [](double, double) { return 0.0; };
  const auto flat = verify_manufactured({c, z, z, z}, unit_square(8));
  for (double d : flat) CHECK(d < 1e-12);
}

TEST_CASE("initial state samples f with zero arguments") {
  const Grid g = unit_square(8);
  const auto s3 = initialize(example3(), g);
  const auto s2 = initialize(example2(), g);
  CHECK(max_norm(s3.G) == 0.0);
  for (int j = 0; j <= 8; ++j)
    for (int i = 0; i <= 8; ++i) {
      const double x = g.x1(i), y = g.x2(j);
      CHECK(s3.Phi(i, j) == doctest::Approx(-pi * pi * pi * std::sin(pi * x) * std::sin(pi * y)).scale(1.0));
      CHECK(s2.Phi(i, j) == doctest::Approx(std::pow(x, 6) + std::pow(y, 6)));
    }
}
