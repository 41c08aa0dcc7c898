#include "trisolve/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trisolve {

namespace {

// p(t) = t^3 (t - 1)^3 = t^6 - 3t^5 + 3t^4 - t^3 and its even derivatives.
double p0(double t) { return std::pow(t * (t - 1.0), 3); }
double p2(double t) { return ((30.0 * t - 60.0) * t + 36.0) * t * t - 6.0 * t; }
double p4(double t) { return (360.0 * t - 360.0) * t + 72.0; }
double p6(double) { return 720.0; }

}  // namespace

ManufacturedSolution example1_solution() {
  return {
      [](double x, double y) { return p0(x) * p0(y); },
      [](double x, double y) { return p2(x) * p0(y) + p0(x) * p2(y); },
      [](double x, double y) { return p4(x) * p0(y) + 2.0 * p2(x) * p2(y) + p0(x) * p4(y); },
      [](double x, double y) {
        return p6(x) * p0(y) + 3.0 * p4(x) * p2(y) + 3.0 * p2(x) * p4(y) + p0(x) * p6(y);
      },
  };
}

ManufacturedSolution example4_solution() {
  auto zero = [](double, double) { return 0.0; };
  return {[](double x, double y) { return std::exp(x) * std::sin(y); }, zero, zero, zero};
}

ProblemSpec example1() {
  const ManufacturedSolution ms = example1_solution();
  ProblemSpec p;
  p.name = "example1";
  p.f = [ms](double x1, double x2, double u, double v, double w) {
    return ms.trilap_u_star(x1, x2) + std::sin(w - ms.bilap_u_star(x1, x2)) -
           (std::cos(u - ms.u_star(x1, x2)) + 1.0) * std::sin(v - ms.lap_u_star(x1, x2));
  };
  p.exact_solution = ms.u_star;
  return p;
}

ProblemSpec example2() {
  ProblemSpec p;
  p.name = "example2";
  p.f = [](double x1, double x2, double, double v, double w) {
    return std::pow(x1, 6) + std::pow(x2, 6) + std::sin(v) * std::sin(w) * std::expm1(v);
  };
  return p;
}

ProblemSpec example3() {
  ProblemSpec p;
  p.name = "example3";
  p.f = [](double x1, double x2, double u, double v, double w) {
    constexpr double pi = std::numbers::pi;
    return -pi * pi * pi * std::sin(pi * x1) * std::sin(pi * x2) + u * v + w / 2.0;
  };
  return p;
}

ProblemSpec example4() {
  ProblemSpec p;
  p.name = "example4";
  const PlanarFunction u_star = [](double x1, double x2) { return std::exp(x1) * std::sin(x2); };
  // u* is harmonic, so every Laplacian of u* in f vanishes.
  p.f = [u_star](double x1, double x2, double u, double v, double w) {
    return std::sin(u - u_star(x1, x2)) - std::cos(v) + w + 1.0;
  };
  p.g1 = u_star;
  // Outward normal derivative: -d/dx1 on x1 = 0, -d/dx2 on x2 = 0.
  p.g2 = [](double x1, double x2, Edge edge) {
    switch (edge) {
      case Edge::Left: return -std::exp(x1) * std::sin(x2);
      case Edge::Right: return std::exp(x1) * std::sin(x2);
      case Edge::Bottom: return -std::exp(x1) * std::cos(x2);
      case Edge::Top: return std::exp(x1) * std::cos(x2);
    }
    return 0.0;
  };
  p.g3 = [](double, double) { return 0.0; };
  p.exact_solution = u_star;
  return p;
}

ProblemSpec example(int id) {
  switch (id) {
    case 1: return example1();
    case 2: return example2();
    case 3: return example3();
    case 4: return example4();
  }
  throw std::invalid_argument("unknown example id " + std::to_string(id) + " (expected 1..4)");
}

ProblemSpec zero_problem() {
  ProblemSpec p;
  p.name = "zero";
  p.f = [](double, double, double, double, double) { return 0.0; };
  p.exact_solution = [](double, double) { return 0.0; };
  return p;
}

ChainDiscrepancy verify_manufactured(const ManufacturedSolution& ms, const Grid& grid) {
  const PlanarFunction chain[4] = {ms.u_star, ms.lap_u_star, ms.bilap_u_star, ms.trilap_u_star};
  const double ih1 = 1.0 / (grid.h1() * grid.h1()), ih2 = 1.0 / (grid.h2() * grid.h2());
  ChainDiscrepancy out{};
  for (int level = 0; level < 3; ++level) {
    const auto F = GridFunction<double>::sample(grid, chain[level]);
    double worst = 0.0;
    for (int j = 1; j < grid.n(); ++j) {
      for (int i = 1; i < grid.m(); ++i) {
        const double lap = (F(i - 1, j) - 2.0 * F(i, j) + F(i + 1, j)) * ih1 +
                           (F(i, j - 1) - 2.0 * F(i, j) + F(i, j + 1)) * ih2;
        worst = std::max(worst, std::abs(lap - chain[level + 1](grid.x1(i), grid.x2(j))));
      }
    }
    out[level] = worst;
  }
  return out;
}

}  // namespace trisolve
