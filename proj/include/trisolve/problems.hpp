#pragma once

#include "trisolve/grid.hpp"
#include "trisolve/triharmonic.hpp"

#include <array>

namespace trisolve {

/// A manufactured solution with its Laplacian chain u*, Lu*, L^2u*, L^3u*.
struct ManufacturedSolution {
  PlanarFunction u_star;
  PlanarFunction lap_u_star;
  PlanarFunction bilap_u_star;
  PlanarFunction trilap_u_star;
};

/// u* = p(x1) p(x2), p(t) = t^3 (t - 1)^3; vanishes with its normal derivative
/// and Laplacian on the unit square boundary.
ManufacturedSolution example1_solution();
/// u* = exp(x1) sin(x2), harmonic.
ManufacturedSolution example4_solution();

/// L^3 u = L^3 u* + sin(L^2 u - L^2 u*) - (cos(u - u*) + 1) sin(L u - L u*),
/// homogeneous boundary data.
ProblemSpec example1();
/// f = x1^6 + x2^6 + sin(v) sin(w) (exp(v) - 1), homogeneous, no exact solution.
ProblemSpec example2();
/// f = -pi^3 sin(pi x1) sin(pi x2) + u v + w / 2, homogeneous, no exact solution.
ProblemSpec example3();
/// L^3 u = L^3 u* + sin(u - u*) - cos(L u - L u*) + L^2 u - L^2 u* + 1 with
/// boundary data taken from u* = exp(x1) sin(x2).
ProblemSpec example4();

/// Built-in problem by number 1..4.
ProblemSpec example(int id);

/// f = 0 with homogeneous data; exact solution 0.
ProblemSpec zero_problem();

/// Max interior deviation of the 5-point Laplacian of each chain member from
/// the next: [u* -> Lu*, Lu* -> L^2u*, L^2u* -> L^3u*].
using ChainDiscrepancy = std::array<double, 3>;
ChainDiscrepancy verify_manufactured(const ManufacturedSolution& ms, const Grid& grid);

}  // namespace trisolve
