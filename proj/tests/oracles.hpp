#pragma once

// Test-only reference implementations. Nothing here calls into the stencil or
// fast-solver code paths they are used to check.

#include "trisolve/grid.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace oracle {

using trisolve::Grid;
using trisolve::GridFunction;

/// Weights of the nine-point compact operator written out by hand:
/// Lambda* = L1 + L2 + c L1 L2 with c = (h1^2 + h2^2) / 12.
struct NinePoint {
  double center, east_west, north_south, diagonal;

  explicit NinePoint(const Grid& g) {
    const double a = 1.0 / (g.h1() * g.h1()), b = 1.0 / (g.h2() * g.h2());
    const double c = (g.h1() * g.h1() + g.h2() * g.h2()) / 12.0;
    center = -2.0 * a - 2.0 * b + 4.0 * c * a * b;
    east_west = a - 2.0 * c * a * b;
    north_south = b - 2.0 * c * a * b;
    diagonal = c * a * b;
  }
};

/// Solves Lambda* Y = rhs (interior, (m-1)x(n-1)) with Y = boundary values of
/// `bc` by assembling the full dense system and using partial-pivot LU.
inline GridFunction<double> dense_compact_solve(const Eigen::ArrayXXd& rhs, const GridFunction<double>& bc) {
  const Grid& g = bc.grid();
  const int mi = g.m() - 1, ni = g.n() - 1, size = mi * ni;
  const NinePoint w(g);
  auto id = [mi](int i, int j) { return (i - 1) + (j - 1) * mi; };

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(size, size);
  Eigen::VectorXd b(size);
  for (int j = 1; j <= ni; ++j) {
    for (int i = 1; i <= mi; ++i) {
      const int row = id(i, j);
      b(row) = rhs(i - 1, j - 1);
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          double coeff = w.center;
          if (di != 0 && dj != 0) coeff = w.diagonal;
          else if (di != 0) coeff = w.east_west;
          else if (dj != 0) coeff = w.north_south;
          const int ii = i + di, jj = j + dj;
          if (g.is_boundary(ii, jj)) b(row) -= coeff * bc(ii, jj);
          else A(row, id(ii, jj)) += coeff;
        }
      }
    }
  }
  const Eigen::VectorXd x = A.partialPivLu().solve(b);
  GridFunction<double> Y = bc;
  for (int j = 1; j <= ni; ++j)
    for (int i = 1; i <= mi; ++i) Y(i, j) = x(id(i, j));
  return Y;
}

/// Applies the hand-written nine-point weights at interior node (i, j).
inline double nine_point_at(const GridFunction<double>& Y, int i, int j) {
  const NinePoint w(Y.grid());
  return w.center * Y(i, j) + w.east_west * (Y(i - 1, j) + Y(i + 1, j)) +
         w.north_south * (Y(i, j - 1) + Y(i, j + 1)) +
         w.diagonal * (Y(i - 1, j - 1) + Y(i + 1, j - 1) + Y(i - 1, j + 1) + Y(i + 1, j + 1));
}

inline GridFunction<double> random_function(const Grid& g, std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  GridFunction<double> F(g);
  for (int j = 0; j <= g.n(); ++j)
    for (int i = 0; i <= g.m(); ++i) F(i, j) = dist(rng);
  return F;
}

}  // namespace oracle
