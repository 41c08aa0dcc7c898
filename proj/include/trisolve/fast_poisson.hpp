#pragma once

#include "trisolve/grid.hpp"
#include "trisolve/stencils.hpp"

#include <memory>
#include <stdexcept>

namespace trisolve {

/// Raised when the compact operator has a (numerically) vanishing eigenvalue.
class SingularOperatorError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dirichlet problem Lambda* Y = rhs in the interior, Y = boundary on the
/// boundary nodes.
struct CompactPoissonSystem {
  InteriorField<double> rhs;
  BoundaryFunction<double> boundary;
};

/// Eigenvalue of Lambda_1 for the sine mode sin(p pi i / m):
/// -(4 / h1^2) sin^2(p pi / (2 m)).
double lambda1_eigenvalue(const Grid& grid, int p);
/// Eigenvalue of Lambda_2 for the sine mode sin(q pi j / n).
double lambda2_eigenvalue(const Grid& grid, int q);

/// Direct solver for the compact fourth-order Dirichlet problem.
///
/// Lambda_1, Lambda_2 and their product share the discrete sine eigenbasis on
/// the interior, so Lambda* is diagonalised by a 2-D DST-I: mode (p, q) has
/// eigenvalue lambda_p + kappa_q + c lambda_p kappa_q, c = (h1^2 + h2^2) / 12.
/// Known boundary values are moved to the right-hand side first.
///
/// An instance owns its transform plan and scratch buffer; use one instance
/// per thread.
class CompactPoissonSolver {
public:
  explicit CompactPoissonSolver(const Grid& grid);
  ~CompactPoissonSolver();
  CompactPoissonSolver(CompactPoissonSolver&&) noexcept;
  CompactPoissonSolver& operator=(CompactPoissonSolver&&) noexcept;
  CompactPoissonSolver(const CompactPoissonSolver&) = delete;
  CompactPoissonSolver& operator=(const CompactPoissonSolver&) = delete;

  const Grid& grid() const;

  GridFunction<double> solve(const InteriorField<double>& rhs,
                             const BoundaryFunction<double>& boundary);

  /// Solves Lambda* Y = psi*, Y = boundary on the boundary nodes.
  GridFunction<double> poisson_step(const GridFunction<double>& psi,
                                    const BoundaryFunction<double>& boundary) {
    return solve(rhs_star(psi), boundary);
  }

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrappers; each builds a solver for the grid.
GridFunction<double> solve_compact_poisson(const CompactPoissonSystem& sys);
GridFunction<double> poisson_step(const GridFunction<double>& psi,
                                  const BoundaryFunction<double>& boundary);

}  // namespace trisolve
