#pragma once

#include "trisolve/fast_poisson.hpp"
#include "trisolve/grid.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisolve {

/// f(x1, x2, u, v, w) with v standing for Laplace(u) and w for Laplace^2(u).
using Nonlinearity = std::function<double(double x1, double x2, double u, double v, double w)>;
using PlanarFunction = std::function<double(double x1, double x2)>;
/// Boundary datum that may depend on which edge the node belongs to.
using EdgeFunction = std::function<double(double x1, double x2, Edge edge)>;

/// Laplace^3 u = f(x, u, Laplace u, Laplace^2 u) on a rectangle with
/// u = g1, du/dnu = g2 (outward), Laplace u = g3 on the boundary.
/// Empty boundary functions mean zero data; an empty exact_solution means
/// no reference solution is known.
struct ProblemSpec {
  std::string name;
  Nonlinearity f;
  PlanarFunction g1;
  EdgeFunction g2;
  PlanarFunction g3;
  PlanarFunction exact_solution;

  bool has_exact_solution() const { return static_cast<bool>(exact_solution); }
  bool homogeneous() const { return !g1 && !g2 && !g3; }
};

enum class StopCriterion {
  ExactError,      // max|u* - U_k| <= h1^4 + h2^4
  SuccessiveDiff,  // max|U_k - U_{k-1}| <= tol
};

struct SolverConfig {
  double tau = 150.0;
  StopCriterion stop = StopCriterion::ExactError;
  double tol = 1e-6;
  int max_iter = 10000;
  /// Abort once the error metric exceeds this multiple of its running minimum.
  double divergence_factor = 1e6;

  void validate() const;
};

/// Z_k = (Phi_k, G_k) plus the latest inner solves.
struct IterationState {
  GridFunction<double> Phi;
  BoundaryFunction<double> G;
  GridFunction<double> U, V, W;

  explicit IterationState(const Grid& grid) : Phi(grid), G(grid), U(grid), V(grid), W(grid) {}
};

enum class Termination { Converged, MaxIterations, Diverged };

const char* to_string(Termination t);

struct IterationReport {
  int iterations = 0;
  /// E^h(k) or e^h(k) after each iteration. Under SuccessiveDiff the values
  /// are differences of iterates, not errors.
  std::vector<double> history;
  Termination termination = Termination::MaxIterations;
  double final_error = 0.0;
};

struct SolveResult {
  GridFunction<double> U, V, W;
  IterationReport report;
};

/// Raised when f produces a non-finite value.
class NonFiniteError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Fixed-point driver bound to one problem and one grid. Owns the inner
/// Poisson solver and the sampled boundary data.
class TriharmonicSolver {
public:
  TriharmonicSolver(ProblemSpec problem, const Grid& grid);

  const Grid& grid() const { return grid_; }
  const ProblemSpec& problem() const { return problem_; }

  /// Phi_0 = f(x, 0, 0, 0) on the closed grid, G_0 = 0.
  IterationState initialize() const;

  /// The three Dirichlet solves for W, V, U from (Phi_k, G_k).
  void solve_inner(IterationState& state);

  /// Phi_{k+1} = f(x, U_k, V_k, W_k) and G_{k+1} = G_k + tau (D_nu U_k - g2).
  void update(IterationState& state, double tau) const;

  IterationState iterate_once(IterationState state, double tau) {
    solve_inner(state);
    update(state, tau);
    return state;
  }

  SolveResult solve(const SolverConfig& config);

private:
  GridFunction<double> evaluate_f(const GridFunction<double>& U, const GridFunction<double>& V,
                                  const GridFunction<double>& W) const;

  ProblemSpec problem_;
  Grid grid_;
  CompactPoissonSolver poisson_;
  BoundaryFunction<double> g1_, g2_, g3_;
};

IterationState initialize(const ProblemSpec& problem, const Grid& grid);
IterationState iterate_once(const IterationState& state, const ProblemSpec& problem,
                            const Grid& grid, double tau);
SolveResult solve(const ProblemSpec& problem, const Grid& grid, const SolverConfig& config);

}  // namespace trisolve
