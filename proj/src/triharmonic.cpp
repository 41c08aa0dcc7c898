#include "trisolve/triharmonic.hpp"

#include "trisolve/stencils.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace trisolve {

void SolverConfig::validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("SolverConfig: tau must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be at least 1");
  if (!(divergence_factor > 0.0))
    throw std::invalid_argument("SolverConfig: divergence_factor must be positive");
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::Converged: return "converged";
    case Termination::MaxIterations: return "max-iterations";
    case Termination::Diverged: return "diverged";
  }
  return "unknown";
}

namespace {

BoundaryFunction<double> sample_or_zero(const Grid& grid, const PlanarFunction& fn) {
  if (!fn) return BoundaryFunction<double>(grid);
  return BoundaryFunction<double>::sample(grid, [&](double x1, double x2, Edge) { return fn(x1, x2); });
}

}  // namespace

TriharmonicSolver::TriharmonicSolver(ProblemSpec problem, const Grid& grid)
    : problem_(std::move(problem)),
      grid_(grid),
      poisson_(grid),
      g1_(sample_or_zero(grid, problem_.g1)),
      g2_(problem_.g2 ? BoundaryFunction<double>::sample(grid, problem_.g2)
                      : BoundaryFunction<double>(grid)),
      g3_(sample_or_zero(grid, problem_.g3)) {
  if (!problem_.f) throw std::invalid_argument("ProblemSpec: nonlinearity f is required");
}

GridFunction<double> TriharmonicSolver::evaluate_f(const GridFunction<double>& U,
                                                   const GridFunction<double>& V,
                                                   const GridFunction<double>& W) const {
  GridFunction<double> Phi(grid_);
  for (int j = 0; j <= grid_.n(); ++j) {
    for (int i = 0; i <= grid_.m(); ++i) {
      const double x1 = grid_.x1(i), x2 = grid_.x2(j);
      const double value = problem_.f(x1, x2, U(i, j), V(i, j), W(i, j));
      if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "non-finite f at node (" << i << ", " << j << "), x = (" << x1 << ", " << x2
            << "), u = " << U(i, j) << ", v = " << V(i, j) << ", w = " << W(i, j);
        throw NonFiniteError(msg.str());
      }
      Phi(i, j) = value;
    }
  }
  return Phi;
}

IterationState TriharmonicSolver::initialize() const {
  IterationState state(grid_);
  state.Phi = evaluate_f(state.U, state.V, state.W);
  return state;
}

void TriharmonicSolver::solve_inner(IterationState& state) {
  state.W = poisson_.poisson_step(state.Phi, state.G);
  state.V = poisson_.poisson_step(state.W, g3_);
  state.U = poisson_.poisson_step(state.V, g1_);
}

void TriharmonicSolver::update(IterationState& state, double tau) const {
  // Both updates read the same (U_k, V_k, W_k); W on the boundary is still G_k.
  state.Phi = evaluate_f(state.U, state.V, state.W);
  const BoundaryFunction<double> dnu = normal_derivative(state.U);
  state.G.values() += tau * (dnu.values() - g2_.values());
}

SolveResult TriharmonicSolver::solve(const SolverConfig& config) {
  config.validate();
  const bool exact = config.stop == StopCriterion::ExactError;
  if (exact && !problem_.has_exact_solution())
    throw std::invalid_argument("solve: ExactError stopping needs an exact solution");

  GridFunction<double> u_star(grid_);
  if (exact) u_star = GridFunction<double>::sample(grid_, problem_.exact_solution);
  const double threshold =
      exact ? std::pow(grid_.h1(), 4) + std::pow(grid_.h2(), 4) : config.tol;

  IterationReport report;
  IterationState state = initialize();
  double running_min = std::numeric_limits<double>::infinity();

  for (int k = 1; k <= config.max_iter; ++k) {
    GridFunction<double> previous = state.U;
    solve_inner(state);
    const double metric = exact ? diff_norm(u_star, state.U) : diff_norm(state.U, previous);
    report.iterations = k;
    report.history.push_back(metric);
    report.final_error = metric;

    if (!std::isfinite(metric) || metric > config.divergence_factor * running_min) {
      report.termination = Termination::Diverged;
      break;
    }
    running_min = std::min(running_min, metric);
    if (metric <= threshold) {
      report.termination = Termination::Converged;
      break;
    }
    if (k == config.max_iter) {
      report.termination = Termination::MaxIterations;
      break;
    }
    update(state, config.tau);
  }
  return SolveResult{std::move(state.U), std::move(state.V), std::move(state.W), std::move(report)};
}

IterationState initialize(const ProblemSpec& problem, const Grid& grid) {
  return TriharmonicSolver(problem, grid).initialize();
}

IterationState iterate_once(const IterationState& state, const ProblemSpec& problem,
                            const Grid& grid, double tau) {
  return TriharmonicSolver(problem, grid).iterate_once(state, tau);
}

SolveResult solve(const ProblemSpec& problem, const Grid& grid, const SolverConfig& config) {
  return TriharmonicSolver(problem, grid).solve(config);
}

}  // namespace trisolve
