#include "trisolve/fast_poisson.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace trisolve {

namespace {

// The FFTW planner is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

double lambda1_eigenvalue(const Grid& grid, int p) {
  const double s = std::sin(p * std::numbers::pi / (2.0 * grid.m()));
  return -4.0 / (grid.h1() * grid.h1()) * s * s;
}

double lambda2_eigenvalue(const Grid& grid, int q) {
  const double s = std::sin(q * std::numbers::pi / (2.0 * grid.n()));
  return -4.0 / (grid.h2() * grid.h2()) * s * s;
}

struct CompactPoissonSolver::Impl {
  Grid grid;
  int mi, ni;  // interior extents
  double* buffer = nullptr;
  fftw_plan plan = nullptr;
  // Inverse eigenvalues including the DST-I round-trip normalisation 1/(4 m n).
  Eigen::ArrayXXd scaled_inverse;

  explicit Impl(const Grid& g) : grid(g), mi(g.m() - 1), ni(g.n() - 1) {
    const double c = (g.h1() * g.h1() + g.h2() * g.h2()) / 12.0;
    const double floor = 1e-14 * (1.0 / (g.h1() * g.h1()) + 1.0 / (g.h2() * g.h2()));
    const double norm = 4.0 * g.m() * g.n();
    scaled_inverse.resize(mi, ni);
    for (int q = 1; q <= ni; ++q) {
      const double kappa = lambda2_eigenvalue(g, q);
      for (int p = 1; p <= mi; ++p) {
        const double lambda = lambda1_eigenvalue(g, p);
        const double eig = lambda + kappa + c * lambda * kappa;
        if (std::abs(eig) < floor)
          throw SingularOperatorError("CompactPoissonSolver: vanishing eigenvalue for mode (" +
                                      std::to_string(p) + ", " + std::to_string(q) + ")");
        scaled_inverse(p - 1, q - 1) = 1.0 / (eig * norm);
      }
    }

    buffer = fftw_alloc_real(static_cast<size_t>(mi) * ni);
    if (!buffer) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    // Column-major (mi x ni): the slowest FFTW dimension is the column index.
    plan = fftw_plan_r2r_2d(ni, mi, buffer, buffer, FFTW_RODFT00, FFTW_RODFT00, FFTW_ESTIMATE);
    if (!plan) {
      fftw_free(buffer);
      throw std::runtime_error("CompactPoissonSolver: failed to create DST plan");
    }
  }

  ~Impl() {
    if (plan) {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan);
    }
    fftw_free(buffer);
  }

  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;
};

CompactPoissonSolver::CompactPoissonSolver(const Grid& grid) : impl_(std::make_unique<Impl>(grid)) {}
CompactPoissonSolver::~CompactPoissonSolver() = default;
CompactPoissonSolver::CompactPoissonSolver(CompactPoissonSolver&&) noexcept = default;
CompactPoissonSolver& CompactPoissonSolver::operator=(CompactPoissonSolver&&) noexcept = default;

const Grid& CompactPoissonSolver::grid() const { return impl_->grid; }

GridFunction<double> CompactPoissonSolver::solve(const InteriorField<double>& rhs,
                                                 const BoundaryFunction<double>& boundary) {
  Impl& s = *impl_;
  require_same_grid(s.grid, rhs.grid(), "CompactPoissonSolver::solve (rhs)");
  require_same_grid(s.grid, boundary.grid(), "CompactPoissonSolver::solve (boundary)");

  // Lift: Y = Y_b + Z with Y_b carrying the boundary data and zero interior,
  // so Lambda* Z = rhs - Lambda* Y_b with homogeneous boundary.
  GridFunction<double> Y(s.grid);
  boundary.write_to(Y);
  Eigen::Map<Eigen::ArrayXXd> work(s.buffer, s.mi, s.ni);
  work = rhs.values() - apply_lambda_star(Y).values();

  fftw_execute(s.plan);
  work *= s.scaled_inverse;
  fftw_execute(s.plan);

  Y.values().block(1, 1, s.mi, s.ni) = work;
  return Y;
}

GridFunction<double> solve_compact_poisson(const CompactPoissonSystem& sys) {
  CompactPoissonSolver solver(sys.rhs.grid());
  return solver.solve(sys.rhs, sys.boundary);
}

GridFunction<double> poisson_step(const GridFunction<double>& psi,
                                  const BoundaryFunction<double>& boundary) {
  CompactPoissonSolver solver(psi.grid());
  return solver.poisson_step(psi, boundary);
}

}  // namespace trisolve
