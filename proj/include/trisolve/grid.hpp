#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace trisolve {

/// Uniform grid on the rectangle [0, l1] x [0, l2] with m x n intervals.
/// Node (i, j) sits at (i * h1, j * h2), i = 0..m, j = 0..n.
class Grid {
public:
  /// Smallest interval count per direction; the one-sided normal derivative
  /// reads five nodes along each grid line.
  static constexpr int kMinIntervals = 5;

  Grid(double l1, double l2, int m, int n) : l1_(l1), l2_(l2), m_(m), n_(n) {
    if (!(l1 > 0.0) || !(l2 > 0.0) || !std::isfinite(l1) || !std::isfinite(l2))
      throw std::invalid_argument("Grid: edge lengths must be positive and finite");
    if (m < kMinIntervals || n < kMinIntervals)
      throw std::invalid_argument("Grid: need at least " + std::to_string(kMinIntervals) +
                                  " intervals per direction, got m=" + std::to_string(m) +
                                  ", n=" + std::to_string(n));
    h1_ = l1 / m;
    h2_ = l2 / n;
  }

  double l1() const { return l1_; }
  double l2() const { return l2_; }
  int m() const { return m_; }
  int n() const { return n_; }
  double h1() const { return h1_; }
  double h2() const { return h2_; }

  double x1(int i) const { return i * h1_; }
  double x2(int j) const { return j * h2_; }

  bool is_boundary(int i, int j) const { return i == 0 || j == 0 || i == m_ || j == n_; }

  /// Number of nodes on the boundary set, each corner counted once.
  int boundary_size() const { return 2 * (m_ + 1) + 2 * (n_ - 1); }

  /// True if this grid is the exact 2x refinement of `coarse`.
  bool refines(const Grid& coarse) const {
    return m_ == 2 * coarse.m_ && n_ == 2 * coarse.n_ && l1_ == coarse.l1_ && l2_ == coarse.l2_;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.l1_ == b.l1_ && a.l2_ == b.l2_;
  }

private:
  double l1_, l2_;
  int m_, n_;
  double h1_ = 0.0, h2_ = 0.0;
};

inline Grid make_grid(double l1, double l2, int m, int n) { return Grid(l1, l2, m, n); }

/// Square N x N grid on the unit square.
inline Grid unit_square(int N) { return Grid(1.0, 1.0, N, N); }

inline void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (!(a == b))
    throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

/// Values on every node of the closed grid, stored as an (m+1) x (n+1) array.
template <typename Scalar>
class GridFunction {
public:
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit GridFunction(const Grid& grid)
      : grid_(grid), values_(Array::Zero(grid.m() + 1, grid.n() + 1)) {}

  GridFunction(const Grid& grid, Array values) : grid_(grid), values_(std::move(values)) {
    if (values_.rows() != grid.m() + 1 || values_.cols() != grid.n() + 1)
      throw std::invalid_argument("GridFunction: array shape does not match grid");
  }

  static GridFunction constant(const Grid& grid, Scalar c) {
    return GridFunction(grid, Array::Constant(grid.m() + 1, grid.n() + 1, c));
  }

  /// Samples fn(x1, x2) at every node.
  template <typename Fn>
  static GridFunction sample(const Grid& grid, Fn&& fn) {
    GridFunction out(grid);
    for (int j = 0; j <= grid.n(); ++j)
      for (int i = 0; i <= grid.m(); ++i)
        out(i, j) = static_cast<Scalar>(fn(grid.x1(i), grid.x2(j)));
    return out;
  }

  const Grid& grid() const { return grid_; }
  const Array& values() const { return values_; }
  Array& values() { return values_; }

  Scalar& operator()(int i, int j) { return values_(i, j); }
  Scalar operator()(int i, int j) const { return values_(i, j); }

  bool all_finite() const { return values_.isFinite().all(); }

  GridFunction& operator+=(const GridFunction& o) {
    require_same_grid(grid_, o.grid_, "GridFunction +=");
    values_ += o.values_;
    return *this;
  }
  GridFunction& operator-=(const GridFunction& o) {
    require_same_grid(grid_, o.grid_, "GridFunction -=");
    values_ -= o.values_;
    return *this;
  }
  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(Scalar s, GridFunction a) {
    a.values_ *= s;
    return a;
  }

private:
  Grid grid_;
  Array values_;
};

/// Which edge of the rectangle a boundary node belongs to. Corners are
/// attributed to the x1 edges (Left/Right).
enum class Edge { Left, Right, Bottom, Top };

/// Values on the boundary nodes only. Enumeration order: the x1 = 0 column
/// (j = 0..n), the x1 = l1 column (j = 0..n), then the x2 = 0 row and the
/// x2 = l2 row without their corners (i = 1..m-1).
template <typename Scalar>
class BoundaryFunction {
public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit BoundaryFunction(const Grid& grid)
      : grid_(grid), values_(Vector::Zero(grid.boundary_size())) {}

  static BoundaryFunction constant(const Grid& grid, Scalar c) {
    BoundaryFunction out(grid);
    out.values_.setConstant(c);
    return out;
  }

  /// Samples fn(x1, x2, edge) at every boundary node.
  template <typename Fn>
  static BoundaryFunction sample(const Grid& grid, Fn&& fn) {
    BoundaryFunction out(grid);
    for (int k = 0; k < out.size(); ++k) {
      auto [i, j] = out.node(k);
      out.values_(k) = static_cast<Scalar>(fn(grid.x1(i), grid.x2(j), out.edge(k)));
    }
    return out;
  }

  /// Boundary trace of a grid function.
  static BoundaryFunction trace(const GridFunction<Scalar>& F) {
    BoundaryFunction out(F.grid());
    for (int k = 0; k < out.size(); ++k) {
      auto [i, j] = out.node(k);
      out.values_(k) = F(i, j);
    }
    return out;
  }

  const Grid& grid() const { return grid_; }
  int size() const { return static_cast<int>(values_.size()); }
  const Vector& values() const { return values_; }
  Vector& values() { return values_; }

  Scalar& operator[](int k) { return values_(k); }
  Scalar operator[](int k) const { return values_(k); }

  /// Grid indices (i, j) of the k-th boundary node.
  std::pair<int, int> node(int k) const {
    const int m = grid_.m(), n = grid_.n();
    if (k <= n) return {0, k};
    k -= n + 1;
    if (k <= n) return {m, k};
    k -= n + 1;
    if (k < m - 1) return {k + 1, 0};
    k -= m - 1;
    return {k + 1, n};
  }

  Edge edge(int k) const {
    const int n = grid_.n(), m = grid_.m();
    if (k <= n) return Edge::Left;
    if (k <= 2 * n + 1) return Edge::Right;
    if (k < 2 * n + 2 + (m - 1)) return Edge::Bottom;
    return Edge::Top;
  }

  /// Inverse of node(); (i, j) must be a boundary node.
  int index(int i, int j) const {
    const int m = grid_.m(), n = grid_.n();
    if (i == 0) return j;
    if (i == m) return n + 1 + j;
    if (j == 0) return 2 * (n + 1) + (i - 1);
    if (j == n) return 2 * (n + 1) + (m - 1) + (i - 1);
    throw std::out_of_range("BoundaryFunction::index: interior node");
  }

  Scalar at(int i, int j) const { return values_(index(i, j)); }

  /// Writes these values onto the boundary nodes of F.
  void write_to(GridFunction<Scalar>& F) const {
    require_same_grid(grid_, F.grid(), "BoundaryFunction::write_to");
    for (int k = 0; k < size(); ++k) {
      auto [i, j] = node(k);
      F(i, j) = values_(k);
    }
  }

private:
  Grid grid_;
  Vector values_;
};

template <typename Scalar>
Scalar max_norm(const GridFunction<Scalar>& F) {
  return F.values().abs().maxCoeff();
}

template <typename Scalar>
Scalar max_norm(const BoundaryFunction<Scalar>& B) {
  return B.values().cwiseAbs().maxCoeff();
}

template <typename Scalar>
Scalar diff_norm(const GridFunction<Scalar>& F, const GridFunction<Scalar>& G) {
  require_same_grid(F.grid(), G.grid(), "diff_norm");
  return (F.values() - G.values()).abs().maxCoeff();
}

/// Injection from a 2x refined grid: coarse(i, j) = fine(2i, 2j).
template <typename Scalar>
GridFunction<Scalar> restrict_to_coarse(const GridFunction<Scalar>& fine, const Grid& coarse) {
  if (!fine.grid().refines(coarse))
    throw std::invalid_argument("restrict_to_coarse: fine grid is not a 2x refinement of coarse");
  using Array = typename GridFunction<Scalar>::Array;
  const Eigen::Index rows = coarse.m() + 1, cols = coarse.n() + 1;
  const Array& f = fine.values();
  Array out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = f(2 * i, 2 * j);
  return GridFunction<Scalar>(coarse, std::move(out));
}

using GridFunctiond = GridFunction<double>;
using BoundaryFunctiond = BoundaryFunction<double>;

}  // namespace trisolve
