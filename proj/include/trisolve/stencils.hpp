#pragma once

#include "trisolve/grid.hpp"

namespace trisolve {

/// Values on the interior nodes i = 1..m-1, j = 1..n-1. operator() takes
/// grid indices; values() is the raw (m-1) x (n-1) array.
template <typename Scalar>
class InteriorField {
public:
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit InteriorField(const Grid& grid)
      : grid_(grid), values_(Array::Zero(grid.m() - 1, grid.n() - 1)) {}

  InteriorField(const Grid& grid, Array values) : grid_(grid), values_(std::move(values)) {
    if (values_.rows() != grid.m() - 1 || values_.cols() != grid.n() - 1)
      throw std::invalid_argument("InteriorField: array shape does not match grid");
  }

  /// Interior restriction of a closed-grid function.
  static InteriorField interior_of(const GridFunction<Scalar>& F) {
    const Grid& g = F.grid();
    return InteriorField(g, F.values().block(1, 1, g.m() - 1, g.n() - 1));
  }

  const Grid& grid() const { return grid_; }
  const Array& values() const { return values_; }
  Array& values() { return values_; }

  Scalar& operator()(int i, int j) { return values_(i - 1, j - 1); }
  Scalar operator()(int i, int j) const { return values_(i - 1, j - 1); }

private:
  Grid grid_;
  Array values_;
};

template <typename Scalar>
Scalar max_norm(const InteriorField<Scalar>& F) {
  return F.values().abs().maxCoeff();
}

namespace detail {

// Second difference in x1 over rows 1..m-1, for the column range [c0, c0+nc).
template <typename Derived>
auto second_diff_rows(const Eigen::ArrayBase<Derived>& Y, Eigen::Index c0, Eigen::Index nc) {
  const Eigen::Index r = Y.rows() - 2;
  return Y.block(0, c0, r, nc) - typename Derived::Scalar(2) * Y.block(1, c0, r, nc) + Y.block(2, c0, r, nc);
}

// Second difference in x2 over columns 1..n-1, for the row range [r0, r0+nr).
template <typename Derived>
auto second_diff_cols(const Eigen::ArrayBase<Derived>& Y, Eigen::Index r0, Eigen::Index nr) {
  const Eigen::Index c = Y.cols() - 2;
  return Y.block(r0, 0, nr, c) - typename Derived::Scalar(2) * Y.block(r0, 1, nr, c) + Y.block(r0, 2, nr, c);
}

}  // namespace detail

/// Lambda_1 Y = (Y[i-1,j] - 2 Y[i,j] + Y[i+1,j]) / h1^2 at interior nodes.
template <typename Scalar>
InteriorField<Scalar> apply_lambda1(const GridFunction<Scalar>& Y) {
  const Grid& g = Y.grid();
  const Scalar inv = Scalar(1) / (g.h1() * g.h1());
  return InteriorField<Scalar>(g, inv * detail::second_diff_rows(Y.values(), 1, g.n() - 1));
}

/// Lambda_2 Y = (Y[i,j-1] - 2 Y[i,j] + Y[i,j+1]) / h2^2 at interior nodes.
template <typename Scalar>
InteriorField<Scalar> apply_lambda2(const GridFunction<Scalar>& Y) {
  const Grid& g = Y.grid();
  const Scalar inv = Scalar(1) / (g.h2() * g.h2());
  return InteriorField<Scalar>(g, inv * detail::second_diff_cols(Y.values(), 1, g.m() - 1));
}

/// Lambda_1 Lambda_2 Y as the nine-point product stencil. The x2 difference is
/// taken on every row including i = 0 and i = m, so only closed-grid values
/// in the 3x3 neighbourhood of each interior node are read.
template <typename Scalar>
InteriorField<Scalar> apply_lambda12(const GridFunction<Scalar>& Y) {
  const Grid& g = Y.grid();
  const Scalar inv = Scalar(1) / (g.h1() * g.h1() * g.h2() * g.h2());
  using Array = typename GridFunction<Scalar>::Array;
  const Array d2 = detail::second_diff_cols(Y.values(), 0, g.m() + 1);
  return InteriorField<Scalar>(g, inv * detail::second_diff_rows(d2, 0, g.n() - 1));
}

/// Compact fourth-order operator:
/// Lambda* Y = (Lambda_1 + Lambda_2) Y + (h1^2 + h2^2) / 12 * Lambda_1 Lambda_2 Y.
template <typename Scalar>
InteriorField<Scalar> apply_lambda_star(const GridFunction<Scalar>& Y) {
  const Grid& g = Y.grid();
  const Scalar c = (g.h1() * g.h1() + g.h2() * g.h2()) / 12;
  InteriorField<Scalar> out = apply_lambda1(Y);
  out.values() += apply_lambda2(Y).values() + c * apply_lambda12(Y).values();
  return out;
}

/// Right-hand side paired with Lambda*:
/// psi* = psi + h1^2/12 Lambda_1 psi + h2^2/12 Lambda_2 psi.
template <typename Scalar>
InteriorField<Scalar> rhs_star(const GridFunction<Scalar>& psi) {
  const Grid& g = psi.grid();
  const auto& p = psi.values();
  const Eigen::Index mi = g.m() - 1, ni = g.n() - 1;
  typename InteriorField<Scalar>::Array out = p.block(1, 1, mi, ni);
  out += detail::second_diff_rows(p, 1, ni) / Scalar(12);
  out += detail::second_diff_cols(p, 1, mi) / Scalar(12);
  return InteriorField<Scalar>(g, std::move(out));
}

/// Fourth-order one-sided outward normal derivative at boundary node (i, j),
/// using the five-point formula along the grid line normal to `edge`.
template <typename Scalar>
Scalar normal_derivative_at(const GridFunction<Scalar>& U, int i, int j, Edge edge) {
  const Grid& g = U.grid();
  auto five = [](Scalar u0, Scalar u1, Scalar u2, Scalar u3, Scalar u4) {
    return Scalar(25) * u0 - Scalar(48) * u1 + Scalar(36) * u2 - Scalar(16) * u3 + Scalar(3) * u4;
  };
  const int m = g.m(), n = g.n();
  switch (edge) {
    case Edge::Left:
      return five(U(0, j), U(1, j), U(2, j), U(3, j), U(4, j)) / (12 * g.h1());
    case Edge::Right:
      return five(U(m, j), U(m - 1, j), U(m - 2, j), U(m - 3, j), U(m - 4, j)) / (12 * g.h1());
    case Edge::Bottom:
      return five(U(i, 0), U(i, 1), U(i, 2), U(i, 3), U(i, 4)) / (12 * g.h2());
    case Edge::Top:
      return five(U(i, n), U(i, n - 1), U(i, n - 2), U(i, n - 3), U(i, n - 4)) / (12 * g.h2());
  }
  return Scalar(0);
}

/// Outward normal derivative D_nu U at every boundary node. Corners use the
/// x1-edge formula.
template <typename Scalar>
BoundaryFunction<Scalar> normal_derivative(const GridFunction<Scalar>& U) {
  BoundaryFunction<Scalar> out(U.grid());
  for (int k = 0; k < out.size(); ++k) {
    auto [i, j] = out.node(k);
    out[k] = normal_derivative_at(U, i, j, out.edge(k));
  }
  return out;
}

}  // namespace trisolve
