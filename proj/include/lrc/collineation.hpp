#pragma once

#include <array>
#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "lrc/curvature.hpp"

namespace lrc {

/// Component order of the six independent rows of a symmetric system.
inline constexpr std::array<std::pair<int, int>, 6> kSystemRows{
    {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

/// (L_xi T)(e_i, e_j) = -T([xi,e_i], e_j) - T(e_i, [xi,e_j]). The xi(T(X,Y))
/// term is absent: T has constant components in a left-invariant frame.
template <typename Scalar>
BilinearForm<Scalar> lie_derivative_form(const BilinearForm<Scalar>& t, const Vec3<Scalar>& xi,
                                         const LieAlgebra3<Scalar>& a) {
  const Mat3<Scalar> m = a.ad(xi);
  return -(m.transpose() * t + t * m);
}

/// Entry (row (i,j), column k) = (L_{e_k} T)(e_i, e_j).
template <typename Scalar>
SystemMatrix<Scalar> assemble_system(const BilinearForm<Scalar>& t, const LieAlgebra3<Scalar>& a) {
  SystemMatrix<Scalar> s;
  for (int k = 0; k < 3; ++k) {
    const BilinearForm<Scalar> l = lie_derivative_form(t, basis_vector<Scalar>(k), a);
    for (int r = 0; r < 6; ++r) s(r, k) = l(kSystemRows[r].first, kSystemRows[r].second);
  }
  return s;
}

template <typename Scalar>
struct RrefResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix;
  std::vector<int> pivots;  // pivot column of row r, ascending

  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan elimination to reduced row-echelon form. Pivots are
/// normalized to 1 and every other entry in a pivot column is cleared, which
/// makes the result a unique representative of the row space. For double the
/// pivot with largest magnitude is chosen; for exact scalars the first
/// nonzero.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& in) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out{in, {}};
  auto& m = out.matrix;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      if constexpr (std::is_floating_point_v<Scalar>) {
        if (p < 0 || std::abs(m(i, c)) > std::abs(m(p, c))) p = i;
      } else {
        p = i;
        break;
      }
    }
    if (p < 0) {
      if constexpr (std::is_floating_point_v<Scalar>)
        for (Eigen::Index i = r; i < rows; ++i) m(i, c) = Scalar(0);
      continue;
    }
    m.row(r).swap(m.row(p));
    const Scalar inv = Scalar(1) / m(r, c);
    m.row(r) *= inv;
    m(r, c) = Scalar(1);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      m.row(i) -= f * m.row(r);
      m(i, c) = Scalar(0);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return out;
}

/// A subspace of the Lie algebra in canonical form: basis rows are the
/// nonzero rows of an RREF matrix.
template <typename Scalar = Rational>
struct SolutionSpace {
  RowBasis<Scalar> basis = RowBasis<Scalar>(0, 3);

  int dimension() const { return static_cast<int>(basis.rows()); }

  static SolutionSpace trivial() { return {}; }
  static SolutionSpace full() {
    SolutionSpace s;
    s.basis = Mat3<Scalar>::Identity();
    return s;
  }

  friend bool operator==(const SolutionSpace& a, const SolutionSpace& b) {
    if (a.basis.rows() != b.basis.rows()) return false;
    for (Eigen::Index i = 0; i < a.basis.rows(); ++i)
      for (int j = 0; j < 3; ++j)
        if (!is_zero(Scalar(a.basis(i, j) - b.basis(i, j)))) return false;
    return true;
  }
};

/// Canonical representative of span(rows of `rows`).
template <typename Derived>
SolutionSpace<typename Derived::Scalar> canonical_span(const Eigen::MatrixBase<Derived>& rows) {
  using Scalar = typename Derived::Scalar;
  const auto red = rref(rows);
  SolutionSpace<Scalar> s;
  s.basis = red.matrix.topRows(red.rank());
  return s;
}

/// Null space of an n x 3 system, in canonical form.
template <typename Derived>
SolutionSpace<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& system) {
  using Scalar = typename Derived::Scalar;
  const auto red = rref(system);
  const int cols = static_cast<int>(system.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int p : red.pivots) is_pivot[p] = true;
  RowBasis<Scalar> raw(cols - red.rank(), 3);
  int n = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec3<Scalar> v = Vec3<Scalar>::Zero();
    v(f) = Scalar(1);
    for (int r = 0; r < red.rank(); ++r) v(red.pivots[r]) = -red.matrix(r, f);
    raw.row(n++) = v.transpose();
  }
  return canonical_span(raw);
}

template <typename Scalar>
bool annihilates(const SystemMatrix<Scalar>& s, const Vec3<Scalar>& v) {
  const Eigen::Matrix<Scalar, 6, 1> r = s * v;
  for (int i = 0; i < 6; ++i)
    if (!is_zero(r(i))) return false;
  return true;
}

template <typename Scalar>
SolutionSpace<Scalar> collineation_space(const LieAlgebra3<Scalar>& a, Flavor flavor) {
  return null_space(assemble_system(symmetric_ricci(a, flavor), a));
}

}  // namespace lrc
