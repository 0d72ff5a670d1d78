#pragma once

#include <array>

#include "lrc/connection.hpp"

namespace lrc {

/// Bilinear form T(e_i, e_j) in the frame.
template <typename Scalar>
using BilinearForm = Mat3<Scalar>;

/// Row-convention operator: row i is the image of e_i.
template <typename Scalar>
using OperatorMatrix = Mat3<Scalar>;

/// R(e_i, e_j) stored as matrices acting on column vectors, so that
/// R(e_i,e_j) e_k = sum_l r(i,j,k,l) e_l with r(i,j,k,l) = ops[i][j](l, k).
template <typename Scalar = Rational>
struct CurvatureTensor {
  std::array<std::array<Mat3<Scalar>, 3>, 3> ops;

  const Scalar& r(int i, int j, int k, int l) const { return ops[i][j](l, k); }
  const Mat3<Scalar>& op(int i, int j) const { return ops[i][j]; }
};

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
template <typename Scalar>
CurvatureTensor<Scalar> curvature(const Connection<Scalar>& c, const LieAlgebra3<Scalar>& a) {
  std::array<Mat3<Scalar>, 3> n;
  for (int i = 0; i < 3; ++i) n[i] = c.op(i);
  CurvatureTensor<Scalar> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.ops[i][j] = n[i] * n[j] - n[j] * n[i] - c.op(a.bracket_basis(i, j));
  return out;
}

/// Ric(X,Y) = -g(R(X,e1)Y,e1) - g(R(X,e2)Y,e2) + g(R(X,e3)Y,e3).
template <typename Scalar>
BilinearForm<Scalar> ricci_form(const CurvatureTensor<Scalar>& r) {
  const auto& eps = Metric::signs;
  BilinearForm<Scalar> t = BilinearForm<Scalar>::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        // -eps_k * g(R(e_i,e_k)e_j, e_k) = -eps_k^2 r(i,k,j,k)
        t(i, j) -= Scalar(eps[k] * eps[k]) * r.r(i, k, j, k);
  return t;
}

template <typename Derived>
auto symmetrize(const Eigen::MatrixBase<Derived>& t) {
  using Scalar = typename Derived::Scalar;
  return BilinearForm<Scalar>((t + t.transpose()) / Scalar(2));
}

/// T(e_i, e_j) = g(A e_i, e_j) = a(i, j) eps_j.
template <typename Derived>
auto operator_to_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  BilinearForm<Scalar> t = a;
  for (int j = 0; j < 3; ++j) t.col(j) *= Scalar(Metric::signs[j]);
  return t;
}

/// Inverse of operator_to_form (eps_j^2 = 1).
template <typename Derived>
auto form_to_operator(const Eigen::MatrixBase<Derived>& t) {
  return operator_to_form(t);
}

template <typename Scalar>
BilinearForm<Scalar> symmetric_ricci(const LieAlgebra3<Scalar>& a, Flavor flavor) {
  return symmetrize(ricci_form(curvature(connection_for(a, flavor), a)));
}

}  // namespace lrc
