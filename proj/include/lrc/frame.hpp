#pragma once

// Frame-level linear algebra in the pseudo-orthonormal basis e1, e2, e3
// (e3 timelike). Everything downstream is constant-coefficient algebra in
// this frame.

#include <array>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "lrc/rational.hpp"

namespace lrc {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

/// Rows (1,1),(1,2),(1,3),(2,2),(2,3),(3,3); column k is the coefficient of
/// lambda_k.
template <typename Scalar>
using SystemMatrix = Eigen::Matrix<Scalar, 6, 3>;

template <typename Scalar>
using RowBasis = Eigen::Matrix<Scalar, Eigen::Dynamic, 3>;

template <typename Scalar = Rational>
Vec3<Scalar> basis_vector(int i) {
  Vec3<Scalar> v = Vec3<Scalar>::Zero();
  v(i) = Scalar(1);
  return v;
}

/// Lorentzian metric g = diag(+1, +1, -1).
struct Metric {
  static constexpr std::array<int, 3> signs{1, 1, -1};

  template <typename Scalar>
  static Mat3<Scalar> matrix() {
    Mat3<Scalar> g = Mat3<Scalar>::Zero();
    for (int i = 0; i < 3; ++i) g(i, i) = Scalar(signs[i]);
    return g;
  }

  template <typename Scalar>
  Scalar operator()(const Vec3<Scalar>& x, const Vec3<Scalar>& y) const {
    Scalar s(0);
    for (int i = 0; i < 3; ++i) s += Scalar(signs[i]) * x(i) * y(i);
    return s;
  }
};

/// Product structure J = diag(+1, +1, -1); J^2 = id and J is a g-isometry.
struct ProductStructure {
  static constexpr std::array<int, 3> diagonal{1, 1, -1};

  template <typename Scalar>
  static Mat3<Scalar> matrix() {
    Mat3<Scalar> j = Mat3<Scalar>::Zero();
    for (int i = 0; i < 3; ++i) j(i, i) = Scalar(diagonal[i]);
    return j;
  }

  template <typename Scalar>
  Vec3<Scalar> operator()(const Vec3<Scalar>& x) const {
    Vec3<Scalar> y = x;
    for (int i = 0; i < 3; ++i) y(i) *= Scalar(diagonal[i]);
    return y;
  }
};

inline constexpr Metric kMetric{};
inline constexpr ProductStructure kJ{};

}  // namespace lrc
