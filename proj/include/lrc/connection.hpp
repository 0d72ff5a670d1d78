#pragma once

#include <array>
#include <string_view>

#include "lrc/lie_algebra.hpp"

namespace lrc {

enum class Flavor { LeviCivita, Canonical, KobayashiNomizu };

std::string_view to_string(Flavor f);
/// "canonical", "kn" / "kobayashi-nomizu", "levi-civita" / "lc".
Flavor parse_flavor(std::string_view text);

/// Affine connection in the frame: nabla_{e_i} e_j = sum_k gamma[i](j, k) e_k.
template <typename Scalar = Rational>
struct Connection {
  std::array<Mat3<Scalar>, 3> gamma;
  Flavor flavor = Flavor::LeviCivita;

  const Scalar& operator()(int i, int j, int k) const { return gamma[i](j, k); }

  /// Matrix of nabla_{e_i} acting on column coordinate vectors.
  Mat3<Scalar> op(int i) const { return gamma[i].transpose(); }

  /// nabla_x as a matrix on column vectors.
  Mat3<Scalar> op(const Vec3<Scalar>& x) const {
    Mat3<Scalar> m = Mat3<Scalar>::Zero();
    for (int i = 0; i < 3; ++i) m += x(i) * gamma[i].transpose();
    return m;
  }

  Vec3<Scalar> apply(const Vec3<Scalar>& x, const Vec3<Scalar>& y) const { return op(x) * y; }

  template <typename T>
  Connection<T> cast() const {
    Connection<T> out;
    for (int i = 0; i < 3; ++i) out.gamma[i] = gamma[i].template cast<T>();
    out.flavor = flavor;
    return out;
  }
};

/// (nabla_{e_i} J) e_j = sum_k nj[i](j, k) e_k.
template <typename Scalar = Rational>
struct NablaJ {
  std::array<Mat3<Scalar>, 3> nj;

  const Scalar& operator()(int i, int j, int k) const { return nj[i](j, k); }
  Mat3<Scalar> op(int i) const { return nj[i].transpose(); }
};

/// Koszul formula for a left-invariant metric (the X g(Y,Z) terms vanish):
/// 2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
template <typename Scalar>
Connection<Scalar> levi_civita(const LieAlgebra3<Scalar>& a) {
  const auto& eps = Metric::signs;
  Connection<Scalar> lc;
  lc.flavor = Flavor::LeviCivita;
  for (int i = 0; i < 3; ++i) {
    lc.gamma[i].setZero();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Scalar rhs = a.constant(i, j, k) * Scalar(eps[k]) -
                           a.constant(j, k, i) * Scalar(eps[i]) +
                           a.constant(k, i, j) * Scalar(eps[j]);
        lc.gamma[i](j, k) = rhs * Scalar(eps[k]) / Scalar(2);
      }
  }
  return lc;
}

/// (nabla_{e_i} J) e_j = nabla_{e_i}(J e_j) - J(nabla_{e_i} e_j).
template <typename Scalar>
NablaJ<Scalar> nabla_J(const Connection<Scalar>& lc, const ProductStructure& = kJ) {
  const auto& d = ProductStructure::diagonal;
  NablaJ<Scalar> out;
  for (int i = 0; i < 3; ++i) {
    out.nj[i].setZero();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.nj[i](j, k) = lc.gamma[i](j, k) * Scalar(d[j] - d[k]);
  }
  return out;
}

/// nabla^0_X Y = nabla_X Y - 1/2 (nabla_X J) J Y.
template <typename Scalar>
Connection<Scalar> canonical_connection(const Connection<Scalar>& lc, const NablaJ<Scalar>& nj) {
  const auto& d = ProductStructure::diagonal;
  Connection<Scalar> out;
  out.flavor = Flavor::Canonical;
  for (int i = 0; i < 3; ++i) {
    out.gamma[i] = lc.gamma[i];
    for (int j = 0; j < 3; ++j)
      out.gamma[i].row(j) -= Scalar(d[j]) * nj.nj[i].row(j) / Scalar(2);
  }
  return out;
}

/// nabla^1_X Y = nabla^0_X Y - 1/4 [(nabla_Y J) J X - (nabla_{JY} J) X], with
/// nabla_{J e_j} J = +-nabla_{e_j} J by linearity in the direction slot.
template <typename Scalar>
Connection<Scalar> kobayashi_nomizu(const Connection<Scalar>& /*lc*/, const Connection<Scalar>& can,
                                    const NablaJ<Scalar>& nj) {
  const auto& d = ProductStructure::diagonal;
  Connection<Scalar> out;
  out.flavor = Flavor::KobayashiNomizu;
  for (int i = 0; i < 3; ++i) {
    out.gamma[i] = can.gamma[i];
    for (int j = 0; j < 3; ++j)
      out.gamma[i].row(j) -= Scalar(d[i] - d[j]) * nj.nj[j].row(i) / Scalar(4);
  }
  return out;
}

template <typename Scalar>
Connection<Scalar> connection_for(const LieAlgebra3<Scalar>& a, Flavor flavor) {
  const Connection<Scalar> lc = levi_civita(a);
  if (flavor == Flavor::LeviCivita) return lc;
  const NablaJ<Scalar> nj = nabla_J(lc);
  const Connection<Scalar> can = canonical_connection(lc, nj);
  if (flavor == Flavor::Canonical) return can;
  return kobayashi_nomizu(lc, can, nj);
}

/// T(e_i, e_j) = nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j].
template <typename Scalar>
Vec3<Scalar> torsion(const Connection<Scalar>& c, const LieAlgebra3<Scalar>& a, int i, int j) {
  return (c.gamma[i].row(j) - c.gamma[j].row(i)).transpose() - a.bracket_basis(i, j);
}

}  // namespace lrc
