#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lrc/frame.hpp"

namespace lrc {

enum class Family { G1, G2, G3, G4, G5, G6, G7, Custom };

std::string_view to_string(Family f);
/// Accepts "G1".."G7" and "Custom" (case-insensitive). Throws
/// std::invalid_argument otherwise.
Family parse_family(std::string_view text);

/// Scalar parameters of a family. eta is present only for G4.
struct Params {
  Rational alpha{0};
  Rational beta{0};
  Rational gamma{0};
  Rational delta{0};
  std::optional<int> eta;

  friend bool operator==(const Params&, const Params&) = default;
};

/// Lexicographic on (alpha, beta, gamma, delta, eta); absent eta sorts first.
bool params_less(const Params& a, const Params& b);

/// Thrown when a parameter record breaks a family's defining (in)equality.
class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when structure constants fail the Jacobi identity.
class JacobiFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Three-dimensional Lie algebra given by structure constants in the frame:
/// [e_i, e_j] = sum_k c(i, j, k) e_k. Antisymmetry is enforced on
/// construction; Jacobi is checked by the factories, not assumed.
template <typename Scalar = Rational>
class LieAlgebra3 {
 public:
  /// blocks[i](j, k) = c(i, j, k).
  using Constants = std::array<Mat3<Scalar>, 3>;

  explicit LieAlgebra3(Constants c, Family family = Family::Custom, Params params = {})
      : c_(std::move(c)), family_(family), params_(std::move(params)) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (!is_zero(Scalar(c_[i](j, k) + c_[j](i, k))))
            throw std::invalid_argument("structure constants are not antisymmetric");
  }

  /// Builds from the three independent brackets [e1,e2], [e1,e3], [e2,e3].
  static LieAlgebra3 from_brackets(const Vec3<Scalar>& e12, const Vec3<Scalar>& e13,
                                   const Vec3<Scalar>& e23, Family family = Family::Custom,
                                   Params params = {}) {
    Constants c;
    for (auto& m : c) m.setZero();
    auto set = [&c](int i, int j, const Vec3<Scalar>& v) {
      c[i].row(j) = v.transpose();
      c[j].row(i) = -v.transpose();
    };
    set(0, 1, e12);
    set(0, 2, e13);
    set(1, 2, e23);
    return LieAlgebra3(std::move(c), family, std::move(params));
  }

  const Scalar& constant(int i, int j, int k) const { return c_[i](j, k); }
  const Constants& constants() const { return c_; }
  Family family() const { return family_; }
  const Params& params() const { return params_; }

  /// [e_i, e_j].
  Vec3<Scalar> bracket_basis(int i, int j) const { return c_[i].row(j).transpose(); }

  /// Matrix of ad_x: column j holds [x, e_j].
  Mat3<Scalar> ad(const Vec3<Scalar>& x) const {
    Mat3<Scalar> m = Mat3<Scalar>::Zero();
    for (int i = 0; i < 3; ++i) m += x(i) * c_[i].transpose();
    return m;
  }

  template <typename T>
  LieAlgebra3<T> cast() const {
    typename LieAlgebra3<T>::Constants out;
    for (int i = 0; i < 3; ++i) out[i] = c_[i].template cast<T>();
    return LieAlgebra3<T>(std::move(out), family_, params_);
  }

 private:
  Constants c_;
  Family family_;
  Params params_;
};

template <typename Scalar>
Vec3<Scalar> bracket(const Vec3<Scalar>& x, const Vec3<Scalar>& y, const LieAlgebra3<Scalar>& a) {
  return a.ad(x) * y;
}

/// [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]]. The Jacobiator is alternating
/// and trilinear, so in dimension three this one vector decides the identity.
template <typename Scalar>
Vec3<Scalar> jacobi_defect(const LieAlgebra3<Scalar>& a) {
  const Vec3<Scalar> e1 = basis_vector<Scalar>(0);
  const Vec3<Scalar> e2 = basis_vector<Scalar>(1);
  const Vec3<Scalar> e3 = basis_vector<Scalar>(2);
  return bracket(e1, bracket(e2, e3, a), a) + bracket(e2, bracket(e3, e1, a), a) +
         bracket(e3, bracket(e1, e2, a), a);
}

template <typename Scalar>
bool satisfies_jacobi(const LieAlgebra3<Scalar>& a) {
  const Vec3<Scalar> d = jacobi_defect(a);
  return is_zero(d(0)) && is_zero(d(1)) && is_zero(d(2));
}

}  // namespace lrc
