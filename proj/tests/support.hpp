#pragma once

#include <array>
#include <string_view>

#include "lrc/catalog.hpp"
#include "lrc/collineation.hpp"
#include "lrc/sampling.hpp"

namespace lrc::test {

inline Rational Q(std::string_view s) { return parse_rational(s); }

inline Vec3<Rational> V(std::string_view a, std::string_view b, std::string_view c) {
  return {Q(a), Q(b), Q(c)};
}

template <std::size_t N>
Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> from_strings(
    const std::array<std::string_view, N>& v, int rows, int cols) {
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Q(v[r * cols + c]);
  return m;
}

inline Params P(std::string_view a, std::string_view b = "0", std::string_view g = "0",
                std::string_view d = "0", std::optional<int> eta = std::nullopt) {
  Params p;
  p.alpha = Q(a);
  p.beta = Q(b);
  p.gamma = Q(g);
  p.delta = Q(d);
  p.eta = eta;
  return p;
}

/// Unimodular algebra [x,y] = M (x cross y) with M symmetric; Jacobi holds
/// for every symmetric M.
inline LieAlgebra3<Rational> random_unimodular(ParamSampler& s) {
  Mat3<Rational> m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = s.rational(3, 3);
  return make_custom(m.col(2), -m.col(1), m.col(0));
}

/// Instance n of a mixed stream: catalog families in turn, every eighth a
/// random unimodular custom algebra.
inline LieAlgebra3<Rational> random_algebra(ParamSampler& s, int n) {
  if (n % 8 == 7) return random_unimodular(s);
  const Family f = kCatalogFamilies[static_cast<std::size_t>(n % 8) % kCatalogFamilies.size()];
  return make_group(f, s.params(f));
}

inline bool is_zero_matrix(const Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace lrc::test
