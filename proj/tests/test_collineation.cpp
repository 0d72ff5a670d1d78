#include <gtest/gtest.h>

#include "support.hpp"

using namespace lrc;
using namespace lrc::test;

namespace {

Mat3<Rational> random_symmetric(ParamSampler& s) {
  Mat3<Rational> t;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) t(i, j) = t(j, i) = s.rational();
  return t;
}

}  // namespace

TEST(LieDerivative, PrintedTableValues) {
  const auto g1 = make_group(Family::G1, P("1", "0"));
  const auto l = lie_derivative_form(symmetric_ricci(g1, Flavor::Canonical), basis_vector(0), g1);
  EXPECT_EQ(l(0, 1), 1);
  EXPECT_EQ(l(1, 1), 0);

  const auto g11 = make_group(Family::G1, P("1", "1"));
  const auto s = assemble_system(symmetric_ricci(g11, Flavor::Canonical), g11);
  using Col5 = Eigen::Matrix<Rational, 5, 1>;
  Col5 want;
  want << Q("7/4"), Q("-3/2"), 1, Q("-7/4"), Q("3/2");
  EXPECT_EQ(Col5(s.col(0).tail(5)), want);
}

TEST(LieDerivative, TrivialCases) {
  ParamSampler s(301);
  const Vec3<Rational> z = Vec3<Rational>::Zero();
  const auto abelian = make_custom(z, z, z);
  const auto g1 = make_group(Family::G1, P("1", "1"));
  for (int n = 0; n < 10; ++n) {
    const auto t = random_symmetric(s);
    EXPECT_TRUE(is_zero_matrix(lie_derivative_form(t, s.vec(), abelian)));
    EXPECT_TRUE(is_zero_matrix(lie_derivative_form(t, z, g1)));
  }
  EXPECT_TRUE(is_zero_matrix(assemble_system(Mat3<Rational>(Mat3<Rational>::Zero()), g1)));
}

TEST(LieDerivative, SymmetricProperty) {
  ParamSampler s(302);
  for (int n = 0; n < 120; ++n) {
    const auto a = random_algebra(s, n);
    const auto t = random_symmetric(s);
    const auto l = lie_derivative_form(t, s.vec(), a);
    ASSERT_EQ(l, l.transpose());
  }
}

TEST(LieDerivative, LinearInXiProperty) {
  ParamSampler s(303);
  for (int n = 0; n < 120; ++n) {
    const auto a = random_algebra(s, n);
    const auto t = random_symmetric(s);
    const Vec3<Rational> x = s.vec(), y = s.vec();
    const Rational p = s.rational(), q = s.rational();
    const Vec3<Rational> xy = p * x + q * y;
    const Mat3<Rational> lhs = lie_derivative_form(t, xy, a);
    const Mat3<Rational> rhs = p * lie_derivative_form(t, x, a) + q * lie_derivative_form(t, y, a);
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(LieDerivative, DiagonalSelfTermHasNoSelfBracket) {
  // (L_{e_i} T)(e_i, e_i) = -2 T([e_i,e_i], e_i) = 0 for every T.
  ParamSampler s(304);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_algebra(s, n);
    const auto sys = assemble_system(random_symmetric(s), a);
    EXPECT_EQ(sys(0, 0), 0);
    EXPECT_EQ(sys(3, 1), 0);
    EXPECT_EQ(sys(5, 2), 0);
  }
}

TEST(NullSpace, Examples) {
  const auto full = null_space(SystemMatrix<Rational>(SystemMatrix<Rational>::Zero()));
  EXPECT_EQ(full, SolutionSpace<Rational>::full());

  const auto g1 = make_group(Family::G1, P("1", "1"));
  EXPECT_EQ(collineation_space(g1, Flavor::Canonical).dimension(), 0);

  const auto g2 = make_group(Family::G2, P("4", "1", "1"));
  const auto v = collineation_space(g2, Flavor::KobayashiNomizu);
  ASSERT_EQ(v.dimension(), 1);
  EXPECT_EQ(Vec3<Rational>(v.basis.row(0).transpose()), V("0", "1", "-3"));

  const auto g2b = make_group(Family::G2, P("0", "0", "1"));
  EXPECT_EQ(collineation_space(g2b, Flavor::KobayashiNomizu), canonical_span(RowBasis<Rational>(V("0", "0", "1").transpose())));

  EXPECT_EQ(collineation_space(make_group(Family::G5, P("1", "0", "0", "1")), Flavor::Canonical).dimension(), 3);
  EXPECT_EQ(collineation_space(make_group(Family::G3, P("1", "1", "0")), Flavor::Canonical).dimension(), 3);
  const auto g7 = collineation_space(make_group(Family::G7, P("0", "2", "0", "1")), Flavor::KobayashiNomizu);
  ASSERT_EQ(g7.dimension(), 1);
  EXPECT_EQ(Vec3<Rational>(g7.basis.row(0).transpose()), V("1", "-2", "-2"));
}

TEST(NullSpace, MembershipOracleProperty) {
  ParamSampler s(305);
  int proper = 0;
  for (int n = 0; n < 400 && proper < 100; ++n) {
    const auto a = random_algebra(s, n);
    const Flavor f = n % 2 ? Flavor::Canonical : Flavor::KobayashiNomizu;
    const auto t = symmetric_ricci(a, f);
    const auto sys = assemble_system(t, a);
    const auto space = null_space(sys);
    for (int r = 0; r < space.dimension(); ++r) {
      const Vec3<Rational> v = space.basis.row(r).transpose();
      ASSERT_TRUE(annihilates(sys, v));
      ASSERT_TRUE(is_zero_matrix(lie_derivative_form(t, v, a)));
    }
    if (space.dimension() == 3) continue;
    ++proper;
    // 100 vectors outside the span: a random member plus a nonzero multiple
    // of a complement direction.
    const auto red = rref(sys);
    int tested = 0;
    for (int k = 0; k < 100; ++k) {
      Vec3<Rational> w = Vec3<Rational>::Zero();
      for (int r = 0; r < space.dimension(); ++r) w += s.rational() * Vec3<Rational>(space.basis.row(r).transpose());
      Vec3<Rational> off = Vec3<Rational>::Zero();
      off(red.pivots[static_cast<std::size_t>(k) % red.pivots.size()]) = s.nonzero();
      w += off;
      const Mat3<Rational> l = lie_derivative_form(t, w, a);
      ASSERT_FALSE(is_zero_matrix(l)) << "non-member annihilated";
      ++tested;
    }
    EXPECT_EQ(tested, 100);
  }
  EXPECT_GE(proper, 100);
}

TEST(Rref, CanonicalFormIsUniqueProperty) {
  ParamSampler s(306);
  for (int n = 0; n < 150; ++n) {
    const int dim = static_cast<int>(s.integer(0, 3));
    RowBasis<Rational> basis(dim, 3);
    for (int r = 0; r < dim; ++r) basis.row(r) = s.vec().transpose();
    // Two random spanning sets of the same subspace, with redundant rows.
    auto respan = [&](int extra) {
      RowBasis<Rational> m(dim + extra, 3);
      for (int r = 0; r < m.rows(); ++r) {
        Vec3<Rational> v = Vec3<Rational>::Zero();
        for (int b = 0; b < dim; ++b) v += s.rational() * Vec3<Rational>(basis.row(b).transpose());
        m.row(r) = v.transpose();
      }
      return m;
    };
    const auto a = respan(2), b = respan(3);
    const auto ca = canonical_span(a), cb = canonical_span(b), c0 = canonical_span(basis);
    EXPECT_EQ(ca, c0);
    EXPECT_EQ(cb, c0);
    const auto red = rref(c0.basis);
    EXPECT_TRUE(is_zero_matrix(red.matrix - c0.basis));
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      EXPECT_EQ(c0.basis(static_cast<Eigen::Index>(r), red.pivots[r]), 1);
      if (r > 0) {
        EXPECT_GT(red.pivots[r], red.pivots[r - 1]);
      }
    }
  }
}

TEST(Rref, DoubleAgreesWithExactProperty) {
  ParamSampler s(307);
  for (int n = 0; n < 120; ++n) {
    const auto a = random_algebra(s, n);
    const Flavor f = n % 2 ? Flavor::Canonical : Flavor::KobayashiNomizu;
    const auto exact = collineation_space(a, f);
    const auto approx = collineation_space(a.cast<double>(), f);
    ASSERT_EQ(exact.dimension(), approx.dimension());
    for (int r = 0; r < exact.dimension(); ++r)
      for (int c = 0; c < 3; ++c) EXPECT_NEAR(to_double(exact.basis(r, c)), approx.basis(r, c), 1e-9);
  }
}
