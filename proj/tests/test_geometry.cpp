#include <gtest/gtest.h>

#include "oracle_frozen.hpp"
#include "support.hpp"

using namespace lrc;
using namespace lrc::test;

namespace {

LieAlgebra3<Rational> oracle_algebra(const oracle::Point& p) {
  Params params = P(p.params[0], p.params[1], p.params[2], p.params[3]);
  if (p.family == "G4") params.eta = p.eta;
  return make_group(parse_family(p.family), params);
}

Mat3<Rational> slice(const std::array<std::string_view, 27>& v, int i) {
  Mat3<Rational> m;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m(j, k) = Q(v[9 * i + 3 * j + k]);
  return m;
}

std::string label(const oracle::Point& p) {
  return std::string(p.family) + "/" + std::string(p.flavor) + " (" + std::string(p.params[0]) +
         "," + std::string(p.params[1]) + "," + std::string(p.params[2]) + "," +
         std::string(p.params[3]) + ")";
}

const Metric g;
const ProductStructure J;

}  // namespace

// Values from the independent sympy computation (tests/oracle).
TEST(Oracle, ConnectionsMatch) {
  for (const auto& p : oracle::points()) {
    const auto a = oracle_algebra(p);
    const auto lc = levi_civita(a);
    const auto c = connection_for(a, parse_flavor(p.flavor));
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(lc.gamma[i], slice(p.levi_civita, i)) << label(p);
      EXPECT_EQ(c.gamma[i], slice(p.gamma, i)) << label(p);
    }
  }
}

TEST(Oracle, SymmetricRicciMatches) {
  for (const auto& p : oracle::points()) {
    const auto a = oracle_algebra(p);
    EXPECT_EQ(symmetric_ricci(a, parse_flavor(p.flavor)), from_strings(p.symmetric_ricci, 3, 3))
        << label(p);
  }
}

TEST(Oracle, SystemAndNullSpaceMatch) {
  for (const auto& p : oracle::points()) {
    const auto a = oracle_algebra(p);
    const auto t = symmetric_ricci(a, parse_flavor(p.flavor));
    const auto s = assemble_system(t, a);
    EXPECT_EQ(s, from_strings(p.system, 6, 3)) << label(p);
    const auto space = null_space(s);
    ASSERT_EQ(space.dimension(), static_cast<int>(p.basis.size())) << label(p);
    for (int r = 0; r < space.dimension(); ++r)
      EXPECT_EQ(Vec3<Rational>(space.basis.row(r).transpose()), V(p.basis[r][0], p.basis[r][1], p.basis[r][2]))
          << label(p);
  }
}

TEST(Connection, HandExamples) {
  const auto g1 = make_group(Family::G1, P("1", "0"));
  const auto lc = levi_civita(g1);
  const Vec3<Rational> e1 = basis_vector(0), e3 = basis_vector(2);
  EXPECT_EQ(lc.apply(e1, e1), V("0", "-1", "-1"));
  const auto nj = nabla_J(lc);
  EXPECT_EQ(Vec3<Rational>(nj.op(0) * e1), V("0", "0", "-2"));
  EXPECT_EQ(canonical_connection(lc, nj).apply(e1, e1), V("0", "-1", "0"));

  const auto g5 = make_group(Family::G5, P("1", "0", "0", "1"));
  EXPECT_EQ(levi_civita(g5).apply(e1, e3), V("1", "0", "0"));
}

TEST(Connection, AbelianIsFlat) {
  const Vec3<Rational> z = Vec3<Rational>::Zero();
  const auto a = make_custom(z, z, z);
  for (Flavor f : {Flavor::LeviCivita, Flavor::Canonical, Flavor::KobayashiNomizu}) {
    const auto c = connection_for(a, f);
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(is_zero_matrix(c.gamma[i]));
    EXPECT_TRUE(is_zero_matrix(symmetric_ricci(a, f)));
  }
}

TEST(Connection, CorrectionsVanishWhenJIsParallel) {
  // [e1,e2] = e1 with e3 central: the timelike direction decouples, so
  // nabla J = 0 and both corrections vanish.
  const auto a = make_custom(V("1", "0", "0"), V("0", "0", "0"), V("0", "0", "0"));
  const auto lc = levi_civita(a);
  const auto nj = nabla_J(lc);
  for (int i = 0; i < 3; ++i) ASSERT_TRUE(is_zero_matrix(nj.nj[i]));
  const auto can = canonical_connection(lc, nj);
  const auto kn = kobayashi_nomizu(lc, can, nj);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(can.gamma[i], lc.gamma[i]);
    EXPECT_EQ(kn.gamma[i], lc.gamma[i]);
  }
  // G5 never has parallel J: the e1 coefficient alpha of [e1,e3] feeds nabla_{e1} e1.
  ParamSampler s(201);
  for (int n = 0; n < 20; ++n) {
    const auto nj5 = nabla_J(levi_civita(make_group(Family::G5, s.params(Family::G5))));
    EXPECT_FALSE(is_zero_matrix(nj5.nj[0]) && is_zero_matrix(nj5.nj[1]) && is_zero_matrix(nj5.nj[2]));
  }
}

TEST(Connection, LeviCivitaTorsionFreeProperty) {
  ParamSampler s(202);
  for (int n = 0; n < 120; ++n) {
    const auto a = random_algebra(s, n);
    const auto lc = levi_civita(a);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ASSERT_TRUE(is_zero_matrix(torsion(lc, a, i, j)));
  }
}

void check_metric(Flavor f, std::uint64_t seed) {
  ParamSampler s(seed);
  for (int n = 0; n < 120; ++n) {
    const auto a = random_algebra(s, n);
    const auto c = connection_for(a, f);
    const Vec3<Rational> x = s.vec(), y = s.vec(), z = s.vec();
    ASSERT_EQ(g(Vec3<Rational>(c.apply(x, y)), z) + g(y, Vec3<Rational>(c.apply(x, z))), 0)
        << to_string(f) << " instance " << n;
  }
}

TEST(Connection, LeviCivitaMetricProperty) { check_metric(Flavor::LeviCivita, 203); }
TEST(Connection, CanonicalMetricProperty) { check_metric(Flavor::Canonical, 213); }
TEST(Connection, KobayashiNomizuMetricProperty) { check_metric(Flavor::KobayashiNomizu, 223); }

TEST(Connection, JParallelProperty) {
  ParamSampler s(204);
  for (int n = 0; n < 120; ++n) {
    const auto a = random_algebra(s, n);
    for (Flavor f : {Flavor::Canonical, Flavor::KobayashiNomizu}) {
      const auto c = connection_for(a, f);
      const Vec3<Rational> x = s.vec(), y = s.vec();
      ASSERT_EQ(c.apply(x, J(y)), J(Vec3<Rational>(c.apply(x, y)))) << to_string(f);
    }
  }
}

TEST(Connection, NablaJAnticommutesWithJProperty) {
  ParamSampler s(205);
  const Mat3<Rational> jm = ProductStructure::matrix<Rational>();
  for (int n = 0; n < 120; ++n) {
    const auto nj = nabla_J(levi_civita(random_algebra(s, n)));
    for (int i = 0; i < 3; ++i) ASSERT_TRUE(is_zero_matrix(nj.op(i) * jm + jm * nj.op(i)));
  }
}

TEST(Curvature, FirstPairAntisymmetryProperty) {
  ParamSampler s(206);
  for (int n = 0; n < 120; ++n) {
    const auto a = random_algebra(s, n);
    for (Flavor f : {Flavor::LeviCivita, Flavor::Canonical, Flavor::KobayashiNomizu}) {
      const auto r = curvature(connection_for(a, f), a);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ASSERT_TRUE(is_zero_matrix(r.op(i, j) + r.op(j, i)));
    }
  }
}

TEST(Ricci, PrintedExamples) {
  const auto g1 = make_group(Family::G1, P("1", "0"));
  Mat3<Rational> want;
  want << -1, 0, 0, 0, -1, Q("1/2"), 0, Q("1/2"), 0;
  EXPECT_EQ(symmetric_ricci(g1, Flavor::Canonical), want);

  const auto g6 = make_group(Family::G6, P("1", "0", "0", "1"));
  want << -1, 0, 0, 0, -1, 0, 0, 0, 0;
  EXPECT_EQ(symmetric_ricci(g6, Flavor::KobayashiNomizu), want);

  const auto g2 = make_group(Family::G2, P("0", "0", "1"));
  want << -1, 0, 0, 0, -1, 0, 0, 0, 0;
  EXPECT_EQ(symmetric_ricci(g2, Flavor::Canonical), want);

  ParamSampler s(207);
  for (int n = 0; n < 20; ++n) {
    EXPECT_TRUE(is_zero_matrix(symmetric_ricci(make_group(Family::G5, s.params(Family::G5)), Flavor::Canonical)));
    Params p = s.params(Family::G3);
    p.gamma = 0;
    if (p.alpha == 0) p.alpha = 1;
    EXPECT_TRUE(is_zero_matrix(symmetric_ricci(make_group(Family::G3, p), Flavor::KobayashiNomizu)));
  }
}

TEST(Ricci, OperatorFormConversion) {
  Mat3<Rational> a;
  a << -3, 0, Q("-1/2"), 0, -3, Q("-1/2"), Q("1/2"), Q("1/2"), 0;
  Mat3<Rational> t;
  t << -3, 0, Q("1/2"), 0, -3, Q("1/2"), Q("1/2"), Q("1/2"), 0;
  EXPECT_EQ(operator_to_form(a), t);
  EXPECT_EQ(form_to_operator(t), a);
  EXPECT_EQ(operator_to_form(ProductStructure::matrix<Rational>()), Mat3<Rational>(Mat3<Rational>::Identity()));
  EXPECT_TRUE(is_zero_matrix(operator_to_form(Mat3<Rational>(Mat3<Rational>::Zero()))));
}

TEST(Ricci, SymmetrizeIsAProjectionProperty) {
  ParamSampler s(208);
  for (int n = 0; n < 100; ++n) {
    Mat3<Rational> t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = s.rational();
    const auto st = symmetrize(t);
    EXPECT_EQ(symmetrize(st), st);
    EXPECT_EQ(st, st.transpose());
    EXPECT_TRUE(is_zero_matrix(symmetrize(Mat3<Rational>(t - t.transpose()))));
  }
  Mat3<Rational> one = Mat3<Rational>::Zero();
  one(1, 2) = 1;
  EXPECT_EQ(symmetrize(one)(1, 2), Q("1/2"));
  EXPECT_EQ(symmetrize(one)(2, 1), Q("1/2"));
}
