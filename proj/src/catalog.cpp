#include "lrc/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace lrc {

namespace {

constexpr std::array<std::string_view, 8> kFamilyNames{"G1", "G2", "G3", "G4",
                                                       "G5", "G6", "G7", "Custom"};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Vec3<Rational> v(const Rational& x, const Rational& y, const Rational& z) {
  return Vec3<Rational>(x, y, z);
}

}  // namespace

std::string_view to_string(Family f) { return kFamilyNames[static_cast<int>(f)]; }

Family parse_family(std::string_view text) {
  const std::string t = lower(text);
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
    if (lower(kFamilyNames[i]) == t) return static_cast<Family>(i);
  throw std::invalid_argument("unknown family \"" + std::string(text) +
                              "\" (expected G1..G7 or Custom)");
}

bool params_less(const Params& a, const Params& b) {
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.beta != b.beta) return a.beta < b.beta;
  if (a.gamma != b.gamma) return a.gamma < b.gamma;
  if (a.delta != b.delta) return a.delta < b.delta;
  return a.eta < b.eta;
}

ParameterUse parameter_use(Family family) {
  switch (family) {
    case Family::G1: return {true, true, false, false, false};
    case Family::G2:
    case Family::G3: return {true, true, true, false, false};
    case Family::G4: return {true, true, false, false, true};
    case Family::G5:
    case Family::G6:
    case Family::G7: return {true, true, true, true, false};
    case Family::Custom: break;
  }
  return {false, false, false, false, false};
}

std::string constraint_violation(Family family, const Params& p) {
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& g = p.gamma;
  const Rational& d = p.delta;
  switch (family) {
    case Family::G1:
      if (a == 0) return "alpha!=0";
      break;
    case Family::G2:
      if (g == 0) return "gamma!=0";
      break;
    case Family::G3: break;
    case Family::G4:
      if (!p.eta || (*p.eta != 1 && *p.eta != -1)) return "eta=1 or eta=-1";
      break;
    case Family::G5:
      if (a + d == 0) return "alpha+delta!=0";
      if (a * g + b * d != 0) return "alpha*gamma+beta*delta=0";
      break;
    case Family::G6:
      if (a + d == 0) return "alpha+delta!=0";
      if (a * g - b * d != 0) return "alpha*gamma-beta*delta=0";
      break;
    case Family::G7:
      if (a + d == 0) return "alpha+delta!=0";
      if (a * g != 0) return "alpha*gamma=0";
      break;
    case Family::Custom: break;
  }
  return {};
}

LieAlgebra3<Rational> make_group(Family family, const Params& p) {
  if (family == Family::Custom)
    throw std::invalid_argument("make_group: Custom algebras are built with make_custom");
  if (auto why = constraint_violation(family, p); !why.empty()) throw ConstraintViolation(why);

  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& g = p.gamma;
  const Rational& d = p.delta;
  const Rational z(0);
  Params stored = p;
  if (family != Family::G4) stored.eta.reset();

  Vec3<Rational> e12, e13, e23;
  switch (family) {
    case Family::G1:
      e12 = v(a, z, -b);
      e13 = v(-a, -b, z);
      e23 = v(b, a, a);
      break;
    case Family::G2:
      e12 = v(z, g, -b);
      e13 = v(z, -b, -g);
      e23 = v(a, z, z);
      break;
    case Family::G3:
      e12 = v(z, z, -g);
      e13 = v(z, -b, z);
      e23 = v(a, z, z);
      break;
    case Family::G4: {
      const Rational eta(*p.eta);
      e12 = v(z, Rational(-1), 2 * eta - b);
      e13 = v(z, -b, Rational(1));
      e23 = v(a, z, z);
      break;
    }
    case Family::G5:
      e12 = v(z, z, z);
      e13 = v(a, b, z);
      e23 = v(g, d, z);
      break;
    case Family::G6:
      e12 = v(z, a, b);
      e13 = v(z, g, d);
      e23 = v(z, z, z);
      break;
    case Family::G7:
      e12 = v(-a, -b, -b);
      e13 = v(a, b, b);
      e23 = v(g, d, d);
      break;
    case Family::Custom: break;
  }
  auto alg = LieAlgebra3<Rational>::from_brackets(e12, e13, e23, family, stored);
  if (!satisfies_jacobi(alg))
    throw JacobiFailure(std::string("catalog family ") + std::string(to_string(family)) +
                        " fails the Jacobi identity");
  return alg;
}

LieAlgebra3<Rational> make_custom(const Vec3<Rational>& e12, const Vec3<Rational>& e13,
                                  const Vec3<Rational>& e23) {
  auto alg = LieAlgebra3<Rational>::from_brackets(e12, e13, e23);
  if (!satisfies_jacobi(alg)) {
    const Vec3<Rational> d = jacobi_defect(alg);
    throw JacobiFailure("structure constants fail the Jacobi identity (defect " + to_string(d(0)) +
                        ", " + to_string(d(1)) + ", " + to_string(d(2)) + ")");
  }
  return alg;
}

std::string describe_brackets(Family family) {
  switch (family) {
    case Family::G1: return "[e1,e2]=a e1-b e3; [e1,e3]=-a e1-b e2; [e2,e3]=b e1+a e2+a e3";
    case Family::G2: return "[e1,e2]=g e2-b e3; [e1,e3]=-b e2-g e3; [e2,e3]=a e1";
    case Family::G3: return "[e1,e2]=-g e3; [e1,e3]=-b e2; [e2,e3]=a e1";
    case Family::G4: return "[e1,e2]=-e2+(2 eta-b) e3; [e1,e3]=-b e2+e3; [e2,e3]=a e1";
    case Family::G5: return "[e1,e2]=0; [e1,e3]=a e1+b e2; [e2,e3]=g e1+d e2";
    case Family::G6: return "[e1,e2]=a e2+b e3; [e1,e3]=g e2+d e3; [e2,e3]=0";
    case Family::G7:
      return "[e1,e2]=-a e1-b e2-b e3; [e1,e3]=a e1+b e2+b e3; [e2,e3]=g e1+d e2+d e3";
    case Family::Custom: return "user-supplied structure constants";
  }
  return {};
}

}  // namespace lrc
