#pragma once

#include <string>
#include <vector>

#include "lrc/lie_algebra.hpp"

namespace lrc {

/// Families G1..G7 with the bracket conventions the engine uses:
///
///   G1  [e1,e2] = a e1 - b e3,  [e1,e3] = -a e1 - b e2,  [e2,e3] = b e1 + a e2 + a e3;  a != 0
///   G2  [e1,e2] = g e2 - b e3,  [e1,e3] = -b e2 - g e3,  [e2,e3] = a e1;               g != 0
///   G3  [e1,e2] = -g e3,        [e1,e3] = -b e2,         [e2,e3] = a e1
///   G4  [e1,e2] = -e2 + (2 eta - b) e3,  [e1,e3] = -b e2 + e3,  [e2,e3] = a e1;  eta = +-1
///   G5  [e1,e2] = 0,  [e1,e3] = a e1 + b e2,  [e2,e3] = g e1 + d e2;    a + d != 0, a g + b d = 0
///   G6  [e1,e2] = a e2 + b e3,  [e1,e3] = g e2 + d e3,  [e2,e3] = 0;    a + d != 0, a g - b d = 0
///   G7  [e1,e2] = -a e1 - b e2 - b e3,  [e1,e3] = a e1 + b e2 + b e3,
///       [e2,e3] = g e1 + d e2 + d e3;                                   a + d != 0, a g = 0
///
/// (a, b, g, d = alpha, beta, gamma, delta.)
LieAlgebra3<Rational> make_group(Family family, const Params& params);

/// Raw structure constants; antisymmetry and Jacobi are enforced.
LieAlgebra3<Rational> make_custom(const Vec3<Rational>& e12, const Vec3<Rational>& e13,
                                  const Vec3<Rational>& e23);

/// Empty when the parameters are admissible, otherwise the first failed
/// condition in printed form (e.g. "alpha!=0").
std::string constraint_violation(Family family, const Params& params);

/// Human-readable bracket table, e.g. for report metadata.
std::string describe_brackets(Family family);

inline constexpr std::array<Family, 7> kCatalogFamilies{Family::G1, Family::G2, Family::G3,
                                                        Family::G4, Family::G5, Family::G6,
                                                        Family::G7};

/// Which scalar parameters a family reads.
struct ParameterUse {
  bool alpha, beta, gamma, delta, eta;
};
ParameterUse parameter_use(Family family);

}  // namespace lrc
