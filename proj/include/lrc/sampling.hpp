#pragma once

#include <cstdint>
#include <random>

#include "lrc/catalog.hpp"

namespace lrc {

/// Deterministic random rationals and constraint-satisfying parameter
/// records. Uses mt19937_64 with explicit modulo mapping rather than the
/// standard distributions, whose output differs between library vendors.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed = 0x5eed) : rng_(seed) {}

  /// Integer in [lo, hi].
  long integer(long lo, long hi);

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num = 6, long max_den = 4);

  /// Nonzero variant of rational().
  Rational nonzero(long max_num = 6, long max_den = 4);

  Vec3<Rational> vec(long max_num = 6, long max_den = 4);

  /// A parameter record satisfying the family constraints exactly. The
  /// equality-constrained families are sampled on every branch of the
  /// solution set, e.g. G5 with beta != 0 takes delta = -alpha gamma / beta.
  Params params(Family family);

 private:
  std::mt19937_64 rng_;
};

}  // namespace lrc
