#include "lrc/sampling.hpp"

namespace lrc {

long ParamSampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rational ParamSampler::rational(long max_num, long max_den) {
  const long p = integer(-max_num, max_num);
  const long q = integer(1, max_den);
  return Rational(p) / Rational(q);
}

Rational ParamSampler::nonzero(long max_num, long max_den) {
  for (;;) {
    Rational r = rational(max_num, max_den);
    if (r != 0) return r;
  }
}

Vec3<Rational> ParamSampler::vec(long max_num, long max_den) {
  return Vec3<Rational>(rational(max_num, max_den), rational(max_num, max_den),
                        rational(max_num, max_den));
}

Params ParamSampler::params(Family family) {
  for (;;) {
    Params p;
    switch (family) {
      case Family::G1:
        p.alpha = nonzero();
        p.beta = rational();
        break;
      case Family::G2:
        p.alpha = rational();
        p.beta = rational();
        p.gamma = nonzero();
        break;
      case Family::G3:
        p.alpha = rational();
        p.beta = rational();
        p.gamma = rational();
        break;
      case Family::G4:
        p.alpha = rational();
        p.beta = rational();
        p.eta = integer(0, 1) == 0 ? -1 : 1;
        break;
      case Family::G5:
        // alpha gamma + beta delta = 0
        switch (integer(0, 2)) {
          case 0:
            p.alpha = rational();
            p.beta = nonzero();
            p.gamma = rational();
            p.delta = -p.alpha * p.gamma / p.beta;
            break;
          case 1:  // beta = 0, alpha = 0
            p.gamma = rational();
            p.delta = rational();
            break;
          default:  // beta = 0, gamma = 0
            p.alpha = rational();
            p.delta = rational();
            break;
        }
        break;
      case Family::G6:
        // alpha gamma - beta delta = 0
        switch (integer(0, 2)) {
          case 0:
            p.alpha = rational();
            p.beta = nonzero();
            p.gamma = rational();
            p.delta = p.alpha * p.gamma / p.beta;
            break;
          case 1:
            p.gamma = rational();
            p.delta = rational();
            break;
          default:
            p.alpha = rational();
            p.delta = rational();
            break;
        }
        break;
      case Family::G7:
        // alpha gamma = 0
        p.beta = rational();
        p.delta = rational();
        if (integer(0, 1) == 0)
          p.gamma = rational();
        else
          p.alpha = rational();
        break;
      case Family::Custom: return p;
    }
    if (constraint_violation(family, p).empty()) return p;
  }
}

}  // namespace lrc
