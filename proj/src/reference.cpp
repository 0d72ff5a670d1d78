#include "lrc/reference.hpp"

#include <stdexcept>

namespace lrc::reference {

namespace {

using Q = Rational;

Q frac(long n, long d) { return Q(n) / Q(d); }

// Short names for the parameters; eta is 0 when absent.
struct Sym {
  Q a, b, g, d, h;
  explicit Sym(const Params& p)
      : a(p.alpha), b(p.beta), g(p.gamma), d(p.delta), h(p.eta.value_or(0)) {}
};

OperatorMatrix<Q> mat(std::initializer_list<Q> rows) {
  OperatorMatrix<Q> m;
  auto it = rows.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = *it++;
  return m;
}

using Table = std::vector<TableEntry>;

// Entries are given 1-based as printed.
TableEntry e(int k, int i, int j, Q v) { return {k - 1, i - 1, j - 1, std::move(v)}; }

// The fifteen components the tables print; G3/G5 tables list only the
// non-vanishing ones and state the rest are zero, so they get all fifteen.
Table zero_table() {
  const int idx[15][3] = {{1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3}, {1, 3, 3},
                          {2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {2, 2, 3}, {2, 3, 3},
                          {3, 1, 1}, {3, 1, 2}, {3, 1, 3}, {3, 2, 2}, {3, 2, 3}};
  Table t;
  for (const auto& x : idx) t.push_back(e(x[0], x[1], x[2], Q(0)));
  return t;
}

void set(Table& t, int k, int i, int j, const Q& v) {
  for (auto& x : t)
    if (x.k == k - 1 && x.i == i - 1 && x.j == j - 1) {
      x.value = v;
      return;
    }
  t.push_back(e(k, i, j, v));
}

}  // namespace

OperatorMatrix<Rational> ricci_operator(Family family, Flavor flavor, const Params& p) {
  const Sym s(p);
  const Q &a = s.a, &b = s.b, &g = s.g, &d = s.d, &h = s.h;
  const Q z(0);
  const bool can = flavor == Flavor::Canonical;
  if (flavor == Flavor::LeviCivita)
    throw std::invalid_argument("no printed Ricci matrix for the Levi-Civita connection");
  switch (family) {
    case Family::G1:
      if (can) {
        const Q m = -(a * a + b * b / 2);
        return mat({m, z, -a * b / 4, z, m, -a * a / 2, a * b / 4, a * a / 2, z});
      } else {
        const Q m = -(a * a + b * b);
        return mat({m, a * b, a * b / 2, a * b, m, -a * a / 2, -a * b / 2, a * a / 2, z});
      }
    case Family::G2:
      if (can) {
        const Q m = -(g * g + a * b / 2);
        const Q o = a * g / 4 - b * g / 2;
        return mat({m, z, z, z, m, o, z, -o, z});
      } else {
        return mat({-(b * b + g * g), z, z, z, -(g * g + a * b), a * g / 2, z, -a * g / 2, z});
      }
    case Family::G3: {
      const Q a1 = (a - b - g) / 2, a2 = (a - b + g) / 2, a3 = (a + b - g) / 2;
      if (can) return mat({-g * a3, z, z, z, -g * a3, z, z, z, z});
      return mat({g * (a1 - a3), z, z, z, -g * (a2 + a3), z, z, z, z});
    }
    case Family::G4: {
      const Q b1 = a / 2 + h - b, b2 = a / 2 - h, b3 = a / 2 + h;
      if (can) {
        const Q m = (2 * h - b) * b3 - 1;
        return mat({m, z, z, z, m, (b - b3) / 2, z, (b3 - b) / 2, z});
      }
      return mat({-(1 + (b - 2 * h) * (b3 - b1)), z, z, z, -(1 + (b - 2 * h) * (b2 + b3)),
                  (b1 + b - a - b3) / 2, z, (a + b3 - b1 - b) / 2, z});
    }
    case Family::G5: return OperatorMatrix<Q>::Zero();
    case Family::G6:
      if (can) {
        const Q m = b * (b - g) / 2 - a * a;
        const Q o = (g * a - d * (b - g) / 2) / 2;
        return mat({m, z, z, z, m, o, z, -o, z});
      }
      return mat({-(a * a + b * g), z, z, z, -a * a, z, z, z, z});
    case Family::G7:
      if (can) {
        const Q m = -(a * a + b * g / 2);
        const Q o = (g * a + d * g / 2) / 2;
        return mat({m, z, o, z, m, m / 2, -o, -m / 2, z});
      } else {
        const Q o12 = (b * d - a * b) / 2;
        const Q o13 = -b * (a + d);
        const Q o23 = -(b * g + a * d + 2 * d * d) / 2;
        return mat({-a * a, o12, o13, o12, -(a * a + b * b + b * g), o23, -o13, -o23, z});
      }
    case Family::Custom: break;
  }
  throw std::invalid_argument("no printed Ricci matrix for a custom algebra");
}

std::vector<TableEntry> lie_table(Family family, Flavor flavor, const Params& p) {
  const Sym s(p);
  const Q &a = s.a, &b = s.b, &g = s.g, &d = s.d, &h = s.h;
  const bool can = flavor == Flavor::Canonical;
  if (flavor == Flavor::LeviCivita)
    throw std::invalid_argument("no printed Lie-derivative table for the Levi-Civita connection");
  const Q a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b, g2 = g * g, d2 = d * d;
  switch (family) {
    case Family::G1:
      if (can)
        return {e(1, 1, 2, a * (a2 + frac(3, 4) * b2)),
                e(1, 1, 3, -a * (a2 + b2 / 2)),
                e(1, 2, 2, a2 * b),
                e(1, 2, 3, -b * (frac(5, 4) * a2 + b2 / 2)),
                e(1, 3, 3, frac(3, 2) * a2 * b),
                e(2, 1, 1, -2 * a * (a2 + frac(3, 4) * b2)),
                e(2, 1, 2, -a2 * b / 2),
                e(2, 1, 3, b * (a2 + b2 / 2)),
                e(2, 2, 3, a * (a2 + b2) / 2),
                e(2, 3, 3, -a * (a2 + b2 / 2)),
                e(3, 1, 1, 2 * a * (a2 + b2 / 2)),
                e(3, 1, 2, a2 * b / 4),
                e(3, 1, 3, -frac(3, 4) * a2 * b),
                e(3, 2, 2, -a * (a2 + b2)),
                e(3, 2, 3, a * (a2 + b2 / 2) / 2)};
      return {e(1, 1, 2, a * (a2 + b2 / 2)),
              e(1, 1, 3, -a3),
              e(1, 2, 2, -a2 * b),
              e(1, 2, 3, b * (a2 / 2 - b2)),
              e(1, 3, 3, Q(0)),
              e(2, 1, 1, -2 * a * (a2 + b2 / 2)),
              e(2, 1, 2, a2 * b / 2),
              e(2, 1, 3, b3),
              e(2, 2, 3, a3 / 2),
              e(2, 3, 3, a * (b2 - a2)),
              e(3, 1, 1, 2 * a3),
              e(3, 1, 2, -a2 * b / 2),
              e(3, 1, 3, Q(0)),
              e(3, 2, 2, -a3),
              e(3, 2, 3, a * (a2 - b2) / 2)};
    case Family::G2:
      if (can)
        return {e(1, 1, 2, Q(0)),
                e(1, 1, 3, Q(0)),
                e(1, 2, 2, g * (2 * g2 + b2 + a * b / 2)),
                e(1, 2, 3, -b * (g2 + a * b / 2)),
                e(1, 3, 3, b * (b * g - a * g / 2)),
                e(2, 1, 1, Q(0)),
                e(2, 1, 2, -g * (g2 + b2 / 2 + a * b / 4)),
                e(2, 1, 3, g2 * (b + frac(3, 2) * a) / 2 + a2 * b / 2),
                e(2, 2, 3, Q(0)),
                e(2, 3, 3, Q(0)),
                e(3, 1, 1, Q(0)),
                e(3, 1, 2, g2 * (b - frac(3, 2) * a) / 2 + a * b * (b - a) / 2),
                e(3, 1, 3, b * g * (a / 2 - b) / 2),
                e(3, 2, 2, Q(0)),
                e(3, 2, 3, Q(0))};
      return {e(1, 1, 2, Q(0)),
              e(1, 1, 3, Q(0)),
              e(1, 2, 2, 2 * g * (g2 + a * b / 2)),
              e(1, 2, 3, -b * (g2 + a * b)),
              e(1, 3, 3, -a * b * g),
              e(2, 1, 1, Q(0)),
              e(2, 1, 2, -g * (g2 + a * b / 2)),
              e(2, 1, 3, a * (b2 + g2 / 2)),
              e(2, 2, 3, Q(0)),
              e(2, 3, 3, Q(0)),
              e(3, 1, 1, Q(0)),
              e(3, 1, 2, g2 * (b - a / 2)),
              e(3, 1, 3, a * b * g / 2),
              e(3, 2, 2, Q(0)),
              e(3, 2, 3, Q(0))};
    case Family::G3: {
      const Q c1 = (a - b - g) / 2, c2 = (a - b + g) / 2, c3 = (a + b - g) / 2;
      Table t = zero_table();
      if (can) {
        set(t, 1, 2, 3, -b * g * c3);
        set(t, 2, 1, 3, a * g * c3);
        set(t, 3, 1, 2, (b - a) * g * c3);
      } else {
        set(t, 1, 2, 3, -b * g * (c2 + c3));
        set(t, 2, 1, 3, a * g * (c3 - c1));
        set(t, 3, 1, 2, b * g * (c2 + c3) + a * g * (c1 - c3));
      }
      return t;
    }
    case Family::G4: {
      const Q bb3 = a / 2 + h;
      if (can)
        return {e(1, 1, 2, Q(0)),
                e(1, 1, 3, Q(0)),
                e(1, 2, 2, (2 * h - b) * (bb3 + b) - 2),
                e(1, 2, 3, b * ((2 * h - b) * bb3 - 1)),
                e(1, 3, 3, b * (bb3 - b)),
                e(2, 1, 1, Q(0)),
                e(2, 1, 2, (bb3 + b) * (b / 2 - h) + 1),
                e(2, 1, 3, a * ((b - 2 * h) * bb3 + 1) + (b - bb3) / 2),
                e(2, 2, 3, Q(0)),
                e(2, 3, 3, Q(0)),
                e(3, 1, 1, Q(0)),
                e(3, 1, 2, (a - b) * ((2 * h - b) * bb3 - 1) + (bb3 - b) / 2),
                e(3, 1, 3, b * (b - bb3) / 2),
                e(3, 2, 2, Q(0)),
                e(3, 2, 3, Q(0))};
      return {e(1, 1, 2, Q(0)),
              e(1, 1, 3, Q(0)),
              e(1, 2, 2, -2 - a * (b - 2 * h)),
              e(1, 2, 3, -b * (1 + a * (b - 2 * h))),
              e(1, 3, 3, a * b),
              e(2, 1, 1, Q(0)),
              e(2, 1, 2, 1 + a * (b - 2 * h) / 2),
              e(2, 1, 3, a * (frac(1, 2) + b * (b - 2 * h))),
              e(2, 2, 3, Q(0)),
              e(2, 3, 3, Q(0)),
              e(3, 1, 1, Q(0)),
              e(3, 1, 2, b - a / 2),
              e(3, 1, 3, -a * b / 2),
              e(3, 2, 2, Q(0)),
              e(3, 2, 3, Q(0))};
    }
    case Family::G5: return zero_table();
    case Family::G6:
      if (can)
        return {e(1, 1, 2, Q(0)),
                e(1, 1, 3, Q(0)),
                e(1, 2, 2, 2 * a3 + a * b * g - b * (b - g) * (a + d / 2)),
                e(1, 2, 3, a * g * (3 * a + d) / 2 + (g - b) * (a * d + d2 + b * g) / 2),
                e(1, 3, 3, g * (a * g + d * (g - b) / 2)),
                e(2, 1, 1, Q(0)),
                e(2, 1, 2, -a3 - a * b * g / 2 + b * (b - g) * (a + d / 2) / 2),
                e(2, 1, 3, a * (-a * g + d * (b - g) / 2) / 2),
                e(2, 2, 3, Q(0)),
                e(2, 3, 3, Q(0)),
                e(3, 1, 1, Q(0)),
                e(3, 1, 2, -a2 * g - a * g * d / 2 + (b - g) * (b * g + d2 / 2) / 2),
                e(3, 1, 3, g * (-a * g + d * (b - g) / 2) / 2),
                e(3, 2, 2, Q(0)),
                e(3, 2, 3, Q(0))};
      {
        Table t = zero_table();
        set(t, 1, 2, 2, 2 * a3);
        set(t, 1, 2, 3, a2 * g);
        set(t, 2, 1, 2, -a3);
        set(t, 3, 1, 2, -a2 * g);
        return t;
      }
    case Family::G7:
      if (can) {
        const Q P = a2 + b * g / 2;
        return {e(1, 1, 2, -a3 - b * d * g / 4),
                e(1, 1, 3, a3 + b * d * g / 4),
                e(1, 2, 2, -b * P),
                e(1, 2, 3, b * P),
                e(1, 3, 3, -b * P),
                e(2, 1, 1, 2 * a3 + b * d * g / 2),
                e(2, 1, 2, b * P / 2),
                e(2, 1, 3, g * (d2 - b2) / 4 + b * (g2 - a2) / 2),
                e(2, 2, 3, d * P / 2),
                e(2, 3, 3, d * (g2 / 2 - a2 - b * g / 2)),
                e(3, 1, 1, -2 * a3 - b * d * g / 2),
                e(3, 1, 2, -(g + b / 2) * P - d2 * g / 4),
                e(3, 1, 3, b * P / 2),
                e(3, 2, 2, -d * P),
                e(3, 2, 3, -d * g2 / 4 + d * P / 2)};
      }
      return {e(1, 1, 2, -a3 + b2 * (3 * d + a) / 2),
              e(1, 1, 3, a3 - b2 * (3 * d + a) / 2),
              e(1, 2, 2, b * (2 * a * d - 3 * a2 - 2 * b2 - b * g + 2 * d2)),
              e(1, 2, 3, b * (frac(5, 2) * a2 + a * d / 2 + b2 + b * g)),
              e(1, 3, 3, -b * (2 * a2 + 3 * a * d + b * g + 2 * d2)),
              e(2, 1, 1, 2 * a2 - b2 * (3 * d + a)),
              e(2, 1, 2, b * (3 * a2 + 2 * b2 + b * g - 2 * a * d - 2 * d2) / 2),
              e(2, 1, 3, -b * (a2 + frac(5, 2) * d2 + 2 * a * d + b * g / 2)),
              e(2, 2, 3, d * (a2 + b2 - d2 - a * d / 2)),
              e(2, 3, 3, -d * (3 * b * g + a * d + 2 * d2)),
              e(3, 1, 1, -2 * a3 + b2 * (3 * d + a)),
              e(3, 1, 2, b * (5 * d2 - 3 * a2 - 2 * b2 - b * g + 3 * a * d) / 2),
              e(3, 1, 3, b * (2 * a2 + 3 * a * d + b * g + 2 * d2) / 2),
              e(3, 2, 2, d * (2 * d2 + a * d - 2 * a2 - 2 * b2)),
              e(3, 2, 3, d * (3 * b * g + a * d + 2 * d2) / 2)};
    case Family::Custom: break;
  }
  throw std::invalid_argument("no printed Lie-derivative table for a custom algebra");
}

std::optional<Abcd> abcd(Family family, Flavor flavor, const Params& p) {
  const Sym s(p);
  const Q &a = s.a, &b = s.b, &g = s.g, &d = s.d, &h = s.h;
  const bool can = flavor == Flavor::Canonical;
  switch (family) {
    case Family::G2:
      if (can)
        return Abcd{g * (2 * g * g + b * b + a * b / 2), g * g * (frac(3, 2) * a - b) + a * b * (a - b),
                    g * g * (b + frac(3, 2) * a) + a * a * b, b * g * (a / 2 - b)};
      if (flavor == Flavor::KobayashiNomizu)
        return Abcd{2 * g * g + a * b, g * (a - 2 * b), 2 * b * b + g * g, b * g};
      break;
    case Family::G4:
      if (h != 1 && h != -1) break;
      if (can) {
        if (h == 1)
          return Abcd{(a / 2 + 1 + b) * (b / 2 - 1) + 1,
                      (a - b) * ((2 - b) * (a / 2 + 1) - 1) + (a / 2 + 1 - b) / 2,
                      a * ((b - 2) * (a / 2 + 1) + 1) + (b - a / 2 - 1) / 2,
                      b * (b - a / 2 - 1) / 2};
        return Abcd{(a / 2 - 1 + b) * (b / 2 + 1) + 1,
                    (a - b) * ((-2 - b) * (a / 2 - 1) - 1) + (a / 2 - 1 - b) / 2,
                    a * ((b + 2) * (a / 2 - 1) + 1) + (b - a / 2 + 1) / 2,
                    b * (b - a / 2 + 1) / 2};
      }
      if (flavor == Flavor::KobayashiNomizu)
        return Abcd{1 + a * (b - 2 * h) / 2, b - a / 2, frac(1, 2) + b * (b - 2 * h), -b / 2};
      break;
    case Family::G6:
      if (can) {
        const Q w = -a * g + d * (b - g) / 2;
        return Abcd{-a * a * a - a * b * g / 2 + b * (b - g) * (a + d / 2) / 2,
                    -a * a * g - a * g * d / 2 + (b - g) * (b * g + d * d / 2) / 2, a * w / 2,
                    g * w / 2};
      }
      break;
    default: break;
  }
  return std::nullopt;
}

const std::vector<DeterminantIdentity>& determinant_identities() {
  static const std::vector<DeterminantIdentity> ids{
      {"G2/kn", Family::G2, Flavor::KobayashiNomizu,
       [](const Params& p) {
         const Q &a = p.alpha, &b = p.beta, &g = p.gamma;
         return Q((a - 4 * b) * (b * b + g * g));
       },
       "(alpha-4*beta)*(beta^2+gamma^2)"},
      {"G6/canonical", Family::G6, Flavor::Canonical,
       [](const Params& p) {
         const Q &a = p.alpha, &b = p.beta, &g = p.gamma, &d = p.delta;
         return Q(g * (a + d) * (a * d - b * g) / 4);
       },
       "1/4*gamma*(alpha+delta)*(alpha*delta-beta*gamma)"},
      {"G2/canonical", Family::G2, Flavor::Canonical,
       [](const Params& p) {
         const Q &a = p.alpha, &b = p.beta, &g = p.gamma;
         const Q a2 = a * a, b2 = b * b, g2 = g * g;
         return Q(4 * a2 * a2 * b2 - 4 * a2 * a * b2 * b + 12 * a2 * a * b * g2 - 7 * a2 * b2 * g2 +
                  9 * a2 * b2 * b2 - 4 * a * b2 * b * g2 + 4 * a * b * g2 * g2 + 4 * b2 * b2 * g2 +
                  4 * b2 * g2 * g2);
       },
       "4a^4b^2-4a^3b^3+12a^3bg^2-7a^2b^2g^2+9a^2b^4-4ab^3g^2+4abg^4+4b^4g^2+4b^2g^4"},
  };
  return ids;
}

}  // namespace lrc::reference
