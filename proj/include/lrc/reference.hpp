#pragma once

// Closed-form values as printed in the source derivations, kept apart from the
// engine so that the two can be compared. Nothing in here feeds the pipeline.

#include <optional>
#include <string>
#include <vector>

#include "lrc/catalog.hpp"
#include "lrc/connection.hpp"
#include "lrc/curvature.hpp"

namespace lrc::reference {

/// Printed symmetric Ricci operator (row convention) for a catalog family.
/// Convert with operator_to_form before comparing to the pipeline.
OperatorMatrix<Rational> ricci_operator(Family family, Flavor flavor, const Params& p);

/// One printed component L_{e_k} T(e_i, e_j), indices 0-based.
struct TableEntry {
  int k, i, j;
  Rational value;
};

/// All printed components of the Lie-derivative table for (family, flavor),
/// in printed order. Components the table does not list are absent.
std::vector<TableEntry> lie_table(Family family, Flavor flavor, const Params& p);

/// 2x2 block [[A, B], [C, D]] whose determinant decides a theorem case.
struct Abcd {
  Rational A, B, C, D;
  Rational det() const { return A * D - B * C; }
};

/// Abbreviations are printed for G2 (both connections), G4 (both, eta-split)
/// and G6 canonical. Empty otherwise.
std::optional<Abcd> abcd(Family family, Flavor flavor, const Params& p);

/// A printed closed form claimed to equal AD - BC.
struct DeterminantIdentity {
  std::string id;  // e.g. "G2/kn"
  Family family;
  Flavor flavor;
  /// (alpha-4 beta)(beta^2+gamma^2) style closed form.
  Rational (*closed_form)(const Params&);
  std::string closed_form_text;
};

const std::vector<DeterminantIdentity>& determinant_identities();

}  // namespace lrc::reference
