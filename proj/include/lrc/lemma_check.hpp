#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/collineation.hpp"
#include "lrc/reference.hpp"

namespace lrc {

enum class LemmaKind { RicciMatrix, LieTable };

std::string_view to_string(LemmaKind k);

/// Everything needed to re-check a disagreement by hand: the parameter point,
/// both values, and the engine's full symmetric Ricci form and system.
struct LemmaCertificate {
  Params params;
  BilinearForm<Rational> engine_ricci;
  BilinearForm<Rational> printed_ricci;  // RicciMatrix only (converted to a form)
  SystemMatrix<Rational> engine_system;
  Rational printed_value{0};  // LieTable only
  Rational engine_value{0};   // LieTable only
};

struct LemmaDiscrepancy {
  Family family;
  Flavor flavor;
  LemmaKind kind;
  std::string component;  // "matrix" or e.g. "L_e1(e2,e3)"
  Params params;
  std::optional<LemmaCertificate> certificate;
};

/// Recomputes both sides from the recorded parameters and confirms the
/// certificate is complete and reproduces the disagreement.
bool certificate_holds(const LemmaDiscrepancy& d);

struct LemmaCheckSummary {
  Family family;
  Flavor flavor;
  LemmaKind kind;
  int points = 0;
  int comparisons = 0;
  int mismatches = 0;
  std::vector<std::string> mismatched_components;  // sorted, unique
};

struct LemmaCheckResult {
  std::vector<LemmaCheckSummary> summaries;
  std::vector<LemmaDiscrepancy> discrepancies;

  bool clean() const { return discrepancies.empty(); }
};

struct LemmaCheckOptions {
  int points_per_pair = 24;
  std::uint64_t seed = 20240611;
  std::vector<Family> families{kCatalogFamilies.begin(), kCatalogFamilies.end()};
  std::vector<Flavor> flavors{Flavor::Canonical, Flavor::KobayashiNomizu};
  std::vector<LemmaKind> kinds{LemmaKind::RicciMatrix, LemmaKind::LieTable};
};

/// Compares the pipeline with every printed Ricci matrix and Lie-derivative
/// table at random constraint-satisfying points. Disagreements are recorded,
/// never thrown.
LemmaCheckResult check_lemmas(const LemmaCheckOptions& options = {});

/// Component label "L_e{k}(e{i},e{j})", 1-based.
std::string component_label(int k, int i, int j);

}  // namespace lrc
