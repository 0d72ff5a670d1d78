#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/catalog.hpp"
#include "lrc/collineation.hpp"

namespace lrc {

/// One case of a classification statement for (family, flavor). The span
/// function returns nullopt when a parameter-dependent coefficient has a
/// vanishing denominator at the given point.
struct TheoremCase {
  std::string id;  // "G2/canonical/(2)"
  Family family;
  Flavor flavor;
  std::string statement;
  std::function<bool(const Params&)> predicate;
  std::function<std::optional<RowBasis<Rational>>(const Params&)> span;
};

/// Cases in printed order. A statement of the form "admits ... iff (1)...(n)"
/// implies the trivial space outside all cases; that implicit case is not
/// listed here (see theorem_predicate).
const std::vector<TheoremCase>& theorem_cases(Family family, Flavor flavor);

struct Prediction {
  std::string case_id;                  // first matching case, or ".../otherwise"
  std::vector<std::string> overlapping;  // every further case that also matched
  std::optional<SolutionSpace<Rational>> space;  // empty => Uncovered
  std::string reason;                            // why Uncovered
};

/// Evaluates the case predicates in printed order; first match wins.
Prediction theorem_predicate(Family family, Flavor flavor, const Params& params);

enum class Verdict { Match, Mismatch, Uncovered };
std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct Certificate {
  std::string case_id;
  std::string statement;
  SystemMatrix<Rational> system;
  SystemMatrix<Rational> rref;
  std::vector<int> pivots;
  std::optional<SolutionSpace<Rational>> predicted;
  SolutionSpace<Rational> computed;
  std::string note;
};

struct CaseReport {
  Family family = Family::Custom;
  Flavor flavor = Flavor::Canonical;
  Params params;
  std::string case_id;
  std::vector<std::string> overlapping;
  std::optional<SolutionSpace<Rational>> predicted;
  SolutionSpace<Rational> computed;
  SystemMatrix<Rational> system;
  Verdict verdict = Verdict::Uncovered;
  std::string reason;
  std::optional<Certificate> certificate;  // present iff verdict != Match
};

class NotAMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Full evaluation of one point: prediction, computation, verdict, and a
/// certificate for anything but a Match.
CaseReport evaluate_point(Family family, Flavor flavor, const Params& params);

/// Throws NotAMismatch for a Match report.
Certificate certify_mismatch(const CaseReport& report);

/// Total order used for deterministic report output.
bool report_less(const CaseReport& a, const CaseReport& b);

}  // namespace lrc
