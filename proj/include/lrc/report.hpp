#pragma once

// Machine-readable output. All numbers are exact rational strings ("p/q");
// floatify() adds decimal approximations on request.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/lemma_check.hpp"
#include "lrc/scan.hpp"

namespace lrc {

inline constexpr const char* kSchema = "lrc/1";

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);  // string "p/q" or integer

template <typename Derived>
Json matrix_json(const Eigen::MatrixBase<Derived>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json params_json(Family family, const Params& p);
/// Reads alpha..delta (rational strings or integers) and eta; missing
/// parameters are zero. Throws std::invalid_argument on malformed values.
Params params_from_json(const Json& j);

Json space_json(const SolutionSpace<Rational>& s);
Json certificate_json(const Certificate& c);
Json case_report_json(const CaseReport& r);

Json scan_config_json(const ScanConfig& c);
/// Throws ConfigError on schema or content problems.
ScanConfig scan_config_from_json(const Json& j);

/// Full scan document: schema, bracket conventions, config, summary, reports.
Json scan_json(const ScanResult& result, const ScanConfig& config);

Json lemma_check_json(const LemmaCheckResult& result);

/// Copy of `j` where every string that parses as a rational is replaced by
/// its double value.
Json floatify(const Json& j);

/// One row of a scan, recovered from a scan document.
struct ReportRow {
  std::string family, flavor, alpha, beta, gamma, delta, eta, case_id;
  std::optional<int> predicted_dim;
  int computed_dim = 0;
  Verdict verdict = Verdict::Match;
};

std::vector<ReportRow> rows_from_scan_json(const Json& scan_document);
ScanSummary summarize(const std::vector<ReportRow>& rows);

std::string render_csv(const std::vector<ReportRow>& rows);
std::string render_text(const std::vector<ReportRow>& rows);

}  // namespace lrc
