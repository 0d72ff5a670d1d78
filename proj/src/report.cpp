#include "lrc/report.hpp"

#include <iomanip>
#include <sstream>

namespace lrc {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

Json params_json(Family family, const Params& p) {
  Json j;
  j["family"] = std::string(to_string(family));
  const ParameterUse use = parameter_use(family);
  if (use.alpha) j["alpha"] = to_json(p.alpha);
  if (use.beta) j["beta"] = to_json(p.beta);
  if (use.gamma) j["gamma"] = to_json(p.gamma);
  if (use.delta) j["delta"] = to_json(p.delta);
  if (p.eta) j["eta"] = *p.eta;
  return j;
}

Params params_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("parameter record must be a JSON object");
  Params p;
  if (j.contains("alpha")) p.alpha = rational_from_json(j["alpha"]);
  if (j.contains("beta")) p.beta = rational_from_json(j["beta"]);
  if (j.contains("gamma")) p.gamma = rational_from_json(j["gamma"]);
  if (j.contains("delta")) p.delta = rational_from_json(j["delta"]);
  if (j.contains("eta")) {
    const Json& e = j["eta"];
    if (e.is_number_integer())
      p.eta = e.get<int>();
    else if (e.is_string())
      p.eta = std::stoi(e.get<std::string>());
    else
      throw std::invalid_argument("eta must be 1 or -1");
  }
  return p;
}

Json space_json(const SolutionSpace<Rational>& s) {
  return Json{{"dimension", s.dimension()}, {"basis", matrix_json(s.basis)}};
}

Json certificate_json(const Certificate& c) {
  Json j;
  j["case_id"] = c.case_id;
  j["statement"] = c.statement;
  j["system"] = matrix_json(c.system);
  j["rref"] = matrix_json(c.rref);
  j["pivots"] = c.pivots;
  j["predicted"] = c.predicted ? space_json(*c.predicted) : Json(nullptr);
  j["computed"] = space_json(c.computed);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json case_report_json(const CaseReport& r) {
  Json j;
  j["family"] = std::string(to_string(r.family));
  j["flavor"] = std::string(to_string(r.flavor));
  j["params"] = params_json(r.family, r.params);
  j["case_id"] = r.case_id;
  if (!r.overlapping.empty()) j["overlapping"] = r.overlapping;
  j["predicted"] = r.predicted ? space_json(*r.predicted) : Json(nullptr);
  j["computed"] = space_json(r.computed);
  j["verdict"] = std::string(to_string(r.verdict));
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
  return j;
}

Json scan_config_json(const ScanConfig& c) {
  Json j;
  j["schema"] = kSchema;
  Json fam = Json::array();
  for (Family f : c.families) fam.push_back(std::string(to_string(f)));
  j["families"] = fam;
  Json fl = Json::array();
  for (Flavor f : c.flavors) fl.push_back(std::string(to_string(f)));
  j["flavors"] = fl;
  Json sets = Json::object();
  for (const auto& [name, values] : c.parameter_sets) {
    Json v = Json::array();
    for (const auto& q : values) v.push_back(to_json(q));
    sets[name] = v;
  }
  j["parameter_sets"] = sets;
  Json params = Json::object();
  for (const auto& [k, v] : c.parameters) params[k] = v;
  j["parameters"] = params;
  j["eta"] = c.eta;
  j["boundaries"] = c.boundaries;
  Json pts = Json::array();
  for (const auto& [f, p] : c.points) pts.push_back(params_json(f, p));
  j["points"] = pts;
  return j;
}

ScanConfig scan_config_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ConfigError("scan config must be a JSON object");
    if (j.contains("schema") && j["schema"] != kSchema)
      throw ConfigError("unsupported schema " + j["schema"].dump() + " (expected \"lrc/1\")");
    ScanConfig c = default_scan_config();
    if (j.contains("families")) {
      c.families.clear();
      for (const auto& f : j.at("families")) c.families.push_back(parse_family(f.get<std::string>()));
    }
    if (j.contains("flavors")) {
      c.flavors.clear();
      for (const auto& f : j.at("flavors")) c.flavors.push_back(parse_flavor(f.get<std::string>()));
    }
    if (j.contains("parameter_sets")) {
      c.parameter_sets.clear();
      for (const auto& [name, values] : j.at("parameter_sets").items()) {
        if (!values.is_array() || values.empty())
          throw ConfigError("parameter set \"" + name + "\" must be a non-empty array");
        auto& out = c.parameter_sets[name];
        for (const auto& v : values) out.push_back(rational_from_json(v));
      }
    }
    if (j.contains("parameters"))
      for (const auto& [k, v] : j.at("parameters").items()) {
        if (k != "alpha" && k != "beta" && k != "gamma" && k != "delta")
          throw ConfigError("unknown parameter \"" + k + "\"");
        c.parameters[k] = v.get<std::string>();
      }
    if (j.contains("eta")) c.eta = j.at("eta").get<std::vector<int>>();
    if (j.contains("boundaries")) c.boundaries = j.at("boundaries").get<bool>();
    if (j.contains("points"))
      for (const auto& p : j.at("points"))
        c.points.emplace_back(parse_family(p.at("family").get<std::string>()), params_from_json(p));
    validate(c);
    return c;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("malformed scan config: ") + e.what());
  }
}

namespace {

Json bracket_metadata() {
  Json b = Json::object();
  for (Family f : kCatalogFamilies) b[std::string(to_string(f))] = describe_brackets(f);
  return b;
}

}  // namespace

Json scan_json(const ScanResult& result, const ScanConfig& config) {
  Json j;
  j["schema"] = kSchema;
  j["metadata"] = {
      {"brackets", bracket_metadata()},
      {"notes",
       Json::array(
           {"G3 uses [e1,e2]=-gamma e3, [e1,e3]=-beta e2, [e2,e3]=alpha e1: with +gamma the "
            "Ricci matrices do not reproduce, and an extra e1 term in [e1,e3] breaks Jacobi.",
            "A case list read as 'if and only if' predicts {0} outside every listed case "
            "(case id .../otherwise).",
            "Uncovered means the matched case's coefficient has a vanishing denominator."})}};
  j["config"] = scan_config_json(config);
  j["summary"] = {{"total", result.summary.total()},
                  {"match", result.summary.match},
                  {"mismatch", result.summary.mismatch},
                  {"uncovered", result.summary.uncovered}};
  Json reports = Json::array();
  for (const auto& r : result.reports) reports.push_back(case_report_json(r));
  j["reports"] = std::move(reports);
  return j;
}

Json lemma_check_json(const LemmaCheckResult& result) {
  Json j;
  j["schema"] = kSchema;
  Json sums = Json::array();
  for (const auto& s : result.summaries)
    sums.push_back({{"family", std::string(to_string(s.family))},
                    {"flavor", std::string(to_string(s.flavor))},
                    {"kind", std::string(to_string(s.kind))},
                    {"points", s.points},
                    {"comparisons", s.comparisons},
                    {"mismatches", s.mismatches},
                    {"mismatched_components", s.mismatched_components}});
  j["summaries"] = sums;
  Json ds = Json::array();
  for (const auto& d : result.discrepancies) {
    Json x;
    x["family"] = std::string(to_string(d.family));
    x["flavor"] = std::string(to_string(d.flavor));
    x["kind"] = std::string(to_string(d.kind));
    x["component"] = d.component;
    x["params"] = params_json(d.family, d.params);
    if (d.certificate) {
      const auto& c = *d.certificate;
      Json cj;
      if (d.kind == LemmaKind::RicciMatrix) {
        cj["printed"] = matrix_json(c.printed_ricci);
        cj["engine"] = matrix_json(c.engine_ricci);
      } else {
        cj["printed"] = to_json(c.printed_value);
        cj["engine"] = to_json(c.engine_value);
      }
      cj["engine_symmetric_ricci"] = matrix_json(c.engine_ricci);
      cj["engine_system"] = matrix_json(c.engine_system);
      x["certificate"] = cj;
    } else {
      x["certificate"] = nullptr;
    }
    ds.push_back(std::move(x));
  }
  j["discrepancies"] = ds;
  return j;
}

Json floatify(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : j.items()) out[k] = floatify(v);
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(floatify(v));
    return out;
  }
  if (j.is_string()) {
    try {
      return to_double(parse_rational(j.get<std::string>()));
    } catch (const std::invalid_argument&) {
      return j;
    }
  }
  return j;
}

std::vector<ReportRow> rows_from_scan_json(const Json& doc) {
  if (!doc.is_object() || doc.value("schema", "") != kSchema)
    throw std::invalid_argument("not an lrc/1 scan document");
  std::vector<ReportRow> rows;
  for (const auto& r : doc.at("reports")) {
    ReportRow row;
    row.family = r.at("family").get<std::string>();
    row.flavor = r.at("flavor").get<std::string>();
    const Json& p = r.at("params");
    auto field = [&p](const char* k) { return p.contains(k) ? p[k].get<std::string>() : ""; };
    row.alpha = field("alpha");
    row.beta = field("beta");
    row.gamma = field("gamma");
    row.delta = field("delta");
    row.eta = p.contains("eta") ? std::to_string(p["eta"].get<int>()) : "";
    row.case_id = r.at("case_id").get<std::string>();
    if (!r.at("predicted").is_null()) row.predicted_dim = r["predicted"].at("dimension").get<int>();
    row.computed_dim = r.at("computed").at("dimension").get<int>();
    row.verdict = parse_verdict(r.at("verdict").get<std::string>());
    rows.push_back(std::move(row));
  }
  return rows;
}

ScanSummary summarize(const std::vector<ReportRow>& rows) {
  ScanSummary s;
  for (const auto& r : rows) {
    switch (r.verdict) {
      case Verdict::Match: ++s.match; break;
      case Verdict::Mismatch: ++s.mismatch; break;
      case Verdict::Uncovered: ++s.uncovered; break;
    }
  }
  return s;
}

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "family,flavor,alpha,beta,gamma,delta,eta,case_id,predicted_dim,computed_dim,verdict\n";
  for (const auto& r : rows) {
    os << r.family << ',' << r.flavor << ',' << r.alpha << ',' << r.beta << ',' << r.gamma << ','
       << r.delta << ',' << r.eta << ',' << r.case_id << ','
       << (r.predicted_dim ? std::to_string(*r.predicted_dim) : "") << ',' << r.computed_dim << ','
       << to_string(r.verdict) << '\n';
  }
  return os.str();
}

std::string render_text(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  const ScanSummary s = summarize(rows);
  os << "points: " << s.total() << "  match: " << s.match << "  mismatch: " << s.mismatch
     << "  uncovered: " << s.uncovered << "  (" << std::fixed << std::setprecision(1)
     << 100.0 * s.match_fraction() << "% match)\n";
  for (const auto& r : rows) {
    if (r.verdict == Verdict::Match) continue;
    os << std::left << std::setw(10) << to_string(r.verdict) << ' ' << std::setw(22) << r.case_id
       << " alpha=" << r.alpha << " beta=" << r.beta;
    if (!r.gamma.empty()) os << " gamma=" << r.gamma;
    if (!r.delta.empty()) os << " delta=" << r.delta;
    if (!r.eta.empty()) os << " eta=" << r.eta;
    os << "  predicted dim " << (r.predicted_dim ? std::to_string(*r.predicted_dim) : "-")
       << ", computed dim " << r.computed_dim << '\n';
  }
  return os.str();
}

}  // namespace lrc
