#include "lrc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrc/report.hpp"
#include "lrc/sampling.hpp"

namespace lrc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointOptions {
  std::string family;
  std::string flavor = "canonical";
  std::string alpha, beta, gamma, delta;
  std::optional<int> eta;
  std::string params_file;
  std::string constants_file;
};

struct OutputOptions {
  std::string format = "json";
  std::string out;
  bool with_float = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

void add_point_options(CLI::App* app, PointOptions& o, bool flavor_required_default = true) {
  app->add_option("--family", o.family, "G1..G7 or Custom");
  auto* fl = app->add_option("--flavor,--connection", o.flavor, "canonical | kn");
  if (flavor_required_default) fl->capture_default_str();
  app->add_option("--alpha", o.alpha, "rational, \"p/q\" or integer");
  app->add_option("--beta", o.beta);
  app->add_option("--gamma", o.gamma);
  app->add_option("--delta", o.delta);
  app->add_option("--eta", o.eta, "1 or -1 (G4)");
  app->add_option("--params", o.params_file, "JSON file with family and parameters");
  app->add_option("--constants", o.constants_file,
                  "JSON file with structure constants {\"12\":[..],\"13\":[..],\"23\":[..]}");
}

void add_output_options(CLI::App* app, OutputOptions& o, std::vector<std::string> formats) {
  app->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
  app->add_option("--out", o.out, "write to this file instead of stdout");
  app->add_flag("--float", o.with_float, "add decimal approximations");
}

Rational flag_rational(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

LieAlgebra3<Rational> algebra_from(const PointOptions& o) {
  Json file;
  if (!o.params_file.empty()) file = read_json_file(o.params_file);
  std::string family_text = o.family;
  if (family_text.empty() && file.contains("family")) family_text = file["family"].get<std::string>();
  if (family_text.empty() && !o.constants_file.empty()) family_text = "Custom";
  if (family_text.empty()) throw UsageError("--family is required");
  Family family;
  try {
    family = parse_family(family_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (family == Family::Custom) {
    if (o.constants_file.empty()) throw UsageError("--family Custom needs --constants FILE");
    const Json c = read_json_file(o.constants_file);
    auto vec = [&c](const char* key) {
      if (!c.contains(key) || !c[key].is_array() || c[key].size() != 3)
        throw UsageError(std::string("constants file needs a 3-element array \"") + key + "\"");
      try {
        return Vec3<Rational>(rational_from_json(c[key][0]), rational_from_json(c[key][1]),
                              rational_from_json(c[key][2]));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    };
    try {
      return make_custom(vec("12"), vec("13"), vec("23"));
    } catch (const JacobiFailure& e) {
      throw UsageError(e.what());
    }
  }

  Params p;
  try {
    if (!file.is_null()) p = params_from_json(file);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--params: ") + e.what());
  }
  if (!o.alpha.empty()) p.alpha = flag_rational("alpha", o.alpha);
  if (!o.beta.empty()) p.beta = flag_rational("beta", o.beta);
  if (!o.gamma.empty()) p.gamma = flag_rational("gamma", o.gamma);
  if (!o.delta.empty()) p.delta = flag_rational("delta", o.delta);
  if (o.eta) p.eta = *o.eta;
  try {
    return make_group(family, p);
  } catch (const ConstraintViolation& e) {
    throw UsageError(std::string("parameters violate ") + std::string(to_string(family)) +
                     " constraint " + e.what());
  }
}

Flavor flavor_from(const PointOptions& o) {
  try {
    return parse_flavor(o.flavor);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json algebra_json(const LieAlgebra3<Rational>& a) {
  Json j = params_json(a.family(), a.params());
  j["brackets"] = {{"[e1,e2]", matrix_json(a.bracket_basis(0, 1).transpose())[0]},
                   {"[e1,e3]", matrix_json(a.bracket_basis(0, 2).transpose())[0]},
                   {"[e2,e3]", matrix_json(a.bracket_basis(1, 2).transpose())[0]}};
  return j;
}

void emit(const std::string& text, const OutputOptions& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write \"" + o.out + "\"");
  f << text;
}

std::string dump(Json j, const OutputOptions& o) {
  if (o.with_float) {
    Json copy = j;
    j["float"] = floatify(copy);
  }
  return j.dump(2) + "\n";
}

std::string matrix_text(const Mat3<Rational>& m) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << "  ";
    for (int j = 0; j < 3; ++j) os << std::setw(10) << to_string(m(i, j));
    os << '\n';
  }
  return os.str();
}

int cmd_derive(const PointOptions& po, const OutputOptions& oo, std::ostream& out) {
  const auto a = algebra_from(po);
  const Flavor flavor = flavor_from(po);
  const auto conn = connection_for(a, flavor);
  const auto lc = levi_civita(a);
  const auto nj = nabla_J(lc);
  const auto curv = curvature(conn, a);
  const auto ric = ricci_form(curv);
  const auto sym = symmetrize(ric);

  if (oo.format == "text") {
    std::ostringstream os;
    os << to_string(a.family()) << ", " << to_string(flavor) << " connection\n";
    for (int i = 0; i < 3; ++i)
      os << "Gamma[e" << i + 1 << "] (row j: nabla_{e" << i + 1 << "} e_j)\n" << matrix_text(conn.gamma[i]);
    os << "Ric\n" << matrix_text(ric) << "symmetric Ric\n" << matrix_text(sym);
    emit(os.str(), oo, out);
    return kOk;
  }
  Json j;
  j["schema"] = kSchema;
  j["algebra"] = algebra_json(a);
  j["flavor"] = std::string(to_string(flavor));
  j["conventions"] = {
      {"gamma", "gamma[i][j][k] = coefficient of e_k in nabla_{e_i} e_j"},
      {"nabla_J", "nabla_J[i][j][k] = coefficient of e_k in (nabla_{e_i} J) e_j (Levi-Civita)"},
      {"curvature", "curvature[i][j][k][l] = coefficient of e_l in R(e_i,e_j) e_k"},
      {"ricci", "ricci[i][j] = Ric(e_i, e_j)"}};
  Json g = Json::array(), n = Json::array(), r = Json::array();
  for (int i = 0; i < 3; ++i) {
    g.push_back(matrix_json(conn.gamma[i]));
    n.push_back(matrix_json(nj.nj[i]));
    Json ri = Json::array();
    for (int jj = 0; jj < 3; ++jj) ri.push_back(matrix_json(curv.op(i, jj).transpose()));
    r.push_back(ri);
  }
  j["gamma"] = g;
  j["nabla_J"] = n;
  j["curvature"] = r;
  j["ricci"] = matrix_json(ric);
  j["symmetric_ricci"] = matrix_json(sym);
  emit(dump(j, oo), oo, out);
  return kOk;
}

int cmd_solve(const PointOptions& po, const OutputOptions& oo, std::ostream& out) {
  const auto a = algebra_from(po);
  const Flavor flavor = flavor_from(po);
  if (flavor == Flavor::LeviCivita) throw UsageError("solve needs --flavor canonical or kn");
  const auto t = symmetric_ricci(a, flavor);
  const auto system = assemble_system(t, a);
  const auto space = null_space(system);
  const auto red = rref(system);

  std::optional<CaseReport> report;
  if (a.family() != Family::Custom) report = evaluate_point(a.family(), flavor, a.params());

  if (oo.format == "text") {
    std::ostringstream os;
    os << "dimension " << space.dimension() << '\n';
    for (Eigen::Index i = 0; i < space.basis.rows(); ++i)
      os << "  (" << to_string(space.basis(i, 0)) << ", " << to_string(space.basis(i, 1)) << ", "
         << to_string(space.basis(i, 2)) << ")\n";
    if (report) os << "theorem case " << report->case_id << ": " << to_string(report->verdict) << '\n';
    emit(os.str(), oo, out);
    return kOk;
  }
  Json j;
  j["schema"] = kSchema;
  j["algebra"] = algebra_json(a);
  j["flavor"] = std::string(to_string(flavor));
  j["dimension"] = space.dimension();
  j["basis"] = matrix_json(space.basis);
  j["symmetric_ricci"] = matrix_json(t);
  j["system"] = matrix_json(system);
  j["rref"] = matrix_json(red.matrix);
  if (report)
    j["theorem"] = {{"case_id", report->case_id},
                    {"predicted", report->predicted ? space_json(*report->predicted) : Json(nullptr)},
                    {"verdict", std::string(to_string(report->verdict))}};
  emit(dump(j, oo), oo, out);
  return kOk;
}

int cmd_check_lemmas(const LemmaCheckOptions& lo, const OutputOptions& oo, std::ostream& out) {
  const auto result = check_lemmas(lo);
  Json dets = Json::array();
  for (const auto& id : reference::determinant_identities()) {
    ParamSampler s(lo.seed);
    int agree = 0, total = 50;
    for (int i = 0; i < total; ++i) {
      const Params p = s.params(id.family);
      if (reference::abcd(id.family, id.flavor, p)->det() == id.closed_form(p)) ++agree;
    }
    dets.push_back({{"id", id.id}, {"closed_form", id.closed_form_text}, {"points", total},
                    {"agree", agree}});
  }
  if (oo.format == "text") {
    std::ostringstream os;
    for (const auto& s : result.summaries) {
      os << std::left << std::setw(4) << to_string(s.family) << std::setw(11) << to_string(s.flavor)
         << std::setw(14) << to_string(s.kind) << s.comparisons - s.mismatches << "/"
         << s.comparisons << " agree";
      for (const auto& c : s.mismatched_components) os << "  differs: " << c;
      os << '\n';
    }
    for (const auto& d : dets)
      os << "AD-BC " << d["id"].get<std::string>() << " vs " << d["closed_form"].get<std::string>()
         << ": " << d["agree"].get<int>() << "/" << d["points"].get<int>() << " agree\n";
    emit(os.str(), oo, out);
  } else {
    Json j = lemma_check_json(result);
    j["determinant_identities"] = dets;
    emit(dump(j, oo), oo, out);
  }
  return result.clean() ? kOk : kFindings;
}

int cmd_scan(const std::string& config_path, unsigned threads, const OutputOptions& oo,
             std::ostream& out, std::ostream& err) {
  ScanConfig config = default_scan_config();
  if (!config_path.empty()) {
    try {
      config = scan_config_from_json(read_json_file(config_path));
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }
  ScanResult result;
  try {
    result = scan(config, threads);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  const Json doc = scan_json(result, config);
  if (oo.format == "json")
    emit(dump(doc, oo), oo, out);
  else if (oo.format == "csv")
    emit(render_csv(rows_from_scan_json(doc)), oo, out);
  else
    emit(render_text(rows_from_scan_json(doc)), oo, out);
  const auto& s = result.summary;
  if (!oo.out.empty())
    out << "points " << s.total() << ", match " << s.match << ", mismatch " << s.mismatch
        << ", uncovered " << s.uncovered << '\n';
  (void)err;
  return s.match == s.total() ? kOk : kFindings;
}

int cmd_report(const std::string& in_path, const OutputOptions& oo, std::ostream& out) {
  const Json doc = read_json_file(in_path);
  std::vector<ReportRow> rows;
  try {
    rows = rows_from_scan_json(doc);
  } catch (const std::exception& e) {
    throw UsageError("\"" + in_path + "\": " + e.what());
  }
  if (oo.format == "csv")
    emit(render_csv(rows), oo, out);
  else if (oo.format == "text")
    emit(render_text(rows), oo, out);
  else
    emit(dump(doc, oo), oo, out);
  const ScanSummary s = summarize(rows);
  return s.match == s.total() ? kOk : kFindings;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left-invariant Ricci collineations on three-dimensional Lorentzian Lie groups", "lrc"};
  app.require_subcommand(1);

  PointOptions derive_pt, solve_pt;
  OutputOptions derive_out, solve_out, lemma_out, scan_out, report_out;
  report_out.format = "text";

  auto* derive = app.add_subcommand("derive", "connection, curvature and Ricci tables");
  add_point_options(derive, derive_pt);
  add_output_options(derive, derive_out, {"json", "text"});

  auto* solve = app.add_subcommand("solve", "left-invariant Ricci collineations at one point");
  add_point_options(solve, solve_pt);
  add_output_options(solve, solve_out, {"json", "text"});

  LemmaCheckOptions lemma_opts;
  std::vector<std::string> lemma_families;
  auto* lemmas = app.add_subcommand("check-lemmas", "compare printed tensors with the engine");
  lemmas->add_option("--points", lemma_opts.points_per_pair, "random points per family/connection")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lemmas->add_option("--seed", lemma_opts.seed)->capture_default_str();
  lemmas->add_option("--family", lemma_families, "restrict to these families");
  add_output_options(lemmas, lemma_out, {"json", "text"});

  std::string config_path;
  unsigned threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "sweep a parameter grid against the classification");
  scan_cmd->add_option("--config", config_path, "scan config (JSON); default grid otherwise");
  scan_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  bool print_config = false;
  scan_cmd->add_flag("--print-config", print_config, "print the effective grid config and exit");
  add_output_options(scan_cmd, scan_out, {"json", "csv", "text"});

  std::string in_path;
  auto* report = app.add_subcommand("report", "render a scan file");
  report->add_option("in", in_path, "scan JSON produced by `scan`")->required();
  add_output_options(report, report_out, {"json", "csv", "text"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lrc: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*derive) return cmd_derive(derive_pt, derive_out, out);
    if (*solve) return cmd_solve(solve_pt, solve_out, out);
    if (*lemmas) {
      if (!lemma_families.empty()) {
        lemma_opts.families.clear();
        for (const auto& f : lemma_families) {
          try {
            lemma_opts.families.push_back(parse_family(f));
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
        }
      }
      return cmd_check_lemmas(lemma_opts, lemma_out, out);
    }
    if (*scan_cmd && print_config) {
      ScanConfig config = default_scan_config();
      if (!config_path.empty()) {
        try {
          config = scan_config_from_json(read_json_file(config_path));
        } catch (const ConfigError& e) {
          throw UsageError(e.what());
        }
      }
      emit(scan_config_json(config).dump(2) + "\n", scan_out, out);
      return kOk;
    }
    if (*scan_cmd) return cmd_scan(config_path, threads, scan_out, out, err);
    if (*report) return cmd_report(in_path, report_out, out);
  } catch (const UsageError& e) {
    err << "lrc: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lrc::cli
