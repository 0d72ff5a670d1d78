#include "lrc/classifier.hpp"

#include <map>

#include "lrc/reference.hpp"

namespace lrc {

namespace {

using Q = Rational;
using Span = std::optional<RowBasis<Q>>;

RowBasis<Q> rows(std::initializer_list<std::array<Q, 3>> vs) {
  RowBasis<Q> b(static_cast<Eigen::Index>(vs.size()), 3);
  Eigen::Index r = 0;
  for (const auto& v : vs) {
    for (int j = 0; j < 3; ++j) b(r, j) = v[j];
    ++r;
  }
  return b;
}

const Q kZero(0), kOne(1);

Span full(const Params&) { return Mat3<Q>::Identity().eval(); }
Span e1(const Params&) { return rows({{kOne, kZero, kZero}}); }
Span e2(const Params&) { return rows({{kZero, kOne, kZero}}); }
Span e3(const Params&) { return rows({{kZero, kZero, kOne}}); }
Span trivial(const Params&) { return RowBasis<Q>(0, 3); }

/// span{e2 + c e3}; nullopt when the denominator of c vanishes.
Span e2_plus(const Q& num, const Q& den) {
  if (den == 0) return std::nullopt;
  return rows({{kZero, kOne, num / den}});
}

bool eta_is(const Params& p, int v) { return p.eta && *p.eta == v; }

using Pred = std::function<bool(const Params&)>;
using SpanFn = std::function<Span(const Params&)>;

struct Builder {
  Family family;
  Flavor flavor;
  std::vector<TheoremCase> cases;

  Builder& add(const std::string& label, std::string statement, Pred pred, SpanFn span) {
    cases.push_back({std::string(to_string(family)) + "/" + std::string(to_string(flavor)) + "/" +
                         label,
                     family, flavor, std::move(statement), std::move(pred), std::move(span)});
    return *this;
  }
};

Builder builder(Family f, Flavor fl) { return Builder{f, fl, {}}; }

// -C/D from the printed abbreviations.
Span minus_c_over_d(Family f, Flavor fl, const Params& p) {
  const auto m = reference::abcd(f, fl, p);
  return e2_plus(-m->C, m->D);
}

std::map<std::pair<Family, Flavor>, std::vector<TheoremCase>> build_all() {
  std::map<std::pair<Family, Flavor>, std::vector<TheoremCase>> all;
  const Flavor C = Flavor::Canonical, K = Flavor::KobayashiNomizu;
  auto put = [&all](Builder&& b) { all[{b.family, b.flavor}] = std::move(b.cases); };

  // G1: no left-invariant Ricci collineations for either connection.
  put(std::move(builder(Family::G1, C).add("(none)", "all parameters -> {0}",
                                           [](const Params&) { return true; }, trivial)));
  put(std::move(builder(Family::G1, K).add("(none)", "all parameters -> {0}",
                                           [](const Params&) { return true; }, trivial)));

  put(std::move(
      builder(Family::G2, C)
          .add("(1)", "alpha=beta=0 -> <e3>",
               [](const Params& p) { return p.alpha == 0 && p.beta == 0; }, e3)
          .add("(2)", "alpha!=0, beta!=0, AD-BC!=0 -> <e2-(C/D)e3>",
               [](const Params& p) {
                 return p.alpha != 0 && p.beta != 0 &&
                        reference::abcd(Family::G2, Flavor::Canonical, p)->det() != 0;
               },
               [](const Params& p) { return minus_c_over_d(Family::G2, Flavor::Canonical, p); })));

  put(std::move(
      builder(Family::G2, K)
          .add("(1)", "alpha=beta=0 -> <e3>",
               [](const Params& p) { return p.alpha == 0 && p.beta == 0; }, e3)
          .add("(2)", "alpha=0, beta!=0 -> <e2+(gamma/beta)e3>",
               [](const Params& p) { return p.alpha == 0 && p.beta != 0; },
               [](const Params& p) { return e2_plus(p.gamma, p.beta); })
          .add("(3)", "alpha!=0, beta!=0, alpha=4beta -> <e2-((2beta^2+gamma^2)/(beta gamma))e3>",
               [](const Params& p) { return p.alpha != 0 && p.beta != 0 && p.alpha == 4 * p.beta; },
               [](const Params& p) {
                 return e2_plus(-(2 * p.beta * p.beta + p.gamma * p.gamma), p.beta * p.gamma);
               })));

  put(std::move(
      builder(Family::G3, C)
          .add("(1)", "gamma=0 -> <e1,e2,e3>", [](const Params& p) { return p.gamma == 0; }, full)
          .add("(2)", "gamma!=0, alpha=beta=0 -> <e1,e2,e3>",
               [](const Params& p) { return p.gamma != 0 && p.alpha == 0 && p.beta == 0; }, full)
          .add("(3)", "alpha=0, gamma!=0, beta!=0, beta=gamma -> <e1,e2,e3>",
               [](const Params& p) {
                 return p.alpha == 0 && p.gamma != 0 && p.beta != 0 && p.beta == p.gamma;
               },
               full)
          .add("(4)", "alpha=0, gamma!=0, beta!=0, beta!=gamma -> <e2>",
               [](const Params& p) {
                 return p.alpha == 0 && p.gamma != 0 && p.beta != 0 && p.beta != p.gamma;
               },
               e2)
          .add("(5)", "gamma!=0, alpha!=0, gamma=alpha+beta -> <e1,e2,e3>",
               [](const Params& p) {
                 return p.gamma != 0 && p.alpha != 0 && p.gamma == p.alpha + p.beta;
               },
               full)
          .add("(6)", "gamma!=0, alpha!=0, gamma!=alpha+beta, alpha=beta -> <e3>",
               [](const Params& p) {
                 return p.gamma != 0 && p.alpha != 0 && p.gamma != p.alpha + p.beta &&
                        p.alpha == p.beta;
               },
               e3)));

  put(std::move(
      builder(Family::G3, K)
          .add("(1)", "alpha beta gamma=0 -> <e1,e2,e3>",
               [](const Params& p) { return p.alpha * p.beta * p.gamma == 0; }, full)
          .add("(2)", "alpha beta gamma!=0 -> <e3>",
               [](const Params& p) { return p.alpha * p.beta * p.gamma != 0; }, e3)));

  put(std::move(
      builder(Family::G4, C)
          .add("(1)", "beta=0, eta=1, alpha=0 -> <e1>",
               [](const Params& p) { return p.beta == 0 && eta_is(p, 1) && p.alpha == 0; }, e1)
          .add("(2)", "beta=0, eta=1, (alpha+2)(alpha+1/4)=0 -> <e3>",
               [](const Params& p) {
                 return p.beta == 0 && eta_is(p, 1) &&
                        (p.alpha + 2) * (p.alpha + Q(1) / Q(4)) == 0;
               },
               e3)
          .add("(3)", "beta=0, eta=-1, alpha=0 -> <e1>",
               [](const Params& p) { return p.beta == 0 && eta_is(p, -1) && p.alpha == 0; }, e1)
          .add("(4)", "beta=0, eta=-1, (alpha-2)(alpha-1/4)=0 -> <e3>",
               [](const Params& p) {
                 return p.beta == 0 && eta_is(p, -1) &&
                        (p.alpha - 2) * (p.alpha - Q(1) / Q(4)) == 0;
               },
               e3)
          .add("(5)", "beta!=0, eta=1, alpha=0, beta=1 -> <e1,e2,e3>",
               [](const Params& p) {
                 return p.beta != 0 && eta_is(p, 1) && p.alpha == 0 && p.beta == 1;
               },
               full)
          .add("(6)", "beta!=0, eta=1, alpha=2, beta=2 -> <e3>",
               [](const Params& p) {
                 return p.beta != 0 && eta_is(p, 1) && p.alpha == 2 && p.beta == 2;
               },
               e3)
          .add("(7)", "beta!=0, eta=1, alpha+2!=2beta, AD-BC=0 -> <e2-(C/D)e3>",
               [](const Params& p) {
                 return p.beta != 0 && eta_is(p, 1) && p.alpha + 2 != 2 * p.beta &&
                        reference::abcd(Family::G4, Flavor::Canonical, p)->det() == 0;
               },
               [](const Params& p) { return minus_c_over_d(Family::G4, Flavor::Canonical, p); })
          .add("(8)", "beta!=0, eta=-1, alpha=0, beta=-1 -> <e1,e2,e3>",
               [](const Params& p) {
                 return p.beta != 0 && eta_is(p, -1) && p.alpha == 0 && p.beta == -1;
               },
               full)
          .add("(9)", "beta!=0, eta=-1, alpha=-2, beta=-2 -> <e3>",
               [](const Params& p) {
                 return p.beta != 0 && eta_is(p, -1) && p.alpha == -2 && p.beta == -2;
               },
               e3)
          .add("(10)", "beta!=0, eta=-1, alpha-2!=2beta, AD-BC=0 -> <e2-(C/D)e3>",
               [](const Params& p) {
                 return p.beta != 0 && eta_is(p, -1) && p.alpha - 2 != 2 * p.beta &&
                        reference::abcd(Family::G4, Flavor::Canonical, p)->det() == 0;
               },
               [](const Params& p) { return minus_c_over_d(Family::G4, Flavor::Canonical, p); })));

  put(std::move(
      builder(Family::G4, K)
          .add("(1)", "alpha=beta=0 -> <e3>",
               [](const Params& p) { return p.alpha == 0 && p.beta == 0; }, e3)
          .add("(2)", "alpha=0, beta!=0 -> <e2-(1/beta)e3>",
               [](const Params& p) { return p.alpha == 0 && p.beta != 0; },
               [](const Params& p) { return e2_plus(Q(-1), p.beta); })
          .add("(3)", "alpha!=0, beta=0, alpha eta=1 -> <e1>",
               [](const Params& p) {
                 return p.alpha != 0 && p.beta == 0 && p.alpha * p.eta.value_or(0) == 1;
               },
               e1)
          .add("(4)", "alpha!=0, beta!=0, eta=1, alpha=4beta -> <e2+((alpha^2-8alpha+8)/(2alpha))e3>",
               [](const Params& p) {
                 return p.alpha != 0 && p.beta != 0 && eta_is(p, 1) && p.alpha == 4 * p.beta;
               },
               [](const Params& p) {
                 return e2_plus(p.alpha * p.alpha - 8 * p.alpha + 8, 2 * p.alpha);
               })
          .add("(5)", "alpha!=0, beta!=0, eta=1, alpha=2, beta=1 -> <e2-e3>",
               [](const Params& p) {
                 return p.alpha != 0 && p.beta != 0 && eta_is(p, 1) && p.alpha == 2 && p.beta == 1;
               },
               [](const Params&) { return e2_plus(Q(-1), Q(1)); })
          .add("(6)", "alpha!=0, beta!=0, eta=-1, alpha=4beta -> <e2+((alpha^2+8alpha+8)/(2alpha))e3>",
               [](const Params& p) {
                 return p.alpha != 0 && p.beta != 0 && eta_is(p, -1) && p.alpha == 4 * p.beta;
               },
               [](const Params& p) {
                 return e2_plus(p.alpha * p.alpha + 8 * p.alpha + 8, 2 * p.alpha);
               })
          .add("(7)", "alpha!=0, beta!=0, eta=-1, alpha=-2, beta=-1 -> <e2+e3>",
               [](const Params& p) {
                 return p.alpha != 0 && p.beta != 0 && eta_is(p, -1) && p.alpha == -2 &&
                        p.beta == -1;
               },
               [](const Params&) { return e2_plus(Q(1), Q(1)); })));

  put(std::move(builder(Family::G5, C).add("(all)", "all parameters -> <e1,e2,e3>",
                                           [](const Params&) { return true; }, full)));
  put(std::move(builder(Family::G5, K).add("(all)", "all parameters -> <e1,e2,e3>",
                                           [](const Params&) { return true; }, full)));

  auto g6_cubic = [](const Params& p) {
    return p.alpha * (2 * p.alpha * p.alpha - p.beta * p.beta);
  };
  put(std::move(
      builder(Family::G6, C)
          .add("(1)", "gamma=0, alpha(2alpha^2-beta^2)=0 -> <e1,e2,e3>",
               [g6_cubic](const Params& p) { return p.gamma == 0 && g6_cubic(p) == 0; }, full)
          .add("(2)", "gamma=0, alpha(2alpha^2-beta^2)!=0 -> <e3>",
               [g6_cubic](const Params& p) { return p.gamma == 0 && g6_cubic(p) != 0; }, e3)
          .add("(3)", "gamma!=0, alpha=beta=0, delta!=0 -> <e2>",
               [](const Params& p) {
                 return p.gamma != 0 && p.alpha == 0 && p.beta == 0 && p.delta != 0;
               },
               e2)
          .add("(4)", "gamma!=0, alpha!=0, alpha+beta=0, gamma+delta=0, delta!=0 -> <e2+(alpha/delta)e3>",
               [](const Params& p) {
                 return p.gamma != 0 && p.alpha != 0 && p.alpha + p.beta == 0 &&
                        p.gamma + p.delta == 0 && p.delta != 0;
               },
               [](const Params& p) { return e2_plus(p.alpha, p.delta); })
          .add("(5)", "gamma!=0, alpha!=0, alpha=beta, gamma=delta, delta!=0 -> <e2-(alpha/delta)e3>",
               [](const Params& p) {
                 return p.gamma != 0 && p.alpha != 0 && p.alpha == p.beta && p.gamma == p.delta &&
                        p.delta != 0;
               },
               [](const Params& p) { return e2_plus(-p.alpha, p.delta); })));

  put(std::move(
      builder(Family::G6, K)
          .add("(1)", "alpha=beta=0, delta!=0 -> <e1,e2,e3>",
               [](const Params& p) { return p.alpha == 0 && p.beta == 0 && p.delta != 0; }, full)
          .add("(2)", "alpha!=0 -> <-(gamma/alpha)e2+e3>",
               [](const Params& p) { return p.alpha != 0; },
               [](const Params& p) -> Span {
                 return rows({{kZero, -p.gamma / p.alpha, kOne}});
               })));

  put(std::move(
      builder(Family::G7, C)
          .add("(1)", "alpha=0, delta!=0, gamma!=0, beta=0 -> <e1>",
               [](const Params& p) {
                 return p.alpha == 0 && p.delta != 0 && p.gamma != 0 && p.beta == 0;
               },
               e1)
          .add("(2)", "alpha=0, delta!=0, gamma=0 -> <e1,e2,e3>",
               [](const Params& p) { return p.alpha == 0 && p.delta != 0 && p.gamma == 0; }, full)
          .add("(3)", "alpha!=0, gamma=delta=0 -> <e2+e3>",
               [](const Params& p) { return p.alpha != 0 && p.gamma == 0 && p.delta == 0; },
               [](const Params&) { return e2_plus(Q(1), Q(1)); })));

  put(std::move(
      builder(Family::G7, K)
          .add("(1)", "alpha=0, delta!=0, beta!=0, gamma=0 -> <e1-(beta/delta)e2-(beta/delta)e3>",
               [](const Params& p) {
                 return p.alpha == 0 && p.delta != 0 && p.beta != 0 && p.gamma == 0;
               },
               [](const Params& p) -> Span {
                 const Q c = -p.beta / p.delta;
                 return rows({{kOne, c, c}});
               })
          .add("(2)", "alpha=0, delta!=0, beta=0 -> <e1>",
               [](const Params& p) { return p.alpha == 0 && p.delta != 0 && p.beta == 0; }, e1)
          .add("(3)", "alpha!=0, gamma=0, delta=0 -> <e2+e3>",
               [](const Params& p) { return p.alpha != 0 && p.gamma == 0 && p.delta == 0; },
               [](const Params&) { return e2_plus(Q(1), Q(1)); })));
  return all;
}

const std::map<std::pair<Family, Flavor>, std::vector<TheoremCase>>& registry() {
  static const auto all = build_all();
  return all;
}

}  // namespace

const std::vector<TheoremCase>& theorem_cases(Family family, Flavor flavor) {
  static const std::vector<TheoremCase> none;
  const auto& all = registry();
  const auto it = all.find({family, flavor});
  return it == all.end() ? none : it->second;
}

Prediction theorem_predicate(Family family, Flavor flavor, const Params& params) {
  const auto& cases = theorem_cases(family, flavor);
  Prediction out;
  if (cases.empty()) {
    out.case_id = "uncovered";
    out.reason = "no classification statement for this family/connection";
    return out;
  }
  const TheoremCase* hit = nullptr;
  for (const auto& c : cases) {
    if (!c.predicate(params)) continue;
    if (hit == nullptr)
      hit = &c;
    else
      out.overlapping.push_back(c.id);
  }
  if (hit == nullptr) {
    // "iff": outside every listed case the space is trivial.
    out.case_id = std::string(to_string(family)) + "/" + std::string(to_string(flavor)) +
                  "/otherwise";
    out.space = SolutionSpace<Rational>::trivial();
    return out;
  }
  out.case_id = hit->id;
  if (auto span = hit->span(params))
    out.space = canonical_span(*span);
  else
    out.reason = "predicted coefficient has a vanishing denominator";
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "Match";
    case Verdict::Mismatch: return "Mismatch";
    case Verdict::Uncovered: return "Uncovered";
  }
  return {};
}

Verdict parse_verdict(std::string_view text) {
  if (text == "Match") return Verdict::Match;
  if (text == "Mismatch") return Verdict::Mismatch;
  if (text == "Uncovered") return Verdict::Uncovered;
  throw std::invalid_argument("unknown verdict \"" + std::string(text) + "\"");
}

namespace {

Certificate make_certificate(const CaseReport& r) {
  Certificate c;
  c.case_id = r.case_id;
  for (const auto& tc : theorem_cases(r.family, r.flavor))
    if (tc.id == r.case_id) c.statement = tc.statement;
  if (c.statement.empty() && r.case_id.ends_with("/otherwise"))
    c.statement = "no listed case applies -> {0}";
  c.system = r.system;
  const auto red = rref(r.system);
  c.rref = red.matrix;
  c.pivots = red.pivots;
  c.predicted = r.predicted;
  c.computed = r.computed;
  c.note = r.reason;
  return c;
}

}  // namespace

CaseReport evaluate_point(Family family, Flavor flavor, const Params& params) {
  const auto a = make_group(family, params);
  CaseReport r;
  r.family = family;
  r.flavor = flavor;
  r.params = a.params();
  r.system = assemble_system(symmetric_ricci(a, flavor), a);
  r.computed = null_space(r.system);
  Prediction pred = theorem_predicate(family, flavor, r.params);
  r.case_id = std::move(pred.case_id);
  r.overlapping = std::move(pred.overlapping);
  r.predicted = std::move(pred.space);
  r.reason = std::move(pred.reason);
  if (!r.predicted)
    r.verdict = Verdict::Uncovered;
  else if (*r.predicted == r.computed)
    r.verdict = Verdict::Match;
  else
    r.verdict = Verdict::Mismatch;
  if (r.verdict != Verdict::Match) r.certificate = make_certificate(r);
  return r;
}

Certificate certify_mismatch(const CaseReport& report) {
  if (report.verdict == Verdict::Match)
    throw NotAMismatch("report " + report.case_id + " is a Match; nothing to certify");
  return report.certificate ? *report.certificate : make_certificate(report);
}

bool report_less(const CaseReport& a, const CaseReport& b) {
  if (a.family != b.family) return a.family < b.family;
  if (a.flavor != b.flavor) return a.flavor < b.flavor;
  return params_less(a.params, b.params);
}

}  // namespace lrc
