#include "lrc/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "lrc/reference.hpp"

namespace lrc {

namespace {

using Q = Rational;

Q frac(long n, long d) { return Q(n) / Q(d); }

const std::vector<Q>& set_for(const ScanConfig& c, const std::string& param) {
  const auto it = c.parameters.find(param);
  if (it == c.parameters.end()) throw ConfigError("no parameter set assigned to \"" + param + "\"");
  const auto s = c.parameter_sets.find(it->second);
  if (s == c.parameter_sets.end())
    throw ConfigError("parameter \"" + param + "\" refers to unknown set \"" + it->second + "\"");
  return s->second;
}

std::vector<Q> nonzero(const std::vector<Q>& v) {
  std::vector<Q> out;
  for (const auto& x : v)
    if (x != 0) out.push_back(x);
  return out;
}

Params make(Q a, Q b, Q g = Q(0), Q d = Q(0), std::optional<int> eta = std::nullopt) {
  Params p;
  p.alpha = std::move(a);
  p.beta = std::move(b);
  p.gamma = std::move(g);
  p.delta = std::move(d);
  p.eta = eta;
  return p;
}

std::vector<Q> fractions(long max_num, long max_den) {
  std::vector<Q> out;
  for (long q = 1; q <= max_den; ++q)
    for (long p = -max_num; p <= max_num; ++p) out.push_back(frac(p, q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Candidate rational roots for the determinant curves.
const std::vector<Q>& root_candidates() {
  static const std::vector<Q> c = fractions(24, 10);
  return c;
}

void add_boundaries(Family f, const ScanConfig& c, std::vector<Params>& out) {
  const auto& A = set_for(c, "alpha");
  const auto& B = set_for(c, "beta");
  const std::vector<Q> Bnz = nonzero(B);
  switch (f) {
    case Family::G2: {
      const std::vector<Q> G = nonzero(set_for(c, "gamma"));
      for (const Q& b : Bnz)
        for (const Q& g : G) {
          out.push_back(make(4 * b, b, g));  // alpha = 4 beta
          out.push_back(make(2 * b, b, g));  // D = 0 in the canonical case
          for (const Q& a : root_candidates()) {
            if (a == 0) continue;
            const Params p = make(a, b, g);
            if (reference::abcd(Family::G2, Flavor::Canonical, p)->det() == 0) out.push_back(p);
          }
        }
      break;
    }
    case Family::G3: {
      const auto& G = set_for(c, "gamma");
      for (const Q& a : A)
        for (const Q& b : B) out.push_back(make(a, b, a + b));  // gamma = alpha + beta
      for (const Q& a : A)
        for (const Q& g : G) out.push_back(make(a, a, g));  // alpha = beta
      for (const Q& b : B) out.push_back(make(Q(0), b, b));  // alpha = 0, beta = gamma
      break;
    }
    case Family::G4:
      for (int h : c.eta) {
        for (const Q& b : B) {
          out.push_back(make(2 * b - 2, b, {}, {}, h));  // alpha + 2 = 2 beta
          out.push_back(make(2 * b + 2, b, {}, {}, h));  // alpha - 2 = 2 beta
          out.push_back(make(4 * b, b, {}, {}, h));      // alpha = 4 beta
        }
        for (const Q& a : {Q(-2), frac(-1, 4), Q(2), frac(1, 4), Q(h)})
          out.push_back(make(a, Q(0), {}, {}, h));
        for (auto [a, b] : {std::pair<long, long>{0, 1}, {2, 2}, {0, -1}, {-2, -2}, {2, 1}, {-2, -1}})
          out.push_back(make(Q(a), Q(b), {}, {}, h));
        // AD - BC = 0 is a quartic curve in (alpha, beta); look for its
        // rational points over a fixed box rather than the grid values only.
        static const std::vector<Q> kBetas = nonzero(fractions(8, 4));
        for (const Q& b : kBetas)
          for (const Q& a : root_candidates()) {
            const Params p = make(a, b, {}, {}, h);
            if (reference::abcd(Family::G4, Flavor::Canonical, p)->det() == 0) out.push_back(p);
          }
      }
      break;
    case Family::G6: {
      const auto& G = set_for(c, "gamma");
      for (const Q& a : A)
        for (const Q& g : G) {
          out.push_back(make(a, a, g, g));    // alpha = beta, gamma = delta
          out.push_back(make(a, -a, g, -g));  // alpha = -beta, gamma = -delta
        }
      break;
    }
    default: break;
  }
}

}  // namespace

ScanConfig default_scan_config() {
  ScanConfig c;
  c.families.assign(kCatalogFamilies.begin(), kCatalogFamilies.end());
  c.flavors = {Flavor::Canonical, Flavor::KobayashiNomizu};
  c.parameter_sets["base"] = {Q(-1), Q(0), frac(1, 2), Q(1), Q(2)};
  for (const char* name : {"alpha", "beta", "gamma", "delta"}) c.parameters[name] = "base";
  return c;
}

void validate(const ScanConfig& c) {
  if (c.families.empty()) throw ConfigError("no families to scan");
  if (c.flavors.empty()) throw ConfigError("no connections to scan");
  for (Family f : c.families)
    if (f == Family::Custom) throw ConfigError("Custom algebras have no classification to scan");
  for (Flavor f : c.flavors)
    if (f == Flavor::LeviCivita) throw ConfigError("only canonical and kn connections are classified");
  for (int h : c.eta)
    if (h != 1 && h != -1) throw ConfigError("eta values must be 1 or -1");
  for (const char* name : {"alpha", "beta", "gamma", "delta"}) (void)set_for(c, name);
  for (const auto& [f, p] : c.points) {
    if (f == Family::Custom) throw ConfigError("explicit points need a catalog family");
    if (auto why = constraint_violation(f, p); !why.empty())
      throw ConfigError("explicit " + std::string(to_string(f)) + " point violates " + why);
  }
}

std::vector<Params> grid_points(Family f, const ScanConfig& c) {
  const auto& A = set_for(c, "alpha");
  const auto& B = set_for(c, "beta");
  const auto& G = set_for(c, "gamma");
  const auto& D = set_for(c, "delta");
  std::vector<Params> out;
  switch (f) {
    case Family::G1:
      for (const Q& a : A)
        for (const Q& b : B) out.push_back(make(a, b));
      break;
    case Family::G2:
    case Family::G3:
      for (const Q& a : A)
        for (const Q& b : B)
          for (const Q& g : G) out.push_back(make(a, b, g));
      break;
    case Family::G4:
      for (int h : c.eta)
        for (const Q& a : A)
          for (const Q& b : B) out.push_back(make(a, b, {}, {}, h));
      break;
    case Family::G5:
    case Family::G6: {
      // alpha gamma + s beta delta = 0 with s = +1 (G5) or -1 (G6)
      const Q s = f == Family::G5 ? Q(1) : Q(-1);
      for (const Q& a : A)
        for (const Q& b : B)
          for (const Q& g : G) {
            if (b != 0)
              out.push_back(make(a, b, g, -a * g / (s * b)));
            else if (a * g == 0)
              for (const Q& d : D) out.push_back(make(a, b, g, d));
          }
      break;
    }
    case Family::G7:
      for (const Q& a : A)
        for (const Q& b : B)
          for (const Q& d : D) {
            if (a != 0)
              out.push_back(make(a, b, Q(0), d));
            else
              for (const Q& g : G) out.push_back(make(a, b, g, d));
          }
      break;
    case Family::Custom: break;
  }
  if (c.boundaries) add_boundaries(f, c, out);
  for (const auto& [pf, p] : c.points)
    if (pf == f) out.push_back(p);
  const bool uses_eta = f == Family::G4;
  for (auto& p : out)
    if (!uses_eta) p.eta.reset();
  std::erase_if(out, [f](const Params& p) { return !constraint_violation(f, p).empty(); });
  std::sort(out.begin(), out.end(), params_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ScanSummary summarize(const std::vector<CaseReport>& reports) {
  ScanSummary s;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::Match: ++s.match; break;
      case Verdict::Mismatch: ++s.mismatch; break;
      case Verdict::Uncovered: ++s.uncovered; break;
    }
  }
  return s;
}

ScanResult scan(const ScanConfig& config, unsigned threads) {
  validate(config);
  struct Task {
    Family family;
    Flavor flavor;
    Params params;
  };
  std::vector<Task> tasks;
  for (Family f : config.families) {
    const auto pts = grid_points(f, config);
    for (Flavor fl : config.flavors)
      for (const auto& p : pts) tasks.push_back({f, fl, p});
  }

  std::vector<std::optional<CaseReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size() && !failed; i = next++) {
      try {
        slots[i] = evaluate_point(tasks[i].family, tasks[i].flavor, tasks[i].params);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ScanResult out;
  out.reports.reserve(slots.size());
  for (auto& s : slots) out.reports.push_back(std::move(*s));
  std::sort(out.reports.begin(), out.reports.end(), report_less);
  out.summary = summarize(out.reports);
  return out;
}

}  // namespace lrc
