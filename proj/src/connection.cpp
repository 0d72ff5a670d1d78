#include "lrc/connection.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace lrc {

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::LeviCivita: return "levi-civita";
    case Flavor::Canonical: return "canonical";
    case Flavor::KobayashiNomizu: return "kn";
  }
  return {};
}

Flavor parse_flavor(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "canonical" || t == "can" || t == "0") return Flavor::Canonical;
  if (t == "kn" || t == "kobayashi-nomizu" || t == "1") return Flavor::KobayashiNomizu;
  if (t == "levi-civita" || t == "lc") return Flavor::LeviCivita;
  throw std::invalid_argument("unknown connection \"" + std::string(text) +
                              "\" (expected canonical or kn)");
}

}  // namespace lrc
