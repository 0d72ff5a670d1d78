#include "lrc/rational.hpp"

#include <regex>
#include <stdexcept>

namespace lrc {

Rational parse_rational(std::string_view text) {
  static const std::regex kPattern(R"((-?)(\d+)(?:/(\d+))?)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, kPattern))
    throw std::invalid_argument("not a rational (expected \"p\" or \"p/q\"): \"" + s + "\"");
  using boost::multiprecision::mpz_int;
  mpz_int num(m[2].str());
  if (m[1].matched && m[1].length() > 0) num = -num;
  mpz_int den(1);
  if (m[3].matched) {
    den = mpz_int(m[3].str());
    if (den == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  const auto num = numerator(q);
  const auto den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace lrc
