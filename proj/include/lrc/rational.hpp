#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace lrc {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; no operation on it ever rounds.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p/q" or "p" (optional leading '-' on p only). Throws
/// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Zero test used by the elimination and tensor code. Exact for Rational;
/// double gets an absolute tolerance so the same templates run in floating
/// point for cross-checks.
template <typename Scalar>
struct ScalarTraits {
  static bool is_zero(const Scalar& x) { return x == Scalar(0); }
};

template <>
struct ScalarTraits<double> {
  static constexpr double kTolerance = 1e-12;
  static bool is_zero(double x) { return std::abs(x) < kTolerance; }
};

template <typename Scalar>
bool is_zero(const Scalar& x) {
  return ScalarTraits<Scalar>::is_zero(x);
}

}  // namespace lrc
