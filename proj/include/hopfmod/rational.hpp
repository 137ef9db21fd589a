#pragma once

// Exact rational scalar used throughout. All arithmetic is over Q with
// arbitrary-precision integers; values are kept in lowest terms with a
// positive denominator, so equality is plain comparison.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfmod {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Thrown on malformed structure data (bad shapes, bad indices, bad rationals).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p" or "p/q" with optional sign; normalizes so the stored
/// denominator is positive. Rejects q = 0 and anything non-numeric.
inline Rational parseRational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) throw StructureError("zero denominator in rational: " + std::string(text));
    return Rational(num, den);
  } catch (const StructureError&) {
    throw;
  } catch (const std::exception&) {
    throw StructureError("cannot parse rational: " + std::string(text));
  }
}

/// Canonical rendering: "p" for integers, "p/q" with q > 0 otherwise.
inline std::string formatRational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hopfmod
