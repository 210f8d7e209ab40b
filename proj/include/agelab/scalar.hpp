#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace agelab {

/// Exact rational coefficient field. Always in lowest terms, denominator > 0
/// (guaranteed by the backend).
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Scalar& s) {
  const BigInt num = boost::multiprecision::numerator(s);
  const BigInt den = boost::multiprecision::denominator(s);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "n" or "n/d". Throws std::invalid_argument on malformed input or d == 0.
inline Scalar scalar_from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Scalar(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational '" + text + "': " + e.what());
  }
}

}  // namespace agelab
