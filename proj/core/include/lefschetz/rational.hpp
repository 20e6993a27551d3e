#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lefschetz {

// Exact arithmetic backbone. Every value that feeds a verdict is either an
// integer or one of these; no floating point anywhere in the engine.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Serialized form is always "num/den", denominator kept even when 1, so that
// readers never have to guess whether a field passed through floating point.
inline std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

class engine_error : public std::runtime_error {
 public:
  explicit engine_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lefschetz
