#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace iml {

// Arbitrary-precision integers and reduced fractions (denominator > 0).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const BigInt& z) { return z.str(); }

}  // namespace iml
