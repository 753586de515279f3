#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace uclab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is 1.
std::string formatRational(const Rational& r);
double toDouble(const Rational& r);

}  // namespace uclab
