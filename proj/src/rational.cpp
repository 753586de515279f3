#include "uclab/rational.hpp"

namespace uclab {

std::string formatRational(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double toDouble(const Rational& r) { return r.convert_to<double>(); }

}  // namespace uclab
