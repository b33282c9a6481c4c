#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "urn/params.hpp"

namespace urn {

using Rational = boost::multiprecision::cpp_rational;

// p as an exact rational: the declared fraction when one was supplied,
// otherwise the exact binary value of the double.
inline Rational exact_p(const UrnParams& params) {
  if (params.p_fraction) return Rational(params.p_fraction->num, params.p_fraction->den);
  return Rational(params.p);
}

}  // namespace urn
