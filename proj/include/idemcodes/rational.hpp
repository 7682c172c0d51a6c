#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace idemcodes {

/// Exact arbitrary-precision rational; always stored in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace idemcodes
