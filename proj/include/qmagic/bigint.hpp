#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qmagic {

// Coefficients of exact values are arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace qmagic
