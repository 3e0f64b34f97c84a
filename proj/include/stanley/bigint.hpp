#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stanley {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Number of complete plays from a position (also used for tableau and word counts).
using PlayCount = BigInt;

}  // namespace stanley
