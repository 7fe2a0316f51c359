#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mpart {

// All counting paths use exact integers; interpolation uses exact rationals.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace mpart
