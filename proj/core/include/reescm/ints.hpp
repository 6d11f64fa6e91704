#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace reescm {

// All counting and polynomial arithmetic in the library is exact; Int is
// the shared arbitrary-precision integer type.
using Int = boost::multiprecision::cpp_int;

}  // namespace reescm
