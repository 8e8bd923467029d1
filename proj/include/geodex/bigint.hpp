// Arbitrary-precision integers for counting formulas, group orders and
// divisibility screens. Backed by Boost.Multiprecision (header-only).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace geodex {

using Bigint = boost::multiprecision::cpp_int;

}  // namespace geodex
