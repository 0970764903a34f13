#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fqmzv {

/// Arbitrary-precision integer used for exponents, digit machinery and
/// index-tuple parts. Everything in this library is exact; there is no
/// floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace fqmzv
