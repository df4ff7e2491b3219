#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pqc {

// Exact group orders: A_23 on 253 points already has order 23!/2 ~ 1.3e22,
// past 64 bits.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace pqc
