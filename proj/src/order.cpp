#include "arrsym/order.hpp"

#include <algorithm>

#include "arrsym/error.hpp"

namespace arrsym {

Order checked_mul(Order a, Order b) {
  Order out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ValidationError("group order exceeds 128 bits");
  }
  return out;
}

std::string to_string(Order value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Order factorial(unsigned n) {
  Order out = 1;
  for (unsigned i = 2; i <= n; ++i) out = checked_mul(out, i);
  return out;
}

}  // namespace arrsym
