#pragma once

#include <cstdint>
#include <string>

namespace arrsym {

// Exact group orders. 2 * (16!)^2 is about 8.8e26, well inside 128 bits.
using Order = unsigned __int128;

// Multiplies with an explicit overflow check; throws ValidationError.
Order checked_mul(Order a, Order b);

std::string to_string(Order value);

Order factorial(unsigned n);

}  // namespace arrsym
