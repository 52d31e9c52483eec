#pragma once

#include <cstddef>
#include <cstdint>

namespace arrsym {

struct Config {
  std::uint64_t enumeration_threshold = 1'000'000;
  std::uint64_t node_budget = 10'000'000;
  std::size_t vertex_guard = 50'000;
  std::size_t enumerate_all_guard = 60;
  unsigned workers = 1;

  // Throws ValidationError when a guard is zero.
  void validate() const;

  // Reads ARRSYM_ENUM_THRESHOLD, ARRSYM_NODE_BUDGET, ARRSYM_VERTEX_GUARD,
  // ARRSYM_ENUMERATE_GUARD and ARRSYM_WORKERS on top of the defaults.
  static Config from_environment();
};

}  // namespace arrsym
