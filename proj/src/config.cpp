#include "arrsym/config.hpp"

#include <cstdlib>
#include <string>

#include "arrsym/error.hpp"

namespace arrsym {
namespace {

template <typename T>
void read_env(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    field = static_cast<T>(value);
  } catch (const std::exception&) {
    throw ValidationError(std::string("environment variable ") + name + " is not a positive integer: " + raw);
  }
}

}  // namespace

void Config::validate() const {
  if (enumeration_threshold == 0) throw ValidationError("enumeration threshold must be positive");
  if (node_budget == 0) throw ValidationError("node budget must be positive");
  if (vertex_guard == 0) throw ValidationError("vertex guard must be positive");
  if (enumerate_all_guard == 0) throw ValidationError("enumerate-all guard must be positive");
  if (workers == 0) throw ValidationError("worker count must be at least 1");
}

Config Config::from_environment() {
  Config c;
  read_env("ARRSYM_ENUM_THRESHOLD", c.enumeration_threshold);
  read_env("ARRSYM_NODE_BUDGET", c.node_budget);
  read_env("ARRSYM_VERTEX_GUARD", c.vertex_guard);
  read_env("ARRSYM_ENUMERATE_GUARD", c.enumerate_all_guard);
  read_env("ARRSYM_WORKERS", c.workers);
  c.validate();
  return c;
}

}  // namespace arrsym
