#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrsym/config.hpp"
#include "arrsym/graph.hpp"

namespace arrsym {

using VertexSet = std::vector<std::size_t>;  // sorted ascending

// Delta_{ij}: tuples whose j-th entry is i (and, being distinct, avoid i
// elsewhere). i and j are 1-based, matching the D_i_j family labels.
VertexSet delta_set(std::size_t n, std::size_t k, std::size_t i, std::size_t j);

// All Delta_{ij}, ordered by (i, j) lexicographically: index (i-1)*k + (j-1).
struct DeltaFamily {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<VertexSet> sets;
  std::vector<std::string> labels;  // "D_i_j"

  std::size_t index(std::size_t i, std::size_t j) const { return (i - 1) * k + (j - 1); }
};

DeltaFamily delta_family(std::size_t n, std::size_t k, std::size_t vertex_guard = 50'000);

bool is_independent(const Graph& g, const VertexSet& s);
// Independent and no vertex outside s can be added.
bool is_maximal_independent(const Graph& g, const VertexSet& s);

enum class MisMode { size_only, enumerate_all };

struct MisResult {
  std::size_t size = 0;
  // Every maximum independent set in lexicographic order (enumerate_all only).
  std::optional<std::vector<VertexSet>> sets;
  // One maximum independent set found by the size search.
  VertexSet witness;
  std::uint64_t nodes = 0;
};

// Exact independence number via branch-and-bound maximum clique on the
// complement (greedy-colouring bound). enumerate_all additionally lists every
// maximum independent set by Bron-Kerbosch with Tomita pivoting on the
// complement, pruned to cliques that can still reach the maximum size.
// Throws BudgetExceeded when enumerate_all is asked for a graph larger than
// config.enumerate_all_guard.
MisResult max_independent_sets(const Graph& g, MisMode mode, const Config& config = {});

struct MisCharacterizationReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t vertices = 0;
  bool enumerated = false;
  std::size_t independence_number = 0;
  std::size_t expected_size = 0;  // (n-1)!/(n-k)!
  // Number of maximum independent sets found (enumerated runs only).
  std::optional<std::size_t> set_count;
  std::size_t expected_count = 0;  // n*k
  // Enumerated: the search output equals the Delta family set by set.
  // Otherwise: every Delta_{ij} is independent, maximal and of maximum size.
  bool family_matches = false;
  bool pass = false;
};

// Throws ValidationError unless n > 2 and 1 <= k <= n.
MisCharacterizationReport verify_mis_characterization(std::size_t n, std::size_t k, const Config& config = {});

}  // namespace arrsym
