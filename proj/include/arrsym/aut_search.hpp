#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrsym/bitset.hpp"
#include "arrsym/graph.hpp"
#include "arrsym/order.hpp"
#include "arrsym/permutation.hpp"

namespace arrsym {

// Ordered vertex partition. Cells are listed in order; the order matters.
struct OrderedPartition {
  std::vector<std::vector<std::size_t>> cells;

  static OrderedPartition unit(std::size_t vertex_count);
  bool is_discrete() const;
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

// Coarsest equitable refinement by neighbour counts. Cells are split in
// place, fragments ordered by ascending neighbour count; vertices inside a
// cell are reported in ascending order. Throws ValidationError when p does
// not partition the vertex set.
OrderedPartition equitable_refinement(const Graph& g, const OrderedPartition& p);

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
};

struct AutResult {
  std::vector<Permutation> generators;
  Order order = 1;
  std::vector<std::uint8_t> certificate;
  // canonical_labeling(v) is the position of v in the canonical form.
  Permutation canonical_labeling;
  std::uint64_t nodes = 0;

  std::string certificate_hex() const;
};

// Individualization-refinement search. Throws BudgetExceeded when the search
// tree grows beyond options.node_budget; never returns a partial answer.
AutResult automorphism_group(const Graph& g, const SearchOptions& options = {});

std::vector<std::uint8_t> canonical_certificate(const Graph& g, const SearchOptions& options = {});

struct IsomorphismResult {
  bool isomorphic = false;
  // Maps vertices of the first graph onto the second; set when isomorphic.
  std::optional<Permutation> witness;
};

// Certificate comparison; the witness is checked edge by edge before return.
IsomorphismResult are_isomorphic(const Graph& a, const Graph& b, const SearchOptions& options = {});

// Intersection of the open neighbourhoods of `subset`; all vertices when empty.
Bitset common_neighborhood(const Graph& g, const std::vector<std::size_t>& subset);

std::string to_hex(const std::vector<std::uint8_t>& bytes);

}  // namespace arrsym
