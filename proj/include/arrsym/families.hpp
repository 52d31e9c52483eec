#pragma once

#include <cstddef>
#include <vector>

#include "arrsym/graph.hpp"
#include "arrsym/ktuple.hpp"
#include "arrsym/permutation.hpp"

namespace arrsym {

// A(n,k,r): vertex i is unrank(i, n, k); tuples are adjacent iff they differ
// in exactly r coordinates. Throws ValidationError unless 1 <= r <= k <= n,
// BudgetExceeded when n!/(n-k)! exceeds vertex_guard.
Graph build_arrangement_graph(std::size_t n, std::size_t k, std::size_t r, std::size_t vertex_guard = 50'000);

// Cay(S_n, S) with edges {g, s g}. Vertex i is the permutation whose
// one-line form has rank i, which makes psi the identity map on indexes.
Graph build_cayley_graph(const ConnectionSet& connection, std::size_t vertex_guard = 50'000);

// Vertex maps on A(n,k,r) indexes.
Permutation vertex_map_P(const Permutation& g, std::size_t n, std::size_t k);
Permutation vertex_map_Q(const Permutation& h, std::size_t n, std::size_t k);
Permutation vertex_map_h(std::size_t n);

// Checks that f preserves adjacency and non-adjacency.
bool is_automorphism(const Graph& graph, const Permutation& f);

// P(g) for the generating pair of S_n, Q(h) for that of S_k, and the
// tuple inversion when k == n. Each map is checked against the graph; a
// failure throws InternalError.
std::vector<Permutation> candidate_aut_generators(std::size_t n, std::size_t k, std::size_t r,
                                                  std::size_t vertex_guard = 50'000);

}  // namespace arrsym
