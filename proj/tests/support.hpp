#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arrsym/graph.hpp"
#include "arrsym/order.hpp"
#include "arrsym/permutation.hpp"

// Independent oracles and the shared graph corpus. Nothing here calls the
// search engines under test; everything is exhaustive or closure based.
namespace oracle {

using arrsym::Graph;
using arrsym::Permutation;

Permutation random_permutation(std::size_t degree, std::mt19937_64& rng);

// |Aut(g)| by checking all vertex_count! bijections. Use for <= 9 vertices.
std::uint64_t brute_aut_order(const Graph& g);

// Orbit-closure of the generated group, elements compared by one-line form.
// Returns 0 when the closure exceeds `cap`.
std::size_t closure_order(std::size_t degree, const std::vector<Permutation>& gens, std::size_t cap);

// Independence number by trying every subset. Use for <= 20 vertices.
std::size_t brute_independence_number(const Graph& g);

// Maximum independent sets by exhaustive subset scan, each sorted.
std::vector<std::vector<std::size_t>> brute_maximum_independent_sets(const Graph& g);

std::vector<std::size_t> brute_common_neighbourhood(const Graph& g, const std::vector<std::size_t>& subset);

std::size_t derangement_count(std::size_t m);
std::size_t binomial(std::size_t n, std::size_t k);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Classic small graphs, small arrangement and Cayley graphs and seeded
// random graphs; all at most 24 vertices.
std::vector<NamedGraph> corpus();

}  // namespace oracle

// The property suites, shared by the unit tests and the acceptance binary.
namespace properties {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string failure;

  void fail(const std::string& what) {
    if (ok) failure = what;
    ok = false;
  }
};

Outcome composition_laws(std::size_t samples, std::uint64_t seed);
Outcome tuple_maps_exhaustive(std::size_t n_max);
Outcome neighbourhood_covariance(std::size_t subsets_per_generator, std::uint64_t seed);
Outcome schreier_sims_vs_closure(std::size_t groups, std::size_t max_order, std::uint64_t seed);
Outcome independence_oracle(std::size_t max_vertices);
Outcome certificate_invariance(std::size_t relabelings, std::uint64_t seed);

}  // namespace properties
