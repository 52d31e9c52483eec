#include "arrsym/families.hpp"

#include <string>

#include "arrsym/error.hpp"

namespace arrsym {
namespace {

void check_arrangement_params(std::size_t n, std::size_t k, std::size_t r) {
  if (!(1 <= r && r <= k && k <= n)) {
    throw ValidationError("arrangement graph needs 1 <= r <= k <= n (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ", r=" + std::to_string(r) + ")");
  }
}

std::size_t guarded_count(std::size_t n, std::size_t k, std::size_t vertex_guard) {
  const std::uint64_t count = arrangement_count(n, k);
  if (count > vertex_guard) {
    throw BudgetExceeded(std::to_string(count) + " vertices exceed the vertex guard of " +
                         std::to_string(vertex_guard));
  }
  return static_cast<std::size_t>(count);
}

template <typename Map>
Permutation tuple_map(std::size_t n, std::size_t k, Map&& map) {
  const std::size_t count = static_cast<std::size_t>(arrangement_count(n, k));
  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i) images[i] = static_cast<Point>(rank(map(unrank(i, n, k))));
  return Permutation(std::move(images));
}

}  // namespace

Graph build_arrangement_graph(std::size_t n, std::size_t k, std::size_t r, std::size_t vertex_guard) {
  check_arrangement_params(n, k, r);
  const std::size_t count = guarded_count(n, k, vertex_guard);
  std::vector<KTuple> tuples;
  tuples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) tuples.push_back(unrank(i, n, k));

  Graph::Builder b(count);
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      if (differing_coordinates(tuples[u], tuples[v]) == r) b.add_edge(u, v);
    }
  }
  std::vector<std::vector<Point>> labels;
  labels.reserve(count);
  for (const KTuple& t : tuples) labels.push_back(t.one_based());
  b.set_labels(std::move(labels));
  b.set_meta({GraphMeta::Family::arrangement, n, k, r, {}});
  Graph g = std::move(b).build();
  if (!g.regular_degree()) throw InternalError("arrangement graph is not regular");
  return g;
}

Graph build_cayley_graph(const ConnectionSet& connection, std::size_t vertex_guard) {
  const std::size_t n = connection.degree();
  const std::size_t count = guarded_count(n, n, vertex_guard);
  Graph::Builder b(count);
  std::vector<std::vector<Point>> labels(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Permutation g = psi(unrank(i, n, n));
    labels[i] = g.one_based();
    for (const Permutation& s : connection.elements()) {
      // s g: apply s, then g.
      const std::size_t j = rank(psi_inverse(compose(s, g)));
      b.add_edge(i, j);
    }
  }
  b.set_labels(std::move(labels));
  b.set_meta({GraphMeta::Family::cayley, n, n, 0, connection.describe()});
  Graph g = std::move(b).build();
  if (g.regular_degree() != connection.size()) throw InternalError("Cayley graph degree differs from |S|");
  return g;
}

Permutation vertex_map_P(const Permutation& g, std::size_t n, std::size_t k) {
  if (g.degree() != n) throw ValidationError("P(g) needs g in S_n");
  return tuple_map(n, k, [&](const KTuple& v) { return apply_P(g, v); });
}

Permutation vertex_map_Q(const Permutation& h, std::size_t n, std::size_t k) {
  if (h.degree() != k) throw ValidationError("Q(h) needs h in S_k");
  return tuple_map(n, k, [&](const KTuple& v) { return apply_Q(h, v); });
}

Permutation vertex_map_h(std::size_t n) {
  return tuple_map(n, n, [](const KTuple& v) { return apply_h(v); });
}

bool is_automorphism(const Graph& graph, const Permutation& f) {
  if (f.degree() != graph.vertex_count()) throw ValidationError("is_automorphism: degree mismatch");
  // f is a bijection, so mapping every edge onto an edge is enough: the edge
  // counts agree and non-edges must then map to non-edges.
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    const Bitset& row = graph.neighbours(u);
    const Bitset& target = graph.neighbours(f(static_cast<Point>(u)));
    for (std::size_t v = row.first(); v < row.size(); v = row.next(v)) {
      if (!target.test(f(static_cast<Point>(v)))) return false;
    }
  }
  return true;
}

std::vector<Permutation> candidate_aut_generators(std::size_t n, std::size_t k, std::size_t r,
                                                  std::size_t vertex_guard) {
  check_arrangement_params(n, k, r);
  guarded_count(n, k, vertex_guard);
  std::vector<Permutation> out;
  if (n == 1) {
    out.push_back(Permutation::identity(1));
    return out;
  }
  for (const Permutation& g : symmetric_group_generators(n)) out.push_back(vertex_map_P(g, n, k));
  if (k >= 2) {
    for (const Permutation& h : symmetric_group_generators(k)) out.push_back(vertex_map_Q(h, n, k));
  }
  if (k == n) out.push_back(vertex_map_h(n));

  const Graph graph = build_arrangement_graph(n, k, r, vertex_guard);
  for (const Permutation& f : out) {
    if (!is_automorphism(graph, f)) {
      throw InternalError("candidate generator is not an automorphism of A(" + std::to_string(n) + "," +
                          std::to_string(k) + "," + std::to_string(r) + ")");
    }
  }
  return out;
}

}  // namespace arrsym
