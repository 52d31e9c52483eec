#include "support.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "arrsym/aut_search.hpp"
#include "arrsym/families.hpp"
#include "arrsym/indsets.hpp"
#include "arrsym/ktuple.hpp"
#include "arrsym/stabilizer_chain.hpp"

namespace oracle {

using namespace arrsym;

Permutation random_permutation(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

std::uint64_t brute_aut_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  const auto edges = g.edges();
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (!g.adjacent(images[u], images[v])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

std::size_t closure_order(std::size_t degree, const std::vector<Permutation>& gens, std::size_t cap) {
  std::set<std::vector<Point>> seen{Permutation::identity(degree).images()};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (const Permutation& s : gens) {
        Permutation y = compose(x, s);
        if (seen.insert(y.images()).second) {
          if (seen.size() > cap) return 0;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

namespace {

bool independent_mask(const Graph& g, std::uint32_t mask) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (!(mask >> u & 1U)) continue;
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      if ((mask >> v & 1U) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t brute_independence_number(const Graph& g) {
  std::size_t best = 0;
  const std::uint32_t limit = std::uint32_t{1} << g.vertex_count();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > best && independent_mask(g, mask)) best = size;
  }
  return best;
}

std::vector<std::vector<std::size_t>> brute_maximum_independent_sets(const Graph& g) {
  const std::size_t alpha = brute_independence_number(g);
  std::vector<std::vector<std::size_t>> out;
  const std::uint32_t limit = std::uint32_t{1} << g.vertex_count();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != alpha || !independent_mask(g, mask)) continue;
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (mask >> v & 1U) s.push_back(v);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> brute_common_neighbourhood(const Graph& g, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (std::all_of(subset.begin(), subset.end(), [&](std::size_t s) { return g.adjacent(s, v); })) out.push_back(v);
  }
  return out;
}

std::size_t derangement_count(std::size_t m) {
  // D_0 = 1, D_1 = 0, D_m = (m-1)(D_{m-1} + D_{m-2})
  std::size_t a = 1, b = 0;
  if (m == 0) return 1;
  for (std::size_t i = 2; i <= m; ++i) {
    const std::size_t c = (i - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph_from_edges(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return graph_from_edges(a + b, e);
}

Graph petersen() {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return graph_from_edges(10, e);
}

Graph hypercube(std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 0; v < (std::size_t{1} << d); ++v) {
    for (std::size_t b = 0; b < d; ++b) {
      if (!(v >> b & 1U)) e.emplace_back(v, v | (std::size_t{1} << b));
    }
  }
  return graph_from_edges(std::size_t{1} << d, e);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return graph_from_edges(n, e);
}

}  // namespace

std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out;
  out.push_back({"K1", graph_from_edges(1, {})});
  out.push_back({"empty5", graph_from_edges(5, {})});
  out.push_back({"K4", graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
  for (std::size_t n : {5, 6, 7, 8}) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  out.push_back({"P6", path_graph(6)});
  out.push_back({"K3,3", complete_bipartite(3, 3)});
  out.push_back({"K2,5", complete_bipartite(2, 5)});
  out.push_back({"petersen", petersen()});
  out.push_back({"Q3", hypercube(3)});
  out.push_back({"Q4", hypercube(4)});
  out.push_back({"2C4", graph_from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}})});
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t n = 7 + 2 * static_cast<std::size_t>(seed % 4);
    out.push_back({"G(" + std::to_string(n) + ",0.4)#" + std::to_string(seed), random_graph(n, 0.4, seed)});
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t r = 1; r <= k; ++r) {
        std::ostringstream name;
        name << "A(" << n << "," << k << "," << r << ")";
        out.push_back({name.str(), build_arrangement_graph(n, k, r)});
      }
    }
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    for (std::size_t f = 0; f + 2 <= n; ++f) {
      const ConnectionSet s = ConnectionSet::make(n, ConnectionKind::fixed_points, f);
      out.push_back({"Cay(S" + std::to_string(n) + "," + s.describe() + ")", build_cayley_graph(s)});
    }
  }
  return out;
}

}  // namespace oracle

namespace properties {

using namespace arrsym;

Outcome composition_laws(std::size_t samples, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> degree(1, 12);
  for (std::size_t t = 0; t < samples; ++t) {
    const std::size_t d = degree(rng);
    const Permutation p = oracle::random_permutation(d, rng);
    const Permutation q = oracle::random_permutation(d, rng);
    const Permutation r = oracle::random_permutation(d, rng);
    const Permutation id = Permutation::identity(d);
    ++o.cases;
    if (compose(compose(p, q), r) != compose(p, compose(q, r))) o.fail("associativity at " + p.to_string());
    if (compose(p, inverse(p)) != id || compose(inverse(p), p) != id) o.fail("inverse law at " + p.to_string());
    if (compose(p, id) != p || compose(id, p) != p) o.fail("identity law at " + p.to_string());
    if (inverse(compose(p, q)) != compose(inverse(q), inverse(p))) o.fail("inverse of product at " + p.to_string());
    for (Point i = 0; i < d; ++i) {
      if (compose(p, q)(i) != q(p(i))) o.fail("left-to-right convention at " + p.to_string());
    }
    if (p.sign() * q.sign() != compose(p, q).sign()) o.fail("sign homomorphism at " + p.to_string());
  }
  return o;
}

Outcome tuple_maps_exhaustive(std::size_t n_max) {
  Outcome o;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::vector<Permutation> group = all_permutations(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const std::vector<Permutation> positions = all_permutations(k);
      const std::size_t count = arrangement_count(n, k);
      for (std::size_t i = 0; i < count; ++i) {
        const KTuple v = unrank(i, n, k);
        if (rank(v) != i) o.fail("rank/unrank at " + v.to_string());
        if (k == n && apply_h(apply_h(v)) != v) o.fail("inversion is not an involution at " + v.to_string());
        for (const Permutation& g : group) {
          for (const Permutation& h : positions) {
            ++o.cases;
            if (apply_P(g, apply_Q(h, v)) != apply_Q(h, apply_P(g, v))) {
              o.fail("P and Q do not commute at " + v.to_string());
            }
          }
          if (k == n && apply_h(apply_P(g, apply_h(v))) != apply_Q(g, v)) {
            o.fail("inversion does not conjugate P(g) to Q(g) at " + v.to_string());
          }
        }
      }
    }
  }
  return o;
}

Outcome neighbourhood_covariance(std::size_t subsets_per_generator, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  const std::vector<std::array<std::size_t, 3>> instances = {
      {3, 1, 1}, {3, 2, 2}, {3, 3, 3}, {3, 3, 2}, {4, 1, 1}, {4, 2, 2}, {4, 3, 3}, {4, 4, 4}, {4, 4, 2}, {5, 2, 2}, {5, 3, 3}};
  for (const auto& [n, k, r] : instances) {
    const Graph g = build_arrangement_graph(n, k, r);
    std::uniform_int_distribution<std::size_t> size(0, 4);
    std::uniform_int_distribution<std::size_t> vertex(0, g.vertex_count() - 1);
    for (const Permutation& sigma : candidate_aut_generators(n, k, r)) {
      for (std::size_t t = 0; t < subsets_per_generator; ++t) {
        std::vector<std::size_t> subset;
        for (std::size_t s = size(rng); s > 0; --s) subset.push_back(vertex(rng));
        std::vector<std::size_t> moved;
        for (std::size_t v : subset) moved.push_back(sigma(static_cast<Point>(v)));
        std::vector<std::size_t> expected;
        for (std::size_t v : oracle::brute_common_neighbourhood(g, subset)) expected.push_back(sigma(static_cast<Point>(v)));
        std::sort(expected.begin(), expected.end());
        ++o.cases;
        if (common_neighborhood(g, moved).indexes() != expected) {
          o.fail("N(sigma X) != sigma N(X) in A(" + std::to_string(n) + "," + std::to_string(k) + "," +
                 std::to_string(r) + ")");
        }
      }
    }
  }
  return o;
}

Outcome schreier_sims_vs_closure(std::size_t groups, std::size_t max_order, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> degree(3, 10);
  std::uniform_int_distribution<std::size_t> gen_count(1, 3);
  std::set<std::size_t> orders;
  std::size_t attempts = 0;
  while (o.cases < groups && attempts < 100000) {
    ++attempts;
    const std::size_t d = degree(rng);
    // Sparse generators: a random permutation restricted to a random support.
    std::vector<Permutation> gens;
    for (std::size_t c = gen_count(rng); c > 0; --c) {
      std::vector<Point> support(d);
      std::iota(support.begin(), support.end(), Point{0});
      std::shuffle(support.begin(), support.end(), rng);
      support.resize(std::uniform_int_distribution<std::size_t>(2, d)(rng));
      std::vector<Point> images(d);
      std::iota(images.begin(), images.end(), Point{0});
      std::vector<Point> shuffled = support;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (std::size_t i = 0; i < support.size(); ++i) images[support[i]] = shuffled[i];
      gens.emplace_back(std::move(images));
    }
    const std::size_t closure = oracle::closure_order(d, gens, max_order);
    if (closure == 0) continue;
    ++o.cases;
    orders.insert(closure);
    const StabilizerChain chain(d, gens);
    if (chain.order() != closure) {
      o.fail("order " + to_string(chain.order()) + " vs closure " + std::to_string(closure));
    }
    for (const Permutation& g : gens) {
      if (!chain.contains(g)) o.fail("generator not contained");
    }
    if (chain.elements(max_order).size() != closure) o.fail("element enumeration size mismatch");
  }
  if (o.cases < groups) o.fail("could not sample enough groups");
  if (orders.size() < 5) o.fail("sampled groups are not varied enough");
  return o;
}

Outcome independence_oracle(std::size_t max_vertices) {
  Outcome o;
  for (const oracle::NamedGraph& entry : oracle::corpus()) {
    if (entry.graph.vertex_count() > max_vertices) continue;
    ++o.cases;
    const std::size_t alpha = oracle::brute_independence_number(entry.graph);
    const MisResult size_only = max_independent_sets(entry.graph, MisMode::size_only);
    if (size_only.size != alpha || size_only.witness.size() != alpha || !is_independent(entry.graph, size_only.witness)) {
      o.fail(entry.name + ": independence number " + std::to_string(size_only.size) + " vs " + std::to_string(alpha));
    }
    const MisResult all = max_independent_sets(entry.graph, MisMode::enumerate_all);
    std::vector<std::vector<std::size_t>> sets = all.sets.value_or(std::vector<std::vector<std::size_t>>{});
    std::sort(sets.begin(), sets.end());
    if (sets != oracle::brute_maximum_independent_sets(entry.graph)) o.fail(entry.name + ": maximum set family differs");
  }
  return o;
}

Outcome certificate_invariance(std::size_t relabelings, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  for (const oracle::NamedGraph& entry : oracle::corpus()) {
    const AutResult base = automorphism_group(entry.graph);
    for (std::size_t t = 0; t < relabelings; ++t) {
      ++o.cases;
      const Graph shuffled = entry.graph.relabeled(oracle::random_permutation(entry.graph.vertex_count(), rng));
      const AutResult other = automorphism_group(shuffled);
      if (other.certificate != base.certificate) o.fail(entry.name + ": certificate changed under relabeling");
      if (other.order != base.order) o.fail(entry.name + ": order changed under relabeling");
    }
  }
  return o;
}

}  // namespace properties
