#include "arrsym/indsets.hpp"

#include <algorithm>
#include <numeric>

#include "arrsym/bit_kernels.hpp"
#include "arrsym/error.hpp"
#include "arrsym/families.hpp"
#include "arrsym/ktuple.hpp"

namespace arrsym {
namespace {

// Maximum-clique machinery over a renumbered copy of the complement graph.
// Vertices are renumbered by non-increasing degree so that the greedy
// colouring visits high-degree vertices first.
class CliqueEngine {
 public:
  explicit CliqueEngine(const Graph& g) : n_(g.vertex_count()), kernels_(kernels::active()) {
    std::vector<std::size_t> degree(n_);
    for (std::size_t v = 0; v < n_; ++v) degree[v] = n_ - 1 - g.degree(v);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    std::vector<std::size_t> slot(n_);
    for (std::size_t i = 0; i < n_; ++i) slot[order_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (u != v && !g.adjacent(u, v)) adj_[slot[u]].set(slot[v]);
      }
    }
  }

  std::size_t max_clique(VertexSet& witness) {
    best_ = 0;
    std::vector<std::size_t> current;
    expand(current, Bitset::full(n_));
    witness.clear();
    for (std::size_t v : best_clique_) witness.push_back(order_[v]);
    std::sort(witness.begin(), witness.end());
    return best_;
  }

  // Every maximal clique of exactly `target` vertices.
  std::vector<VertexSet> cliques_of_size(std::size_t target) {
    std::vector<VertexSet> out;
    std::vector<std::size_t> current;
    bron_kerbosch(current, Bitset::full(n_), Bitset(n_), target, out);
    for (VertexSet& s : out) {
      for (std::size_t& v : s) v = order_[v];
      std::sort(s.begin(), s.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Greedy sequential colouring of p; fills vertices in colour order with
  // the colour (1-based) of each.
  void colour(const Bitset& p, std::vector<std::size_t>& vertices, std::vector<std::size_t>& colours) const {
    vertices.clear();
    colours.clear();
    Bitset uncoloured = p;
    Bitset candidates(n_);
    std::size_t c = 0;
    while (!uncoloured.none()) {
      ++c;
      candidates = uncoloured;
      for (std::size_t v = candidates.first(); v < n_; v = candidates.first()) {
        uncoloured.reset(v);
        candidates.reset(v);
        candidates -= adj_[v];
        vertices.push_back(v);
        colours.push_back(c);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bitset p) {
    ++nodes_;
    std::vector<std::size_t> vertices, colours;
    colour(p, vertices, colours);
    for (std::size_t idx = vertices.size(); idx-- > 0;) {
      if (current.size() + colours[idx] <= best_) return;
      const std::size_t v = vertices[idx];
      current.push_back(v);
      Bitset next(n_);
      kernels_.and_into(next.data(), p.data(), adj_[v].data(), next.word_count());
      if (next.none()) {
        if (current.size() > best_) {
          best_ = current.size();
          best_clique_ = current;
        }
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      p.reset(v);
    }
  }

  void bron_kerbosch(std::vector<std::size_t>& r, Bitset p, Bitset x, std::size_t target, std::vector<VertexSet>& out) {
    ++nodes_;
    if (p.none()) {
      if (x.none() && r.size() == target) out.emplace_back(r.begin(), r.end());
      return;
    }
    if (r.size() + p.count() < target) return;
    // Tomita pivot: the vertex of P u X with the most neighbours in P.
    std::size_t pivot = n_;
    std::size_t pivot_score = 0;
    for (const Bitset* side : {&p, &x}) {
      for (std::size_t u = side->first(); u < n_; u = side->next(u)) {
        const std::size_t score = kernels_.and_popcount(p.data(), adj_[u].data(), p.word_count());
        if (pivot == n_ || score > pivot_score) {
          pivot = u;
          pivot_score = score;
        }
      }
    }
    Bitset branch = p;
    branch -= adj_[pivot];
    for (std::size_t v = branch.first(); v < n_; v = branch.next(v)) {
      if (r.size() + p.count() < target) return;
      r.push_back(v);
      Bitset np(n_), nx(n_);
      kernels_.and_into(np.data(), p.data(), adj_[v].data(), np.word_count());
      kernels_.and_into(nx.data(), x.data(), adj_[v].data(), nx.word_count());
      bron_kerbosch(r, std::move(np), std::move(nx), target, out);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  std::size_t n_;
  const kernels::BitKernels& kernels_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> adj_;
  std::size_t best_ = 0;
  std::vector<std::size_t> best_clique_;
  std::uint64_t nodes_ = 0;
};

std::size_t falling(std::size_t from, std::size_t take) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < take; ++i) out *= from - i;
  return out;
}

}  // namespace

VertexSet delta_set(std::size_t n, std::size_t k, std::size_t i, std::size_t j) {
  if (k < 1 || k > n) throw ValidationError("delta_set needs 1 <= k <= n");
  if (i < 1 || i > n || j < 1 || j > k) throw ValidationError("delta_set needs i in [n] and j in [k]");
  const std::size_t count = static_cast<std::size_t>(arrangement_count(n, k));
  VertexSet out;
  for (std::size_t v = 0; v < count; ++v) {
    if (unrank(v, n, k)[j - 1] == i - 1) out.push_back(v);
  }
  return out;
}

DeltaFamily delta_family(std::size_t n, std::size_t k, std::size_t vertex_guard) {
  if (k < 1 || k > n) throw ValidationError("delta_family needs 1 <= k <= n");
  const std::uint64_t count = arrangement_count(n, k);
  if (count > vertex_guard) throw BudgetExceeded("delta family exceeds the vertex guard");
  DeltaFamily f;
  f.n = n;
  f.k = k;
  f.sets.assign(n * k, {});
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= k; ++j) f.labels.push_back("D_" + std::to_string(i) + "_" + std::to_string(j));
  }
  for (std::size_t v = 0; v < count; ++v) {
    const KTuple t = unrank(v, n, k);
    for (std::size_t j = 0; j < k; ++j) f.sets[t[j] * k + j].push_back(v);
  }
  return f;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (g.adjacent(s[a], s[b])) return false;
    }
  }
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  Bitset covered(g.vertex_count());
  for (std::size_t v : s) {
    covered.set(v);
    covered |= g.neighbours(v);
  }
  return covered.count() == g.vertex_count();
}

MisResult max_independent_sets(const Graph& g, MisMode mode, const Config& config) {
  if (mode == MisMode::enumerate_all && g.vertex_count() > config.enumerate_all_guard) {
    throw BudgetExceeded("full enumeration of maximum independent sets is limited to " +
                         std::to_string(config.enumerate_all_guard) + " vertices (graph has " +
                         std::to_string(g.vertex_count()) + ")");
  }
  CliqueEngine engine(g);
  MisResult result;
  result.size = engine.max_clique(result.witness);
  if (mode == MisMode::enumerate_all) result.sets = engine.cliques_of_size(result.size);
  result.nodes = engine.nodes();
  return result;
}

MisCharacterizationReport verify_mis_characterization(std::size_t n, std::size_t k, const Config& config) {
  if (n <= 2) throw ValidationError("the characterization needs n > 2");
  if (k < 1 || k > n) throw ValidationError("the characterization needs 1 <= k <= n");
  const Graph g = build_arrangement_graph(n, k, k, config.vertex_guard);
  const DeltaFamily family = delta_family(n, k, config.vertex_guard);

  MisCharacterizationReport report;
  report.n = n;
  report.k = k;
  report.vertices = g.vertex_count();
  report.expected_size = falling(n - 1, k - 1);
  report.expected_count = n * k;
  report.enumerated = g.vertex_count() <= config.enumerate_all_guard;

  const MisResult mis =
      max_independent_sets(g, report.enumerated ? MisMode::enumerate_all : MisMode::size_only, config);
  report.independence_number = mis.size;
  if (report.enumerated) {
    report.set_count = mis.sets->size();
    std::vector<VertexSet> expected = family.sets;
    std::sort(expected.begin(), expected.end());
    report.family_matches = *mis.sets == expected;
    report.pass = report.independence_number == report.expected_size && *report.set_count == report.expected_count &&
                  report.family_matches;
  } else {
    report.family_matches = std::all_of(family.sets.begin(), family.sets.end(), [&](const VertexSet& s) {
      return s.size() == mis.size && is_maximal_independent(g, s);
    });
    std::vector<VertexSet> distinct = family.sets;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    report.pass = report.independence_number == report.expected_size && distinct.size() == report.expected_count &&
                  report.family_matches;
  }
  return report;
}

}  // namespace arrsym
