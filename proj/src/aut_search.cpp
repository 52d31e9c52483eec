#include "arrsym/aut_search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "arrsym/bit_kernels.hpp"
#include "arrsym/error.hpp"
#include "arrsym/families.hpp"
#include "arrsym/stabilizer_chain.hpp"

namespace arrsym {
namespace {

using kernels::Word;
using Index = std::uint32_t;

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

// Cells are contiguous position ranges of `elems`. start_of[p] is the first
// position of the cell holding position p; end_of[s] is one past the end of
// the cell starting at s.
struct WorkPartition {
  std::vector<Index> elems;
  std::vector<Index> pos;
  std::vector<Index> start_of;
  std::vector<Index> end_of;
  Index cells = 0;

  std::size_t size() const { return elems.size(); }
  bool discrete() const { return cells == elems.size(); }
};

WorkPartition make_partition(std::size_t n, const std::vector<std::vector<std::size_t>>& cells) {
  WorkPartition p;
  p.elems.reserve(n);
  p.pos.assign(n, 0);
  p.start_of.assign(n, 0);
  p.end_of.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (const auto& cell : cells) {
    if (cell.empty()) throw ValidationError("partition contains an empty cell");
    const Index start = static_cast<Index>(p.elems.size());
    for (std::size_t v : cell) {
      if (v >= n || seen[v]) throw ValidationError("cells do not partition the vertex set");
      seen[v] = true;
      p.pos[v] = static_cast<Index>(p.elems.size());
      p.start_of[p.elems.size()] = start;
      p.elems.push_back(static_cast<Index>(v));
    }
    p.end_of[start] = static_cast<Index>(p.elems.size());
    ++p.cells;
  }
  if (p.elems.size() != n) throw ValidationError("cells do not cover the vertex set");
  return p;
}

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), n_(g.vertex_count()), kernels_(kernels::active()), splitter_(n_), counts_(n_, 0), queued_(n_, 0) {}

  // Refines p to the coarsest equitable partition finer than p, using the
  // given cells as the initial splitters. Returns a label-free trace hash.
  std::uint64_t refine(WorkPartition& p, const std::vector<Index>& initial) {
    std::uint64_t trace = 0x5bd1e995ULL;
    std::deque<Index> queue;
    for (Index s : initial) {
      queue.push_back(s);
      queued_[s] = 1;
    }
    while (!queue.empty() && !p.discrete()) {
      const Index w = queue.front();
      queue.pop_front();
      queued_[w] = 0;
      splitter_.clear();
      for (Index i = w; i < p.end_of[w]; ++i) splitter_.set(p.elems[i]);
      trace = mix(trace, w);

      for (Index c = 0; c < n_;) {
        const Index end = p.end_of[c];
        if (end - c > 1) split_cell(p, c, end, queue, trace);
        c = end;
      }
    }
    while (!queue.empty()) {
      queued_[queue.front()] = 0;
      queue.pop_front();
    }
    return mix(trace, p.cells);
  }

  void individualize(WorkPartition& p, Index v) const {
    const Index start = p.start_of[p.pos[v]];
    const Index end = p.end_of[start];
    const Index at = p.pos[v];
    const Index other = p.elems[start];
    std::swap(p.elems[start], p.elems[at]);
    p.pos[v] = start;
    p.pos[other] = at;
    p.end_of[start] = start + 1;
    p.end_of[start + 1] = end;
    for (Index i = start + 1; i < end; ++i) p.start_of[i] = start + 1;
    ++p.cells;
  }

 private:
  void split_cell(WorkPartition& p, Index c, Index end, std::deque<Index>& queue, std::uint64_t& trace) {
    const std::size_t words = splitter_.word_count();
    bool uniform = true;
    for (Index i = c; i < end; ++i) {
      const Index v = p.elems[i];
      counts_[v] = static_cast<Index>(kernels_.and_popcount(g_.neighbours(v).data(), splitter_.data(), words));
      if (counts_[v] != counts_[p.elems[c]]) uniform = false;
    }
    if (uniform) return;

    std::sort(p.elems.begin() + c, p.elems.begin() + end, [&](Index a, Index b) {
      return counts_[a] != counts_[b] ? counts_[a] < counts_[b] : a < b;
    });
    const bool was_queued = queued_[c] != 0;
    Index largest_start = c;
    Index largest_size = 0;
    std::vector<Index> fragments;
    trace = mix(trace, c);
    for (Index i = c; i < end;) {
      Index j = i;
      const Index value = counts_[p.elems[i]];
      while (j < end && counts_[p.elems[j]] == value) ++j;
      for (Index t = i; t < j; ++t) {
        p.pos[p.elems[t]] = t;
        p.start_of[t] = i;
      }
      p.end_of[i] = j;
      fragments.push_back(i);
      trace = mix(mix(trace, value), j - i);
      if (j - i > largest_size) {
        largest_size = j - i;
        largest_start = i;
      }
      i = j;
    }
    p.cells += static_cast<Index>(fragments.size() - 1);
    for (Index f : fragments) {
      if (f == c && was_queued) continue;
      if (!was_queued && f == largest_start) continue;
      queue.push_back(f);
      queued_[f] = 1;
    }
  }

  const Graph& g_;
  Index n_;
  const kernels::BitKernels& kernels_;
  Bitset splitter_;
  std::vector<Index> counts_;
  std::vector<char> queued_;
};

std::vector<Index> all_cell_starts(const WorkPartition& p) {
  std::vector<Index> out;
  for (Index c = 0; c < p.size(); c = p.end_of[c]) out.push_back(c);
  return out;
}

int compare_traces(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

class Searcher {
 public:
  Searcher(const Graph& g, const SearchOptions& options)
      : g_(g), n_(g.vertex_count()), words_((n_ + 63) / 64), options_(options), refiner_(g) {}

  void run() {
    WorkPartition root = make_partition(n_, OrderedPartition::unit(n_).cells);
    trace_.push_back(refiner_.refine(root, all_cell_starts(root)));
    explore(root, 0);
  }

  std::vector<Permutation> generators() const { return generators_; }
  std::uint64_t nodes() const { return nodes_; }

  Permutation canonical_labeling() const {
    std::vector<Point> images(n_);
    for (std::size_t p = 0; p < n_; ++p) images[best_->elems[p]] = static_cast<Point>(p);
    return Permutation(std::move(images));
  }

  std::vector<std::uint8_t> certificate() const {
    std::vector<std::uint8_t> out;
    const std::uint32_t count = static_cast<std::uint32_t>(n_);
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(count >> (8 * i)));
    const std::size_t bits = n_ * n_;
    out.resize(4 + (bits + 7) / 8, 0);
    for (std::size_t row = 0; row < n_; ++row) {
      const Word* r = best_->canon.data() + row * words_;
      for (std::size_t col = 0; col < n_; ++col) {
        if ((r[col >> 6] >> (col & 63)) & 1U) {
          const std::size_t bit = row * n_ + col;
          out[4 + bit / 8] |= static_cast<std::uint8_t>(1U << (bit % 8));
        }
      }
    }
    return out;
  }

 private:
  struct Leaf {
    std::vector<Index> elems;
    std::vector<Word> canon;
    std::vector<std::uint64_t> trace;
    std::vector<Index> seq;
  };

  using Level = std::ptrdiff_t;

  Level explore(WorkPartition& p, Level depth) {
    if (++nodes_ > options_.node_budget) {
      throw BudgetExceeded("automorphism search exceeded the node budget of " +
                           std::to_string(options_.node_budget));
    }
    if (p.discrete()) return leaf(p, depth);

    Index target = 0;
    Index target_size = std::numeric_limits<Index>::max();
    for (Index c = 0; c < n_; c = p.end_of[c]) {
      const Index size = p.end_of[c] - c;
      if (size > 1 && size < target_size) {
        target = c;
        target_size = size;
      }
    }
    std::vector<Index> candidates(p.elems.begin() + target, p.elems.begin() + p.end_of[target]);
    std::sort(candidates.begin(), candidates.end());

    std::vector<Index> explored;
    std::vector<Index> orbit;
    std::size_t orbit_gens = static_cast<std::size_t>(-1);
    for (Index w : candidates) {
      if (!explored.empty()) {
        if (orbit_gens != generators_.size()) {
          orbit = stabilizer_orbits(static_cast<std::size_t>(depth));
          orbit_gens = generators_.size();
        }
        const bool equivalent =
            std::any_of(explored.begin(), explored.end(), [&](Index e) { return orbit[e] == orbit[w]; });
        if (equivalent) continue;
      }
      explored.push_back(w);

      WorkPartition child = p;
      refiner_.individualize(child, w);
      seq_.push_back(w);
      trace_.push_back(refiner_.refine(child, {target}));
      Level back = depth;
      if (!prune_by_trace()) back = explore(child, depth + 1);
      trace_.pop_back();
      seq_.pop_back();
      if (back < depth) return back;
    }
    return depth - 1;
  }

  // Prunes when the path can reach neither a leaf equivalent to the first
  // leaf nor one at least as good as the best leaf.
  bool prune_by_trace() const {
    if (!first_) return false;
    const bool matches_first = first_->trace.size() >= trace_.size() &&
                               std::equal(trace_.begin(), trace_.end(), first_->trace.begin());
    if (matches_first) return false;
    const std::vector<std::uint64_t>& best = best_->trace;
    for (std::size_t i = 0; i < trace_.size(); ++i) {
      if (i >= best.size()) return true;
      if (trace_[i] != best[i]) return trace_[i] > best[i];
    }
    return false;
  }

  Level leaf(const WorkPartition& p, Level depth) {
    Leaf current;
    current.elems = p.elems;
    current.canon.assign(n_ * words_, 0);
    for (std::size_t row = 0; row < n_; ++row) {
      const Bitset& nb = g_.neighbours(p.elems[row]);
      Word* r = current.canon.data() + row * words_;
      for (std::size_t u = nb.first(); u < n_; u = nb.next(u)) {
        const Index col = p.pos[u];
        r[col >> 6] |= Word{1} << (col & 63);
      }
    }
    current.trace = trace_;
    current.seq = seq_;

    if (!first_) {
      first_ = current;
      best_ = std::move(current);
      return depth - 1;
    }
    if (current.trace == first_->trace && current.canon == first_->canon) {
      record_automorphism(*first_, current);
      return common_prefix(current.seq, first_->seq);
    }
    int cmp = compare_traces(current.trace, best_->trace);
    if (cmp == 0) {
      const auto diff = std::mismatch(current.canon.begin(), current.canon.end(), best_->canon.begin());
      cmp = diff.first == current.canon.end() ? 0 : (*diff.first < *diff.second ? -1 : 1);
    }
    if (cmp == 0) {
      record_automorphism(*best_, current);
      return common_prefix(current.seq, best_->seq);
    }
    if (cmp < 0) best_ = std::move(current);
    return depth - 1;
  }

  static Level common_prefix(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<Level>(i);
  }

  // The map sending each vertex of `from` to the vertex at the same position of `to`.
  void record_automorphism(const Leaf& from, const Leaf& to) {
    std::vector<Point> images(n_);
    for (std::size_t i = 0; i < n_; ++i) images[from.elems[i]] = to.elems[i];
    Permutation gamma(std::move(images));
    if (gamma.is_identity()) return;
    if (std::find(generators_.begin(), generators_.end(), gamma) != generators_.end()) return;
    if (!is_automorphism(g_, gamma)) throw InternalError("search produced a map that is not an automorphism");
    generators_.push_back(std::move(gamma));
  }

  // Orbit representatives under the generators that fix the first `depth`
  // individualized vertices pointwise.
  std::vector<Index> stabilizer_orbits(std::size_t depth) const {
    std::vector<Index> parent(n_);
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation& gamma : generators_) {
      bool fixes = true;
      for (std::size_t i = 0; i < depth && fixes; ++i) fixes = gamma(seq_[i]) == seq_[i];
      if (!fixes) continue;
      for (Index v = 0; v < n_; ++v) {
        const Index a = find(v);
        const Index b = find(gamma(v));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Index v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  const Graph& g_;
  Index n_;
  std::size_t words_;
  SearchOptions options_;
  Refiner refiner_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> trace_;
  std::vector<Index> seq_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<Permutation> generators_;
};

}  // namespace

OrderedPartition OrderedPartition::unit(std::size_t vertex_count) {
  OrderedPartition p;
  p.cells.emplace_back(vertex_count);
  std::iota(p.cells.front().begin(), p.cells.front().end(), std::size_t{0});
  return p;
}

bool OrderedPartition::is_discrete() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

OrderedPartition equitable_refinement(const Graph& g, const OrderedPartition& p) {
  WorkPartition work = make_partition(g.vertex_count(), p.cells);
  Refiner refiner(g);
  refiner.refine(work, all_cell_starts(work));
  OrderedPartition out;
  for (Index c = 0; c < work.size(); c = work.end_of[c]) {
    std::vector<std::size_t> cell(work.elems.begin() + c, work.elems.begin() + work.end_of[c]);
    std::sort(cell.begin(), cell.end());
    out.cells.push_back(std::move(cell));
  }
  return out;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

std::string AutResult::certificate_hex() const { return to_hex(certificate); }

AutResult automorphism_group(const Graph& g, const SearchOptions& options) {
  Searcher search(g, options);
  search.run();
  AutResult result;
  result.generators = search.generators();
  result.order = StabilizerChain(g.vertex_count(), result.generators).order();
  result.certificate = search.certificate();
  result.canonical_labeling = search.canonical_labeling();
  result.nodes = search.nodes();
  return result;
}

std::vector<std::uint8_t> canonical_certificate(const Graph& g, const SearchOptions& options) {
  return automorphism_group(g, options).certificate;
}

IsomorphismResult are_isomorphic(const Graph& a, const Graph& b, const SearchOptions& options) {
  IsomorphismResult out;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return out;
  const AutResult ra = automorphism_group(a, options);
  const AutResult rb = automorphism_group(b, options);
  if (ra.certificate != rb.certificate) return out;
  // witness = canon_b^{-1} after canon_a
  Permutation witness = compose(ra.canonical_labeling, inverse(rb.canonical_labeling));
  for (auto [u, v] : a.edges()) {
    if (!b.adjacent(witness(static_cast<Point>(u)), witness(static_cast<Point>(v)))) {
      throw InternalError("isomorphism witness does not preserve edges");
    }
  }
  out.isomorphic = true;
  out.witness = std::move(witness);
  return out;
}

Bitset common_neighborhood(const Graph& g, const std::vector<std::size_t>& subset) {
  Bitset out = Bitset::full(g.vertex_count());
  for (std::size_t v : subset) {
    if (v >= g.vertex_count()) throw ValidationError("common_neighborhood: vertex out of range");
    out &= g.neighbours(v);
  }
  return out;
}

}  // namespace arrsym
