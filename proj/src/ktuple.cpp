#include "arrsym/ktuple.hpp"

#include <sstream>

#include "arrsym/error.hpp"

namespace arrsym {
namespace {

// Number of arrangements of `take` items out of `from`.
std::uint64_t falling(std::size_t from, std::size_t take) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < take; ++i) {
    if (__builtin_mul_overflow(out, from - i, &out)) throw ValidationError("arrangement count overflows 64 bits");
  }
  return out;
}

}  // namespace

KTuple::KTuple(std::size_t n, std::vector<Point> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() > n_) throw ValidationError("k-tuple needs 1 <= k <= n");
  std::vector<bool> seen(n_, false);
  for (Point p : entries_) {
    if (p >= n_) throw ValidationError("k-tuple entry out of range");
    if (seen[p]) throw ValidationError("k-tuple entries are not distinct");
    seen[p] = true;
  }
}

KTuple KTuple::from_one_based(std::size_t n, std::span<const Point> entries) {
  std::vector<Point> zero;
  for (Point p : entries) {
    if (p == 0) throw ValidationError("k-tuple entry out of range");
    zero.push_back(p - 1);
  }
  return KTuple(n, std::move(zero));
}

KTuple KTuple::from_one_based(std::size_t n, std::initializer_list<Point> entries) {
  return from_one_based(n, std::span<const Point>(entries.begin(), entries.size()));
}

std::vector<Point> KTuple::one_based() const {
  std::vector<Point> out(entries_);
  for (Point& p : out) ++p;
  return out;
}

std::string KTuple::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << entries_[i] + 1;
  out << ']';
  return out.str();
}

std::uint64_t arrangement_count(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw ValidationError("arrangement count needs 1 <= k <= n");
  return falling(n, k);
}

std::size_t rank(const KTuple& t) {
  const std::size_t n = t.n();
  const std::size_t k = t.k();
  std::vector<bool> used(n, false);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t smaller_unused = 0;
    for (Point v = 0; v < t[i]; ++v) smaller_unused += !used[v];
    index += smaller_unused * falling(n - i - 1, k - i - 1);
    used[t[i]] = true;
  }
  return static_cast<std::size_t>(index);
}

KTuple unrank(std::size_t index, std::size_t n, std::size_t k) {
  if (index >= arrangement_count(n, k)) throw ValidationError("tuple index out of range");
  std::vector<bool> used(n, false);
  std::vector<Point> entries(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t block = falling(n - i - 1, k - i - 1);
    std::size_t skip = static_cast<std::size_t>(index / block);
    index %= block;
    for (Point v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (skip-- == 0) {
        entries[i] = v;
        used[v] = true;
        break;
      }
    }
  }
  return KTuple(n, std::move(entries));
}

std::size_t differing_coordinates(const KTuple& s, const KTuple& t) {
  if (s.n() != t.n() || s.k() != t.k()) throw ValidationError("differing_coordinates: ambient (n,k) mismatch");
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.k(); ++i) count += s[i] != t[i];
  return count;
}

Permutation psi(const KTuple& t) {
  if (t.k() != t.n()) throw ValidationError("psi needs k == n");
  return Permutation(t.entries());
}

KTuple psi_inverse(const Permutation& p) { return KTuple(p.degree(), p.images()); }

KTuple apply_P(const Permutation& g, const KTuple& v) {
  if (g.degree() != v.n()) throw ValidationError("apply_P: permutation degree must equal n");
  std::vector<Point> out(v.k());
  for (std::size_t i = 0; i < v.k(); ++i) out[i] = g(v[i]);
  return KTuple(v.n(), std::move(out));
}

KTuple apply_Q(const Permutation& h, const KTuple& v) {
  if (h.degree() != v.k()) throw ValidationError("apply_Q: permutation degree must equal k");
  // Entry at position i moves to position h(i).
  std::vector<Point> out(v.k());
  for (std::size_t i = 0; i < v.k(); ++i) out[h(static_cast<Point>(i))] = v[i];
  return KTuple(v.n(), std::move(out));
}

KTuple apply_h(const KTuple& v) {
  if (v.k() != v.n()) throw ValidationError("apply_h needs k == n");
  return psi_inverse(inverse(psi(v)));
}

}  // namespace arrsym
