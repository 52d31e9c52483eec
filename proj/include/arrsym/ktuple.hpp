#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arrsym/permutation.hpp"

namespace arrsym {

// An ordered k-tuple of distinct values from {0, ..., n-1}.
class KTuple {
 public:
  KTuple() = default;
  // Throws ValidationError unless 1 <= k <= n and entries are distinct and in range.
  KTuple(std::size_t n, std::vector<Point> entries);
  static KTuple from_one_based(std::size_t n, std::span<const Point> entries);
  static KTuple from_one_based(std::size_t n, std::initializer_list<Point> entries);

  std::size_t n() const { return n_; }
  std::size_t k() const { return entries_.size(); }
  Point operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Point>& entries() const { return entries_; }

  std::vector<Point> one_based() const;
  std::string to_string() const;

  friend bool operator==(const KTuple&, const KTuple&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Point> entries_;
};

// n! / (n-k)!; throws ValidationError unless 1 <= k <= n.
std::uint64_t arrangement_count(std::size_t n, std::size_t k);

// Lexicographic rank of t among all k-tuples of [n].
std::size_t rank(const KTuple& t);
KTuple unrank(std::size_t index, std::size_t n, std::size_t k);

// Positions where s and t differ. Throws on mismatched (n, k).
std::size_t differing_coordinates(const KTuple& s, const KTuple& t);

// psi: the n-tuple [s_1..s_n] as the permutation i -> s_i, and back.
Permutation psi(const KTuple& t);
KTuple psi_inverse(const Permutation& p);

// Entry i of the result is g(entry i of v).
KTuple apply_P(const Permutation& g, const KTuple& v);
// Entry j of the result is entry h^{-1}(j) of v.
KTuple apply_Q(const Permutation& h, const KTuple& v);
// For k == n: the one-line form of the inverse permutation (x_j = i iff s_i = j).
KTuple apply_h(const KTuple& v);

}  // namespace arrsym
