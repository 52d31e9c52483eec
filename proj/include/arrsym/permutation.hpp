#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace arrsym {

using Point = std::uint32_t;

// A bijection on {0, ..., degree-1}. images()[i] is the image of i.
//
// Composition is left-to-right: compose(p, q) applies p first, so
// compose(p, q)(i) == q(p(i)). This matches the superscript action s^g used
// throughout the library (s^{pq} = (s^p)^q).
class Permutation {
 public:
  Permutation() = default;
  // Validates that images is a bijection; throws ValidationError otherwise.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // From 1-based one-line notation, e.g. {2, 3, 1}.
  static Permutation from_one_based(std::span<const Point> images);
  static Permutation from_one_based(std::initializer_list<Point> images);
  // The cycle (a_1 a_2 ... a_m) on `degree` points, 0-based entries.
  static Permutation cycle(std::size_t degree, std::span<const Point> points);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  std::size_t fixed_point_count() const;
  // +1 for even permutations, -1 for odd.
  int sign() const;

  // "[2,3,1]" in 1-based one-line notation.
  std::string to_string() const;
  std::vector<Point> one_based() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  std::vector<Point> images_;
};

// i -> q(p(i)). Throws ValidationError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
std::size_t fixed_point_count(const Permutation& p);

// The standard generating pair {(1 2), (1 2 ... m)} of S_m; empty for m = 1.
std::vector<Permutation> symmetric_group_generators(std::size_t m);

// All m! permutations of degree m in lexicographic order of one-line form.
std::vector<Permutation> all_permutations(std::size_t m);

enum class ConnectionKind { transpositions, derangements, fixed_points };

// A connection set S of S_n: closed under inversion, identity excluded.
class ConnectionSet {
 public:
  // kind == fixed_points uses `fixed`; the others ignore it.
  // Throws ValidationError when n < 2 or fixed is outside 0..n-2.
  static ConnectionSet make(std::size_t n, ConnectionKind kind, std::size_t fixed = 0);

  std::size_t degree() const { return degree_; }
  ConnectionKind kind() const { return kind_; }
  // Number of fixed points shared by every element (n-2 for transpositions, 0
  // for derangements).
  std::size_t fixed() const { return fixed_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Permutation& p) const;

  // "transpositions", "derangements" or "fixed:K".
  std::string describe() const;

 private:
  std::size_t degree_ = 0;
  ConnectionKind kind_ = ConnectionKind::transpositions;
  std::size_t fixed_ = 0;
  std::vector<Permutation> elements_;  // sorted
};

}  // namespace arrsym
