#include "arrsym/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arrsym/error.hpp"

namespace arrsym {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw ValidationError("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw ValidationError("permutation images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw ValidationError("permutation degree must be at least 1");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_one_based(std::span<const Point> images) {
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (Point p : images) {
    if (p == 0) throw ValidationError("1-based permutation contains 0");
    zero_based.push_back(p - 1);
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_one_based(std::initializer_list<Point> images) {
  return from_one_based(std::span<const Point>(images.begin(), images.size()));
}

Permutation Permutation::cycle(std::size_t degree, std::span<const Point> points) {
  Permutation p = identity(degree);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= degree) throw ValidationError("cycle point out of range");
    p.images_[points[i]] = points[(i + 1) % points.size()];
  }
  // Rejects repeated points.
  return Permutation(std::move(p.images_));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t even_cycles = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t length = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++length;
    }
    if (length % 2 == 0) ++even_cycles;
  }
  return even_cycles % 2 == 0 ? 1 : -1;
}

std::vector<Point> Permutation::one_based() const {
  std::vector<Point> out(images_);
  for (Point& p : out) ++p;
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i != 0) out << ',';
    out << images_[i] + 1;
  }
  out << ']';
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw ValidationError("compose: degree mismatch");
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q.images_[p.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(images), Permutation::Unchecked{});
}

std::size_t fixed_point_count(const Permutation& p) { return p.fixed_point_count(); }

std::vector<Permutation> symmetric_group_generators(std::size_t m) {
  if (m == 0) throw ValidationError("symmetric group degree must be at least 1");
  if (m == 1) return {};
  std::vector<Point> all(m);
  std::iota(all.begin(), all.end(), Point{0});
  const Point swap[] = {0, 1};
  return {Permutation::cycle(m, swap), Permutation::cycle(m, all)};
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<Point> images(m);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

ConnectionSet ConnectionSet::make(std::size_t n, ConnectionKind kind, std::size_t fixed) {
  if (n < 2) throw ValidationError("connection set needs n >= 2");
  ConnectionSet s;
  s.degree_ = n;
  s.kind_ = kind;
  switch (kind) {
    case ConnectionKind::transpositions:
      s.fixed_ = n - 2;
      break;
    case ConnectionKind::derangements:
      s.fixed_ = 0;
      break;
    case ConnectionKind::fixed_points:
      if (fixed > n - 2) {
        throw ValidationError("fixed-point count k must satisfy 0 <= k <= n-2 (got k=" + std::to_string(fixed) +
                              ", n=" + std::to_string(n) + ")");
      }
      s.fixed_ = fixed;
      break;
  }
  for (Permutation& p : all_permutations(n)) {
    const std::size_t f = p.fixed_point_count();
    // Transpositions are exactly the permutations with n-2 fixed points.
    if (f == s.fixed_) s.elements_.push_back(std::move(p));
  }
  return s;
}

bool ConnectionSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::string ConnectionSet::describe() const {
  switch (kind_) {
    case ConnectionKind::transpositions:
      return "transpositions";
    case ConnectionKind::derangements:
      return "derangements";
    case ConnectionKind::fixed_points:
      return "fixed:" + std::to_string(fixed_);
  }
  return "?";
}

}  // namespace arrsym
