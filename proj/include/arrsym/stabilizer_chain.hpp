#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "arrsym/order.hpp"
#include "arrsym/permutation.hpp"

namespace arrsym {

// Base and strong generating set built by deterministic Schreier-Sims.
//
// Base points are chosen as the smallest point moved by the generators that
// fix all earlier base points, so the chain for a given generator list is
// reproducible. Transversal representatives are stored explicitly:
// transversal(l, b) maps base(l) to b.
class StabilizerChain {
 public:
  // An empty generator list gives the trivial group. Throws ValidationError
  // when generators disagree with `degree`.
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  std::vector<Point> base() const;

  Point base_point(std::size_t level) const { return levels_[level].base; }
  const std::vector<Permutation>& strong_generators(std::size_t level) const { return levels_[level].generators; }
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  // Representative u with u(base(level)) == b; b must lie in the orbit.
  const Permutation& transversal(std::size_t level, Point b) const;

  // Exact order: the product of the fundamental orbit sizes.
  Order order() const;

  struct SiftResult {
    Permutation residue;
    // Level at which sifting stopped; depth() when all levels were passed.
    std::size_t level;
  };
  SiftResult sift(const Permutation& g) const;
  bool contains(const Permutation& g) const;

  // Calls visit once per group element. Throws BudgetExceeded when the order
  // exceeds `threshold`.
  void for_each_element(const std::function<void(const Permutation&)>& visit,
                        std::uint64_t threshold = 1'000'000) const;
  std::vector<Permutation> elements(std::uint64_t threshold = 1'000'000) const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // index into transversal, -1 if outside the orbit
    std::vector<Permutation> transversal;
  };

  void rebuild_orbit(Level& level) const;
  void schreier_sims();

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace arrsym
