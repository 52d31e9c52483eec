#include "arrsym/stabilizer_chain.hpp"

#include <algorithm>

#include "arrsym/error.hpp"

namespace arrsym {
namespace {

// Smallest point moved by g; g must not be the identity.
Point first_moved(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g(static_cast<Point>(i)) != i) return static_cast<Point>(i);
  }
  throw InternalError("first_moved called on the identity");
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  if (degree == 0) throw ValidationError("stabilizer chain degree must be at least 1");
  std::vector<Permutation> gens;
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw ValidationError("generator degree does not match chain degree");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  if (gens.empty()) return;

  // Initial base: every generator moves some base point.
  std::vector<Permutation> pending = gens;
  while (!pending.empty()) {
    Level level;
    level.base = first_moved(pending.front());
    for (const Permutation& g : pending) level.base = std::min(level.base, first_moved(g));
    level.generators = pending;
    levels_.push_back(std::move(level));
    std::vector<Permutation> rest;
    for (const Permutation& g : pending) {
      if (g(levels_.back().base) == levels_.back().base) rest.push_back(g);
    }
    pending = std::move(rest);
  }
  for (Level& level : levels_) {
    level.slot.assign(degree_, -1);
    rebuild_orbit(level);
  }
  schreier_sims();
}

// Extends the orbit with the current generators; existing representatives
// are never replaced, so Schreier generators checked earlier stay valid.
void StabilizerChain::rebuild_orbit(Level& level) const {
  if (level.orbit.empty()) {
    level.orbit.push_back(level.base);
    level.slot[level.base] = 0;
    level.transversal.push_back(Permutation::identity(degree_));
  }
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    const Point b = level.orbit[idx];
    for (const Permutation& s : level.generators) {
      const Point c = s(b);
      if (level.slot[c] >= 0) continue;
      level.slot[c] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(c);
      level.transversal.push_back(compose(level.transversal[idx], s));
    }
  }
}

void StabilizerChain::schreier_sims() {
  // checked[l][idx]: number of generators of level l already verified for
  // orbit point idx.
  std::vector<std::vector<std::size_t>> checked(levels_.size());
  std::vector<std::vector<Permutation>> inverse_transversal(levels_.size());
  auto sync = [&](std::size_t l) {
    checked[l].resize(levels_[l].orbit.size(), 0);
    auto& inv = inverse_transversal[l];
    for (std::size_t idx = inv.size(); idx < levels_[l].transversal.size(); ++idx) {
      inv.push_back(inverse(levels_[l].transversal[idx]));
    }
  };
  for (std::size_t l = 0; l < levels_.size(); ++l) sync(l);

  auto sift_from = [&](Permutation h, std::size_t start) -> std::pair<Permutation, std::size_t> {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      const Point b = h(levels_[l].base);
      const std::int32_t slot = levels_[l].slot[b];
      if (slot < 0) return {std::move(h), l};
      h = compose(h, inverse_transversal[l][static_cast<std::size_t>(slot)]);
    }
    return {std::move(h), levels_.size()};
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const std::size_t li = static_cast<std::size_t>(i);
    bool extended = false;
    for (std::size_t idx = 0; idx < levels_[li].orbit.size() && !extended; ++idx) {
      while (checked[li][idx] < levels_[li].generators.size()) {
        const Permutation& s = levels_[li].generators[checked[li][idx]];
        const Point b = levels_[li].orbit[idx];
        const std::size_t target = static_cast<std::size_t>(levels_[li].slot[s(b)]);
        Permutation h = compose(compose(levels_[li].transversal[idx], s), inverse_transversal[li][target]);
        auto [residue, stop] = sift_from(std::move(h), li + 1);
        if (residue.is_identity()) {
          ++checked[li][idx];
          continue;
        }
        if (stop == levels_.size()) {
          Level fresh;
          fresh.base = first_moved(residue);
          fresh.slot.assign(degree_, -1);
          levels_.push_back(std::move(fresh));
          checked.emplace_back();
          inverse_transversal.emplace_back();
        }
        for (std::size_t l = li + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
          sync(l);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const Level& level : levels_) out.push_back(level.base);
  return out;
}

const Permutation& StabilizerChain::transversal(std::size_t level, Point b) const {
  const std::int32_t slot = levels_.at(level).slot.at(b);
  if (slot < 0) throw ValidationError("point is not in the fundamental orbit");
  return levels_[level].transversal[static_cast<std::size_t>(slot)];
}

Order StabilizerChain::order() const {
  Order total = 1;
  for (const Level& level : levels_) total = checked_mul(total, level.orbit.size());
  return total;
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw ValidationError("sift: degree mismatch");
  Permutation h = g;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const Point b = h(levels_[l].base);
    const std::int32_t slot = levels_[l].slot[b];
    if (slot < 0) return {std::move(h), l};
    h = compose(h, inverse(levels_[l].transversal[static_cast<std::size_t>(slot)]));
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  SiftResult r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

void StabilizerChain::for_each_element(const std::function<void(const Permutation&)>& visit,
                                       std::uint64_t threshold) const {
  const Order total = order();
  if (total > threshold) {
    throw BudgetExceeded("group of order " + to_string(total) + " exceeds the enumeration threshold of " +
                         std::to_string(threshold));
  }
  // Every element is u_{d-1} * ... * u_1 * u_0 (left-to-right), one
  // transversal representative per level, deepest level applied first.
  std::vector<Permutation> partial(levels_.size() + 1);
  partial[levels_.size()] = Permutation::identity(degree_);
  auto recurse = [&](auto&& self, std::size_t level) -> void {
    if (level == 0) {
      visit(partial[0]);
      return;
    }
    const Level& lv = levels_[level - 1];
    for (const Permutation& u : lv.transversal) {
      partial[level - 1] = compose(partial[level], u);
      self(self, level - 1);
    }
  };
  recurse(recurse, levels_.size());
}

std::vector<Permutation> StabilizerChain::elements(std::uint64_t threshold) const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) { out.push_back(g); }, threshold);
  return out;
}

}  // namespace arrsym
