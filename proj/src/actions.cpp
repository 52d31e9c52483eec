#include "arrsym/actions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arrsym/bitset.hpp"
#include "arrsym/error.hpp"
#include "arrsym/ktuple.hpp"

namespace arrsym {
namespace {

std::vector<std::size_t> setwise_image(const Permutation& g, const std::vector<std::size_t>& set) {
  std::vector<std::size_t> image;
  image.reserve(set.size());
  for (std::size_t v : set) {
    if (v >= g.degree()) throw ValidationError("family member contains a point outside the permutation domain");
    image.push_back(g(static_cast<Point>(v)));
  }
  std::sort(image.begin(), image.end());
  return image;
}

// Index of each domain element's block; validates the partition.
std::vector<std::size_t> block_index(std::size_t domain_size, const BlockSystem& system) {
  std::vector<std::size_t> owner(domain_size, domain_size);
  for (std::size_t b = 0; b < system.blocks.size(); ++b) {
    if (system.blocks[b].empty()) throw ValidationError("block system contains an empty block");
    for (std::size_t x : system.blocks[b]) {
      if (x >= domain_size || owner[x] != domain_size) throw ValidationError("blocks do not partition the domain");
      owner[x] = b;
    }
  }
  if (std::find(owner.begin(), owner.end(), domain_size) != owner.end()) {
    throw ValidationError("blocks do not cover the domain");
  }
  return owner;
}

}  // namespace

bool ActionOnSets::is_transitive() const {
  if (domain.empty()) return true;
  std::vector<bool> seen(domain.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (const Permutation& m : movers) {
      const std::size_t b = m(static_cast<Point>(a));
      if (!seen[b]) {
        seen[b] = true;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached == domain.size();
}

ActionOnSets induce_action(const std::vector<Permutation>& generators, const SetFamily& family,
                           std::vector<std::string> labels) {
  if (family.empty()) throw ValidationError("cannot induce an action on an empty family");
  if (!labels.empty() && labels.size() != family.size()) throw ValidationError("label count differs from family size");
  std::map<std::vector<std::size_t>, std::size_t> index;
  SetFamily sorted;
  for (const auto& member : family) {
    std::vector<std::size_t> s(member);
    std::sort(s.begin(), s.end());
    if (!index.emplace(s, sorted.size()).second) throw ValidationError("family contains a repeated member");
    sorted.push_back(std::move(s));
  }
  ActionOnSets action;
  action.domain = sorted;
  action.labels = std::move(labels);
  for (const Permutation& g : generators) {
    std::vector<Point> images(sorted.size());
    for (std::size_t a = 0; a < sorted.size(); ++a) {
      auto it = index.find(setwise_image(g, sorted[a]));
      if (it == index.end()) {
        throw ValidationError("a generator maps family member " + std::to_string(a) + " outside the family");
      }
      images[a] = static_cast<Point>(it->second);
    }
    action.movers.emplace_back(std::move(images));
  }
  return action;
}

std::vector<Permutation> action_kernel(const StabilizerChain& chain, const SetFamily& family,
                                       std::uint64_t threshold) {
  std::vector<Bitset> members;
  for (const auto& s : family) {
    Bitset b(chain.degree());
    for (std::size_t v : s) {
      if (v >= chain.degree()) throw ValidationError("family member contains a point outside the group domain");
      b.set(v);
    }
    members.push_back(std::move(b));
  }
  std::vector<Permutation> kernel;
  chain.for_each_element(
      [&](const Permutation& g) {
        for (std::size_t m = 0; m < family.size(); ++m) {
          for (std::size_t v : family[m]) {
            if (!members[m].test(g(static_cast<Point>(v)))) return;
          }
        }
        kernel.push_back(g);
      },
      threshold);
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

BlockSystem minimal_block_system(const ActionOnSets& action, std::pair<std::size_t, std::size_t> seed) {
  const std::size_t m = action.size();
  if (seed.first >= m || seed.second >= m) throw ValidationError("seed index outside the family");
  if (seed.first == seed.second) throw ValidationError("seed must name two distinct family members");
  if (!action.is_transitive()) throw ValidationError("minimal block systems need a transitive action");

  // Atkinson's closure: merge the seed, then merge images of merged pairs.
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  auto merge = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    pending.emplace_back(a, b);
  };
  merge(seed.first, seed.second);
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (const Permutation& g : action.movers) merge(g(static_cast<Point>(a)), g(static_cast<Point>(b)));
  }
  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t x = 0; x < m; ++x) grouped[find(x)].push_back(x);
  BlockSystem out;
  for (auto& [root, block] : grouped) out.blocks.push_back(std::move(block));
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

std::optional<BlockViolation> find_block_violation(const ActionOnSets& action, const BlockSystem& candidate) {
  const std::vector<std::size_t> owner = block_index(action.size(), candidate);
  for (std::size_t g = 0; g < action.movers.size(); ++g) {
    for (std::size_t b = 0; b < candidate.blocks.size(); ++b) {
      const auto& block = candidate.blocks[b];
      const std::size_t target = owner[action.movers[g](static_cast<Point>(block.front()))];
      for (std::size_t x : block) {
        const std::size_t landed = owner[action.movers[g](static_cast<Point>(x))];
        if (landed != target) return BlockViolation{g, b, landed};
      }
      if (candidate.blocks[target].size() != block.size()) return BlockViolation{g, b, target};
    }
  }
  return std::nullopt;
}

bool verify_block_system(const ActionOnSets& action, const BlockSystem& candidate) {
  return !find_block_violation(action, candidate).has_value();
}

QuotientAction quotient_action(const ActionOnSets& action, const BlockSystem& blocks) {
  if (!verify_block_system(action, blocks)) throw ValidationError("quotient needs a verified block system");
  const std::vector<std::size_t> owner = block_index(action.size(), blocks);
  QuotientAction out;
  out.action.domain = blocks.blocks;
  for (const auto& block : blocks.blocks) {
    std::string label;
    for (std::size_t x : block) {
      label += (label.empty() ? "{" : ",");
      label += action.labels.empty() ? std::to_string(x) : action.labels[x];
    }
    out.action.labels.push_back(label + "}");
  }
  for (const Permutation& g : action.movers) {
    std::vector<Point> images(blocks.blocks.size());
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
      images[b] = static_cast<Point>(owner[g(static_cast<Point>(blocks.blocks[b].front()))]);
    }
    out.action.movers.emplace_back(std::move(images));
  }
  out.group_order = StabilizerChain(action.size(), action.movers).order();
  out.quotient_order = StabilizerChain(blocks.blocks.size(), out.action.movers).order();
  if (out.group_order % out.quotient_order != 0) throw InternalError("quotient order does not divide group order");
  out.kernel_order = out.group_order / out.quotient_order;
  return out;
}

std::vector<Permutation> conjecture_candidate_group(std::size_t n) {
  if (n < 3) throw ValidationError("the candidate group is defined for n >= 3");
  const std::size_t count = static_cast<std::size_t>(arrangement_count(n, n));
  std::vector<Permutation> elements;
  elements.reserve(count);
  for (std::size_t i = 0; i < count; ++i) elements.push_back(psi(unrank(i, n, n)));
  auto vertex_map = [&](auto&& f) {
    std::vector<Point> images(count);
    for (std::size_t i = 0; i < count; ++i) images[i] = static_cast<Point>(rank(psi_inverse(f(elements[i]))));
    return Permutation(std::move(images));
  };
  std::vector<Permutation> out;
  for (const Permutation& g : symmetric_group_generators(n)) {
    out.push_back(vertex_map([&](const Permutation& x) { return compose(x, g); }));
  }
  for (const Permutation& g : symmetric_group_generators(n)) {
    const Permutation g_inv = inverse(g);
    out.push_back(vertex_map([&](const Permutation& x) { return compose(compose(g_inv, x), g); }));
  }
  out.push_back(vertex_map([](const Permutation& x) { return inverse(x); }));
  return out;
}

}  // namespace arrsym
