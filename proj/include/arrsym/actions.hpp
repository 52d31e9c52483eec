#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrsym/order.hpp"
#include "arrsym/permutation.hpp"
#include "arrsym/stabilizer_chain.hpp"

namespace arrsym {

using SetFamily = std::vector<std::vector<std::size_t>>;

// A group acting on a family of sets through the setwise images of its
// generators. movers[g](a) == b iff generator g maps domain[a] onto domain[b].
struct ActionOnSets {
  SetFamily domain;
  std::vector<std::string> labels;  // optional, one per domain member
  std::vector<Permutation> movers;

  std::size_t size() const { return domain.size(); }
  bool is_transitive() const;
};

// Throws ValidationError when a generator sends a member outside the family.
ActionOnSets induce_action(const std::vector<Permutation>& generators, const SetFamily& family,
                           std::vector<std::string> labels = {});

// Group elements that fix every family member setwise, by full enumeration.
// Throws BudgetExceeded above `threshold` elements.
std::vector<Permutation> action_kernel(const StabilizerChain& chain, const SetFamily& family,
                                       std::uint64_t threshold = 1'000'000);

// Blocks of family indexes, each sorted, blocks ordered by least member.
struct BlockSystem {
  std::vector<std::vector<std::size_t>> blocks;
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

// The finest block system with seed.first and seed.second in one block.
// Throws ValidationError when the action is intransitive.
BlockSystem minimal_block_system(const ActionOnSets& action, std::pair<std::size_t, std::size_t> seed);

// Throws ValidationError when `candidate` does not partition the domain.
bool verify_block_system(const ActionOnSets& action, const BlockSystem& candidate);

// When the system is not preserved: a mover and a block whose image meets
// some block without being equal to it.
struct BlockViolation {
  std::size_t mover;
  std::size_t block;
  std::size_t met_block;
};
std::optional<BlockViolation> find_block_violation(const ActionOnSets& action, const BlockSystem& candidate);

struct QuotientAction {
  ActionOnSets action;  // domain: the blocks, as sets of family indexes
  Order group_order = 1;     // of the action on the family
  Order quotient_order = 1;  // of the induced action on blocks
  Order kernel_order = 1;    // group_order / quotient_order
};

// Throws ValidationError unless `blocks` is a verified block system.
QuotientAction quotient_action(const ActionOnSets& action, const BlockSystem& blocks);

// Generators of <x -> xg, x -> g^{-1}xg, x -> x^{-1}> acting on the vertex
// indexes of Cay(S_n, .): right multiplication and conjugation by the
// generating pair of S_n, plus inversion. Throws ValidationError for n < 3.
std::vector<Permutation> conjecture_candidate_group(std::size_t n);

}  // namespace arrsym
