#pragma once

#include <cstddef>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "arrsym/config.hpp"

namespace arrsym {

// One verified (or merely recorded) statement about one parameter choice.
struct ClaimReport {
  std::string id;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  // Absent for exploratory records, which never fail.
  std::optional<std::string> expected;
  std::string basis;  // the formula the expectation was evaluated from
  std::string computed;
  bool exploratory = false;
  bool pass = false;
  // "ok", "failed", "inconclusive" (budget hit) or "error".
  std::string status = "ok";
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double wall_ms = 0.0;

  nlohmann::ordered_json to_json(bool include_timing = true) const;
};

// |Aut(A(n,k,r))| against n!k! (r = k < n) or 2(n!)^2 (k = n, r in {2, n}),
// plus containment and order of the group generated by the explicit P, Q
// and inversion maps. Throws ValidationError outside those cases or n <= 2.
ClaimReport verify_aut_order(std::size_t n, std::size_t k, std::size_t r, const Config& config = {});

// Maximum independent sets of A(n,k,k) equal the Delta family.
ClaimReport verify_mis_claim(std::size_t n, std::size_t k, const Config& config = {});

// Automorphisms of A(n,k,k) fixing every Delta_{ij} are trivial.
ClaimReport verify_kernel_trivial(std::size_t n, std::size_t k, const Config& config = {});

// k < n: rows and columns of the Delta grid are block systems, they are the
// minimal systems of the seeds (D_1_1, D_1_2) and (D_1_1, D_2_1), and the
// quotient on rows has order n! with kernel of order k!.
std::vector<ClaimReport> verify_block_claims(std::size_t n, std::size_t k, const Config& config = {});

// k = n: rows and columns are block systems of the P x Q action; records
// whether the tuple inversion breaks them (exploratory finding).
std::vector<ClaimReport> verify_inversion_blocks(std::size_t n, const Config& config = {});

// Cay(S_n,T) ~ A(n,n,2) and Cay(S_n,D) ~ A(n,n,n) by certificates on shuffled
// copies, and psi as an explicit witness.
ClaimReport verify_cayley_isomorphisms(std::size_t n, const Config& config = {}, std::uint64_t seed = 1);

// Cay(S_n,F_k) ~ A(n,n,n-k) by certificates on a shuffled copy.
ClaimReport verify_fixed_point_isomorphism(std::size_t n, std::size_t k, const Config& config = {},
                                           std::uint64_t seed = 1);

// Candidate group <R(S_n), Inn(S_n), inversion> against Aut(Cay(S_n,F_k)).
// Returns the asserted candidate record (order 2(n!)^2, contained in Aut)
// and the conjecture record, which is asserted only for k = 0 and k = n-2.
std::vector<ClaimReport> probe_conjecture(std::size_t n, std::size_t k, const Config& config = {});

struct SuiteOptions {
  std::size_t n_max = 5;
  // Adds A(6,1,1) and A(6,2,2) to the automorphism-order claims.
  bool include_n6 = false;
  std::uint64_t seed = 1;
};

struct SuiteReport {
  std::vector<ClaimReport> claims;  // ordered by id

  std::size_t expected_total() const;
  std::size_t expected_passed() const;
  bool all_expected_pass() const;

  nlohmann::ordered_json to_json(bool include_timing = true) const;
  std::string summary_table() const;
};

// Throws ValidationError unless 3 <= n_max <= 5.
SuiteReport run_full_suite(const SuiteOptions& options, const Config& config = {});

}  // namespace arrsym
