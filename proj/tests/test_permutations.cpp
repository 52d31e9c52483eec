#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "arrsym/error.hpp"
#include "arrsym/families.hpp"
#include "arrsym/permutation.hpp"
#include "arrsym/stabilizer_chain.hpp"
#include "support.hpp"

using namespace arrsym;

namespace {

Permutation P1(std::initializer_list<Point> images) { return Permutation::from_one_based(images); }

}  // namespace

TEST_CASE("compose applies the left argument first") {
  CHECK(compose(P1({2, 1, 3}), P1({1, 3, 2})) == P1({3, 1, 2}));
  const Permutation p = P1({3, 1, 4, 2});
  CHECK(compose(p, Permutation::identity(4)) == p);
  CHECK(compose(p, inverse(p)).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation::identity(3)), ValidationError);
}

TEST_CASE("inverse") {
  CHECK(inverse(P1({2, 3, 1})) == P1({3, 1, 2}));
  CHECK(inverse(Permutation::identity(5)).is_identity());
  const Permutation t = P1({1, 4, 3, 2});
  CHECK(inverse(t) == t);
}

TEST_CASE("fixed point count and sign") {
  CHECK(fixed_point_count(Permutation::identity(4)) == 4);
  CHECK(fixed_point_count(P1({2, 1, 3, 4})) == 2);
  CHECK(fixed_point_count(P1({2, 3, 1, 4})) == 1);
  CHECK(P1({2, 1, 3, 4}).sign() == -1);
  CHECK(P1({2, 3, 1, 4}).sign() == 1);
}

TEST_CASE("permutation construction is validated") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), ValidationError);
  CHECK_THROWS_AS(Permutation::from_one_based({0, 1}), ValidationError);
  CHECK(P1({2, 3, 1}).to_string() == "[2,3,1]");
  const Point pts[] = {0, 1, 2};
  CHECK(Permutation::cycle(4, pts) == P1({2, 3, 1, 4}));
}

TEST_CASE("symmetric group generators and enumeration") {
  CHECK(symmetric_group_generators(1).empty());
  CHECK(symmetric_group_generators(4).size() == 2);
  for (std::size_t m = 1; m <= 5; ++m) {
    CHECK(StabilizerChain(m, symmetric_group_generators(m)).order() == factorial(static_cast<unsigned>(m)));
    const auto all = all_permutations(m);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<Permutation>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("connection sets") {
  CHECK(ConnectionSet::make(4, ConnectionKind::transpositions).size() == 6);
  // Brute-force filters of S_4.
  std::size_t deranged = 0, one_fixed = 0;
  for (const Permutation& p : all_permutations(4)) {
    deranged += p.fixed_point_count() == 0;
    one_fixed += p.fixed_point_count() == 1;
  }
  CHECK(ConnectionSet::make(4, ConnectionKind::derangements).size() == deranged);
  CHECK(ConnectionSet::make(4, ConnectionKind::fixed_points, 1).size() == one_fixed);
  CHECK(ConnectionSet::make(4, ConnectionKind::fixed_points, 1).describe() == "fixed:1");
  CHECK_THROWS_AS(ConnectionSet::make(4, ConnectionKind::fixed_points, 3), ValidationError);
  CHECK_THROWS_AS(ConnectionSet::make(1, ConnectionKind::derangements), ValidationError);
}

TEST_CASE("connection sets satisfy their predicates and are inverse closed") {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<ConnectionSet> sets{ConnectionSet::make(n, ConnectionKind::transpositions),
                                    ConnectionSet::make(n, ConnectionKind::derangements)};
    for (std::size_t f = 0; f + 2 <= n; ++f) sets.push_back(ConnectionSet::make(n, ConnectionKind::fixed_points, f));
    for (const ConnectionSet& s : sets) {
      for (const Permutation& p : s.elements()) {
        CHECK(s.contains(inverse(p)));
        CHECK_FALSE(p.is_identity());
        switch (s.kind()) {
          case ConnectionKind::transpositions:
            CHECK(p.fixed_point_count() == n - 2);
            break;
          case ConnectionKind::derangements:
            CHECK(p.fixed_point_count() == 0);
            break;
          case ConnectionKind::fixed_points:
            CHECK(p.fixed_point_count() == s.fixed());
            break;
        }
      }
    }
  }
}

TEST_CASE("fixed-point connection set sizes factor as C(n,k) times derangements") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      std::size_t brute = 0;
      for (const Permutation& p : all_permutations(n)) brute += p.fixed_point_count() == k;
      const std::size_t formula = oracle::binomial(n, k) * oracle::derangement_count(n - k);
      CHECK(ConnectionSet::make(n, ConnectionKind::fixed_points, k).size() == brute);
      CHECK(brute == formula);
    }
  }
}

TEST_CASE("stabilizer chain orders") {
  CHECK(StabilizerChain(4, std::vector{P1({2, 1, 3, 4}), P1({2, 3, 4, 1})}).order() == 24);
  CHECK(StabilizerChain(5, std::vector<Permutation>{}).order() == 1);
  std::vector<Permutation> three_cycles;
  for (const Permutation& p : all_permutations(4)) {
    if (p.fixed_point_count() == 1) three_cycles.push_back(p);
  }
  const StabilizerChain a4(4, three_cycles);
  CHECK(a4.order() == oracle::closure_order(4, three_cycles, 100));
  CHECK(a4.order() == 12);
  CHECK(StabilizerChain(5, symmetric_group_generators(5)).order() == 120);
  CHECK(StabilizerChain(1, std::vector{Permutation::identity(1)}).order() == 1);
  CHECK(StabilizerChain(24, candidate_aut_generators(4, 4, 2)).order() == 1152);
  CHECK_THROWS_AS(StabilizerChain(3, std::vector{Permutation::identity(4)}), ValidationError);
}

TEST_CASE("stabilizer chain structure") {
  const StabilizerChain s4(4, symmetric_group_generators(4));
  CHECK(s4.base().front() == 0);
  for (std::size_t level = 0; level < s4.depth(); ++level) {
    for (Point b : s4.orbit(level)) CHECK(s4.transversal(level, b)(s4.base_point(level)) == b);
  }
  CHECK(s4.contains(P1({4, 3, 2, 1})));
  const StabilizerChain klein(4, std::vector{P1({2, 1, 4, 3}), P1({3, 4, 1, 2})});
  CHECK(klein.order() == 4);
  CHECK_FALSE(klein.contains(P1({2, 1, 3, 4})));
  CHECK(klein.sift(P1({2, 1, 3, 4})).level < klein.depth() + 1);
}

TEST_CASE("group enumeration") {
  const auto s3 = StabilizerChain(3, symmetric_group_generators(3)).elements();
  CHECK(std::set<Permutation>(s3.begin(), s3.end()).size() == 6);
  CHECK(StabilizerChain(4, std::vector<Permutation>{}).elements().size() == 1);
  std::vector<Permutation> three_cycles;
  for (const Permutation& p : all_permutations(4)) {
    if (p.fixed_point_count() == 1) three_cycles.push_back(p);
  }
  const auto a4 = StabilizerChain(4, three_cycles).elements();
  CHECK(std::set<Permutation>(a4.begin(), a4.end()).size() == 12);
  CHECK(std::all_of(a4.begin(), a4.end(), [](const Permutation& p) { return p.sign() == 1; }));
  CHECK_THROWS_AS(StabilizerChain(6, symmetric_group_generators(6)).elements(100), BudgetExceeded);
}

TEST_CASE("composition and inverse laws on random permutations") {
  const properties::Outcome o = properties::composition_laws(10000, 7);
  INFO(o.failure);
  CHECK(o.ok);
  CHECK(o.cases == 10000);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const Permutation p = oracle::random_permutation(9, rng);
    CHECK(inverse(inverse(p)) == p);
  }
}

TEST_CASE("Schreier-Sims agrees with brute-force closure") {
  const properties::Outcome o = properties::schreier_sims_vs_closure(20, 5000, 11);
  INFO(o.failure);
  CHECK(o.ok);
}
