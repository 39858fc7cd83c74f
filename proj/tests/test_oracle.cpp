#include <doctest.h>

#include <stdexcept>

#include "ptmon/combinatorics.hpp"
#include "ptmon/element_set.hpp"
#include "ptmon/generators.hpp"
#include "ptmon/maps.hpp"
#include "ptmon/oracle.hpp"
#include "ptmon/partition.hpp"
#include "test_util.hpp"

using ptmon::BigUint;
using ptmon::ElementSet;
using ptmon::Partition;
using ptmon::PartTransformation;
using ptmon::SearchBudget;

TEST_CASE("closure of the empty set is the trivial monoid") {
  Partition p({2, 1});
  ElementSet trivial = ptmon::closure(ElementSet(p));
  CHECK(trivial.size() == 1);
  CHECK(trivial.contains(PartTransformation::identity(p)));
}

TEST_CASE("closure of the two point collapses in a single block") {
  // Inside one block of size two, the two collapses generate the identity
  // and the two constant maps: everything except the transposition.
  Partition p({2});
  std::vector<PartTransformation> gens{
      ptmon::embed_block_map(p, 0, ptmon::point_collapse_map(2, 0, 1)),
      ptmon::embed_block_map(p, 0, ptmon::point_collapse_map(2, 1, 0))};
  ElementSet closed = ptmon::closure(p, gens);
  CHECK(closed.size() == 3);
  CHECK_FALSE(closed.contains(ptmon::embed_block_map(p, 0, {1, 0})));
}

TEST_CASE("closure budget error reports partial progress") {
  Partition p({2, 2});
  SearchBudget tiny;
  tiny.max_closure_elements = 5;
  CHECK_THROWS_AS(ptmon::idempotent_generated(p, tiny), ptmon::BudgetExceeded);
}

TEST_CASE("closure does not depend on generator order") {
  Partition p({2, 1});
  ElementSet full = ptmon::full_idempotent_generators(p);
  std::vector<PartTransformation> forward(full.begin(), full.end());
  std::vector<PartTransformation> backward(forward.rbegin(), forward.rend());
  CHECK(ptmon::closure(p, forward) == ptmon::closure(p, backward));
}

TEST_CASE("closure is monotone in the generators") {
  Partition p({2, 1});
  ElementSet full = ptmon::full_idempotent_generators(p);
  std::vector<PartTransformation> some(full.begin(), full.begin() + 2);
  ElementSet small = ptmon::closure(p, some);
  ElementSet large = ptmon::closure(full);
  for (const auto& t : small) {
    CHECK(large.contains(t));
  }
}

TEST_CASE("idempotent enumeration") {
  CHECK(ptmon::enumerate_idempotents(Partition({2, 1})).size() == 8);
  CHECK(ptmon::enumerate_idempotents(Partition({1, 1})).size() == 3);
  CHECK(ptmon::enumerate_idempotents(Partition({1})).size() == 1);
  for (const auto& e : ptmon::enumerate_idempotents(Partition({2, 2}))) {
    CHECK(ptmon::is_idempotent(e));
  }
}

TEST_CASE("idempotent-generated submonoid of two singleton blocks") {
  Partition p({1, 1});
  ElementSet s = ptmon::idempotent_generated(p);
  CHECK(s.size() == 3);
  CHECK(s.contains(PartTransformation::identity(p)));
  CHECK(s.contains(ptmon::block_collapse(p, 0, 1, {0})));
  CHECK(s.contains(ptmon::block_collapse(p, 1, 0, {0})));
}

TEST_CASE("closure of idempotents equals closure of the full generators") {
  Partition p({2, 1});
  ElementSet via_idempotents = ptmon::idempotent_generated(p);
  ElementSet via_generators = ptmon::closure(ptmon::full_idempotent_generators(p));
  CHECK(via_idempotents == via_generators);
  CHECK(via_idempotents.size() >= 3);
  CHECK(via_idempotents.size() <= 12);
}

TEST_CASE("induced block maps of the submonoid are never proper permutations") {
  for (const auto& p : ptmon::test::partitions_up_to(6)) {
    ElementSet s = ptmon::idempotent_generated(p);
    for (const auto& f : s) {
      const auto& fbar = f.block_images();
      bool identity = fbar == ptmon::identity_map(p.num_blocks());
      CHECK((identity || !ptmon::is_permutation(fbar)));
      if (identity) {
        // Components under the identity block map avoid proper permutations
        // as well.
        for (int i = 0; i < p.num_blocks(); ++i) {
          const auto& component = f.block_map(i);
          CHECK((component == ptmon::identity_map(p.size(i))
                 || !ptmon::is_permutation(component)));
        }
      }
    }
  }
}

TEST_CASE("generates") {
  Partition p({2, 1});
  ElementSet s = ptmon::idempotent_generated(p);
  ElementSet minimal = ptmon::minimal_generating_set(p, ptmon::default_spec(p));
  CHECK(ptmon::generates(minimal, s));
  CHECK_FALSE(ptmon::generates(ElementSet(p), s));
}

TEST_CASE("exhaustive rank matches the formulas on the tiny cases") {
  Partition two_one({2, 1});
  CHECK(ptmon::exhaustive_rank(two_one, true) == 5);
  CHECK(ptmon::exhaustive_rank(two_one, false) == 5);

  Partition ones({1, 1});
  CHECK(ptmon::exhaustive_rank(ones, true) == 2);
  CHECK(ptmon::exhaustive_rank(ones, false) == 2);
}

TEST_CASE("exhaustive rank respects the subset budget") {
  SearchBudget tiny;
  tiny.max_subsets = 10;
  try {
    ptmon::exhaustive_rank(Partition({2, 1}), true, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const ptmon::BudgetExceeded& e) {
    // Sizes up to reached() are fully excluded: the size-1 batch (7 subsets)
    // fits the budget of 10, the size-2 batch does not.
    CHECK(e.reached() == 1);
  }
}

TEST_CASE("time limit aborts a closure") {
  SearchBudget instant;
  instant.time_limit = std::chrono::milliseconds{0};
  CHECK_THROWS_AS(ptmon::idempotent_generated(Partition({2, 2}), instant),
                  ptmon::BudgetExceeded);
}

TEST_CASE("parallel subset search agrees with sequential") {
  Partition p({2, 1});
  CHECK(ptmon::exhaustive_rank(p, true, SearchBudget{}, 2) == 5);
  auto seq = ptmon::exhaustive_migs(p, SearchBudget{}, false, 1);
  auto par = ptmon::exhaustive_migs(p, SearchBudget{}, false, 2);
  REQUIRE(seq.sets.size() == par.sets.size());
  for (std::size_t i = 0; i < seq.sets.size(); ++i) {
    CHECK(seq.sets[i] == par.sets[i]);
  }
}

TEST_CASE("raw enumeration of minimal idempotent generating sets") {
  Partition two_one_p({2, 1});
  auto two_one = ptmon::exhaustive_migs(two_one_p);
  CHECK(two_one.sets.size() == 1);
  CHECK_FALSE(two_one.assumes_classification);
  CHECK(two_one.sets[0].size() == 5);
  // There is only one such set, so the constructed one must be it.
  CHECK(two_one.sets[0]
        == ptmon::minimal_generating_set(two_one_p,
                                         ptmon::default_spec(two_one_p)));

  Partition ones_p({1, 1});
  auto ones = ptmon::exhaustive_migs(ones_p);
  CHECK(ones.sets.size() == 1);
  CHECK(ones.sets[0].size() == 2);
  CHECK(ones.sets[0]
        == ptmon::minimal_generating_set(ones_p, ptmon::default_spec(ones_p)));

  auto square = ptmon::exhaustive_migs(Partition({2, 2}));
  CHECK(square.sets.size() == 2);
  for (const auto& set : square.sets) {
    CHECK(set.size() == 6);
    CHECK(ptmon::generates(set, ptmon::idempotent_generated(Partition({2, 2}))));
  }
}

TEST_CASE("structured enumeration of minimal idempotent generating sets") {
  Partition p({3, 2});
  ElementSet s = ptmon::idempotent_generated(p);
  auto migs = ptmon::exhaustive_migs(p, SearchBudget{}, true);
  CHECK(migs.assumes_classification);
  CHECK(migs.sets.size() == 12);
  for (const auto& set : migs.sets) {
    CHECK(set.size() == 12);
    CHECK(ptmon::generates(set, s));
    for (const auto& t : set) {
      CHECK(ptmon::is_idempotent(t));
    }
  }
  CHECK(ptmon::migs_count(p).to_uint64() == migs.sets.size());
}

TEST_CASE("structured enumeration with a repeated larger size") {
  // Two blocks of size 2 and one singleton: each size-2 block's collapse
  // onto the singleton is forced, so the only freedom is the choice of
  // generators inside the size-2 class (two ways).
  Partition p({2, 2, 1});
  ElementSet s = ptmon::idempotent_generated(p);
  auto migs = ptmon::exhaustive_migs(p, SearchBudget{}, true);
  CHECK(migs.sets.size() == 2);
  for (const auto& set : migs.sets) {
    CHECK(BigUint(static_cast<std::uint64_t>(set.size()))
          == ptmon::rank_and_idrank(p).idrank);
    CHECK(ptmon::generates(set, s));
  }
}

TEST_CASE("structured enumeration covers the special two-singleton case") {
  Partition p({2, 1, 1});
  auto migs = ptmon::exhaustive_migs(p, SearchBudget{}, true);
  CHECK(migs.sets.size() == 2);
  CHECK(ptmon::migs_count(p).to_uint64() == 2);
  ElementSet s = ptmon::idempotent_generated(p);
  for (const auto& set : migs.sets) {
    CHECK(set.size() == 9);  // idrank = rank + 1 here
    CHECK(ptmon::generates(set, s));
  }
}

TEST_CASE("uniform membership predicate") {
  Partition p({2, 2});
  CHECK(ptmon::uniform_membership(PartTransformation::identity(p)));

  // Swap the two blocks identically: a proper permutation at block level.
  PartTransformation swap_blocks(
      p, {1, 0}, {ptmon::identity_map(2), ptmon::identity_map(2)});
  CHECK_FALSE(ptmon::uniform_membership(swap_blocks));

  CHECK_THROWS_AS(
      ptmon::uniform_membership(PartTransformation::identity(Partition({2, 1}))),
      std::invalid_argument);

  ElementSet s = ptmon::idempotent_generated(p);
  for_each_element(p, [&](const PartTransformation& f) {
    CHECK(ptmon::uniform_membership(f) == s.contains(f));
  });
}

TEST_CASE("size-class submonoids look like uniform membership") {
  // Elements supported on one size class, restricted to that class, belong
  // to the class's own idempotent-generated submonoid exactly when the
  // uniform predicate admits them.
  for (const auto& p : ptmon::test::partitions_up_to(5)) {
    ptmon::Profile prof = ptmon::profile(p);
    ElementSet s = ptmon::idempotent_generated(p);
    for (int q : prof.occurring_sizes) {
      const auto& blocks = prof.blocks_of_size[static_cast<std::size_t>(q)];
      Partition pc = ptmon::class_partition(p, q);
      ElementSet sc = ptmon::idempotent_generated(pc);
      for_each_element(pc, [&](const PartTransformation& f) {
        PartTransformation lifted = ptmon::embed_class_element(p, blocks, f);
        CHECK(s.contains(lifted) == sc.contains(f));
        CHECK(sc.contains(f) == ptmon::uniform_membership(f));
      });
    }
  }
}

TEST_CASE("contains_minimal_subset") {
  Partition p({2, 1});
  ElementSet idempotents = ptmon::enumerate_idempotents(p);
  CHECK(ptmon::contains_minimal_subset(idempotents));

  ElementSet minimal = ptmon::minimal_generating_set(p, ptmon::default_spec(p));
  CHECK(ptmon::contains_minimal_subset(minimal));

  ElementSet not_generating(p, {PartTransformation::identity(p)});
  CHECK_THROWS_AS(ptmon::contains_minimal_subset(not_generating),
                  std::invalid_argument);
}
