#include <doctest.h>

#include <stdexcept>

#include "ptmon/combinatorics.hpp"
#include "ptmon/generators.hpp"
#include "ptmon/maps.hpp"
#include "ptmon/oracle.hpp"
#include "ptmon/partition.hpp"
#include "test_util.hpp"

using ptmon::ElementSet;
using ptmon::Partition;
using ptmon::PartTransformation;

TEST_CASE("full idempotent generators of (2,1)") {
  Partition p({2, 1});
  ElementSet gens = ptmon::full_idempotent_generators(p);
  CHECK(gens.size() == 5);
  int point_collapses = 0;
  for (const auto& g : gens) {
    CHECK(ptmon::is_idempotent(g));
    if (g.block_images() == ptmon::identity_map(2)) {
      ++point_collapses;
    }
  }
  CHECK(point_collapses == 2);  // the rest move a block
}

TEST_CASE("full idempotent generators of a singleton block") {
  ElementSet gens = ptmon::full_idempotent_generators(Partition({1}));
  CHECK(gens.empty());
}

TEST_CASE("full generators generate the idempotent-generated submonoid") {
  for (const auto& p : ptmon::test::partitions_up_to(5)) {
    ElementSet s = ptmon::idempotent_generated(p);
    CHECK(ptmon::generates(ptmon::full_idempotent_generators(p), s));
  }
}

TEST_CASE("default spec choices") {
  Partition p({2, 1});
  ptmon::GeneratingSetSpec spec = ptmon::default_spec(p);
  REQUIRE(spec.collapses.size() == 1);
  auto [key, f] = *spec.collapses.begin();
  CHECK(key.first == 0);   // the size-2 block collapses
  CHECK(key.second == 1);  // onto the singleton block
  CHECK(f == std::vector<int>{0, 0});

  Partition q({3, 2});
  ptmon::GeneratingSetSpec spec32 = ptmon::default_spec(q);
  REQUIRE(spec32.collapses.size() == 1);
  auto [key32, f32] = *spec32.collapses.begin();
  CHECK(key32 == std::make_pair(0, 1));
  CHECK(f32 == std::vector<int>{0, 1, 1});

  // No smaller size in a uniform partition, hence no collapses.
  CHECK(ptmon::default_spec(Partition({3, 3})).collapses.empty());
}

TEST_CASE("default spec picks the largest block of each smaller size") {
  Partition p({3, 2, 2, 1});
  ptmon::GeneratingSetSpec spec = ptmon::default_spec(p);
  // Block 0 (size 3) needs representatives of sizes 2 and 1: blocks 2 and 3.
  CHECK(spec.collapses.count({0, 2}) == 1);
  CHECK(spec.collapses.count({0, 1}) == 0);
  CHECK(spec.collapses.count({0, 3}) == 1);
  // Blocks 1 and 2 (size 2) each need a size-1 representative: block 3.
  CHECK(spec.collapses.count({1, 3}) == 1);
  CHECK(spec.collapses.count({2, 3}) == 1);
}

TEST_CASE("minimal generating set of (2,1)") {
  Partition p({2, 1});
  ElementSet u = ptmon::minimal_generating_set(p, ptmon::default_spec(p));
  CHECK(u.size() == 5);
  for (const auto& t : u) {
    CHECK(ptmon::is_idempotent(t));
  }
  CHECK(ptmon::generates(u, ptmon::idempotent_generated(p)));
}

TEST_CASE("minimal generating set sizes match the idempotent rank") {
  for (const auto& p : ptmon::test::partitions_up_to(5)) {
    ElementSet u = ptmon::minimal_generating_set(p, ptmon::default_spec(p));
    auto rr = ptmon::rank_and_idrank(p);
    CHECK(ptmon::BigUint(static_cast<std::uint64_t>(u.size())) == rr.idrank);
    ElementSet s = ptmon::idempotent_generated(p);
    CHECK(ptmon::generates(u, s));
    ElementSet full = ptmon::full_idempotent_generators(p);
    CHECK(ptmon::closure(u) == ptmon::closure(full));
  }
}

TEST_CASE("invalid specs are rejected") {
  Partition p({2, 1});
  ptmon::GeneratingSetSpec spec = ptmon::default_spec(p);
  spec.collapses.clear();
  CHECK_THROWS_AS(ptmon::minimal_generating_set(p, spec), std::invalid_argument);

  ptmon::GeneratingSetSpec missing_class = ptmon::default_spec(p);
  missing_class.class_generators.erase(1);
  CHECK_THROWS_AS(ptmon::minimal_generating_set(p, missing_class),
                  std::invalid_argument);
}

TEST_CASE("rank generating set in the special case") {
  Partition p({2, 1, 1});
  ElementSet v = ptmon::rank_generating_set(p);
  CHECK(v.size() == 8);
  int non_idempotent = 0;
  for (const auto& t : v) {
    non_idempotent += ptmon::is_idempotent(t) ? 0 : 1;
  }
  CHECK(non_idempotent == 1);
  CHECK(ptmon::generates(v, ptmon::idempotent_generated(p)));

  ElementSet u = ptmon::minimal_generating_set(p, ptmon::default_spec(p));
  CHECK(u.size() == 9);
  for (const auto& t : u) {
    CHECK(ptmon::is_idempotent(t));
  }
  CHECK(ptmon::generates(u, ptmon::idempotent_generated(p)));
}

TEST_CASE("rank generating set outside the special case") {
  Partition p({2, 1});
  ElementSet v = ptmon::rank_generating_set(p);
  CHECK(v.size() == 5);
  for (const auto& t : v) {
    CHECK(ptmon::is_idempotent(t));
  }
}

TEST_CASE("rank generating set size matches the rank formula") {
  Partition p({3, 2, 1, 1});
  ElementSet v = ptmon::rank_generating_set(p);
  CHECK(ptmon::BigUint(static_cast<std::uint64_t>(v.size()))
        == ptmon::rank_and_idrank(p).rank);
}

TEST_CASE("removing any element of a minimal set loses generation") {
  for (const Partition& p :
       {Partition({2, 1}), Partition({1, 1}), Partition({2, 2})}) {
    ElementSet s = ptmon::idempotent_generated(p);
    ElementSet u = ptmon::minimal_generating_set(p, ptmon::default_spec(p));
    for (int skip = 0; skip < u.size(); ++skip) {
      std::vector<PartTransformation> rest;
      for (int i = 0; i < u.size(); ++i) {
        if (i != skip) {
          rest.push_back(u[i]);
        }
      }
      CHECK_FALSE(ptmon::generates(ElementSet(p, rest), s));
    }
  }
}

TEST_CASE("empty partition end to end") {
  Partition empty;
  ElementSet u = ptmon::minimal_generating_set(empty, ptmon::default_spec(empty));
  CHECK(u.empty());
  CHECK(ptmon::rank_generating_set(empty).empty());
  CHECK(ptmon::full_idempotent_generators(empty).empty());
  ElementSet s = ptmon::idempotent_generated(empty);
  CHECK(s.size() == 1);
  CHECK(ptmon::generates(u, s));
  ptmon::GeneratorWord word
      = ptmon::factorize_idempotent(PartTransformation::identity(empty));
  CHECK(word.letters.empty());
}

TEST_CASE("canonical class generators appear among the enumerated ones") {
  Partition p({2, 2});
  ElementSet canonical(p, ptmon::canonical_class_migs(p, 2));
  auto raw = ptmon::exhaustive_migs(p);
  bool found = false;
  for (const auto& set : raw.sets) {
    found = found || set == canonical;
  }
  CHECK(found);
}

TEST_CASE("factorization basics") {
  Partition p({2, 1});
  ElementSet gens = ptmon::full_idempotent_generators(p);

  ptmon::GeneratorWord empty
      = ptmon::factorize_idempotent(PartTransformation::identity(p));
  CHECK(empty.letters.empty());
  CHECK(ptmon::evaluate_word(gens, empty) == PartTransformation::identity(p));

  for (const auto& g : gens) {
    ptmon::GeneratorWord word = ptmon::factorize_idempotent(g);
    CHECK(word.letters.size() == 1);
    CHECK(ptmon::evaluate_word(gens, word) == g);
  }

  // Non-idempotent input is rejected.
  PartTransformation swap = ptmon::embed_block_map(p, 0, {1, 0});
  CHECK_THROWS_AS(ptmon::factorize_idempotent(swap), std::invalid_argument);

  CHECK_THROWS_AS(ptmon::evaluate_word(gens, ptmon::GeneratorWord{{99}}),
                  std::out_of_range);
}

TEST_CASE("element sets reject foreign elements") {
  Partition p({2, 1});
  CHECK_THROWS_AS(
      ptmon::ElementSet(p, {PartTransformation::identity(Partition({3}))}),
      std::invalid_argument);
}

TEST_CASE("factorization round-trips every idempotent of small partitions") {
  for (const auto& p : ptmon::test::partitions_up_to(5)) {
    ElementSet gens = ptmon::full_idempotent_generators(p);
    for (const auto& e : ptmon::enumerate_idempotents(p)) {
      ptmon::GeneratorWord word = ptmon::factorize_idempotent(e);
      for (int letter : word.letters) {
        CHECK(letter >= 0);
        CHECK(letter < gens.size());
      }
      CHECK(ptmon::evaluate_word(gens, word) == e);
    }
  }
}
