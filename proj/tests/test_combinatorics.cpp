#include <doctest.h>

#include <vector>

#include "ptmon/combinatorics.hpp"
#include "ptmon/oracle.hpp"
#include "ptmon/partition.hpp"
#include "test_util.hpp"

using ptmon::BigUint;
using ptmon::Partition;

using ptmon::test::brute_force_strong_tournaments;

TEST_CASE("singular rank values") {
  CHECK(ptmon::singular_rank(2).to_uint64() == 2);
  CHECK(ptmon::singular_rank(1).is_zero());
  CHECK(ptmon::singular_rank(0).is_zero());
  CHECK(ptmon::singular_rank(4).to_uint64() == 6);
  CHECK(ptmon::singular_rank(10).to_uint64() == 45);
}

TEST_CASE("strong tournament counts from the recurrence") {
  CHECK(ptmon::strong_tournament_count(0).to_uint64() == 1);
  CHECK(ptmon::strong_tournament_count(1).to_uint64() == 1);
  CHECK(ptmon::strong_tournament_count(2).to_uint64() == 0);
  CHECK(ptmon::strong_tournament_count(3).to_uint64() == 2);
  CHECK(ptmon::strong_tournament_count(4).to_uint64() == 24);
  CHECK(ptmon::strong_tournament_count(5).to_uint64() == 544);

  // Cross-check against direct enumeration.
  for (int n = 1; n <= 4; ++n) {
    CHECK(ptmon::strong_tournament_count(static_cast<std::uint64_t>(n)).to_uint64()
          == static_cast<std::uint64_t>(brute_force_strong_tournaments(n)));
  }

  CHECK(ptmon::singular_migs_count(2).to_uint64() == 1);
  CHECK(ptmon::singular_migs_count(3).to_uint64() == 2);
  for (int n = 3; n <= 8; ++n) {
    CHECK(ptmon::singular_migs_count(static_cast<std::uint64_t>(n))
          > BigUint{0});
  }
}

TEST_CASE("mixed tournament recurrence") {
  CHECK(ptmon::strong_mixed_tournament_count(2, 0).is_zero());
  CHECK(ptmon::strong_mixed_tournament_count(2, 1).to_uint64() == 1);
  // The k = 0 column is the plain tournament count.
  for (int n = 0; n <= 5; ++n) {
    CHECK(ptmon::strong_mixed_tournament_count(static_cast<std::uint64_t>(n), 0)
          == ptmon::strong_tournament_count(static_cast<std::uint64_t>(n)));
  }
}

TEST_CASE("uniform rank and generating-set counts") {
  CHECK(ptmon::uniform_rank(2, 1).to_uint64() == 2);
  CHECK(ptmon::uniform_rank(2, 2).to_uint64() == 6);
  CHECK(ptmon::uniform_rank(0, 1).is_zero());
  CHECK(ptmon::uniform_rank(1, 5).to_uint64() == 10);
  CHECK(ptmon::uniform_rank(3, 1).to_uint64() == 3);

  CHECK(ptmon::uniform_migs_count(0, 1).to_uint64() == 1);
  CHECK(ptmon::uniform_migs_count(1, 3).to_uint64() == 2);
  CHECK(ptmon::uniform_migs_count(2, 1).to_uint64() == 1);
  CHECK(ptmon::uniform_migs_count(2, 2).to_uint64() == 2);
  CHECK(ptmon::uniform_migs_count(3, 1).to_uint64() == 2);
}

TEST_CASE("stirling, surjections, injections") {
  CHECK(ptmon::stirling2(3, 2).to_uint64() == 3);
  CHECK(ptmon::stirling2(0, 0).to_uint64() == 1);
  CHECK(ptmon::stirling2(4, 0).is_zero());
  CHECK(ptmon::stirling2(2, 3).is_zero());
  CHECK(ptmon::stirling2(6, 3).to_uint64() == 90);

  CHECK(ptmon::surjection_count(2, 1).to_uint64() == 1);
  CHECK(ptmon::surjection_count(3, 2).to_uint64() == 6);
  CHECK(ptmon::surjection_count(4, 4).to_uint64() == 24);

  CHECK(ptmon::injection_count(1, 2).to_uint64() == 2);
  CHECK(ptmon::injection_count(2, 4).to_uint64() == 12);
  CHECK(ptmon::injection_count(3, 2).is_zero());
  CHECK(ptmon::injection_count(0, 5).to_uint64() == 1);
}

TEST_CASE("idempotent count recurrence") {
  CHECK(ptmon::idempotent_count(Partition{}).to_uint64() == 1);
  CHECK(ptmon::idempotent_count(Partition({2, 1})).to_uint64() == 8);
  CHECK(ptmon::idempotent_count(Partition({1, 1})).to_uint64() == 3);
  CHECK(ptmon::idempotent_count(Partition({1})).to_uint64() == 1);

  // Against direct enumeration on every small partition.
  for (const auto& p : ptmon::test::partitions_up_to(5)) {
    CHECK(ptmon::idempotent_count(p).to_uint64()
          == static_cast<std::uint64_t>(ptmon::enumerate_idempotents(p).size()));
  }
}

TEST_CASE("rank and idempotent rank") {
  auto two_one = ptmon::rank_and_idrank(Partition({2, 1}));
  CHECK(two_one.rank.to_uint64() == 5);
  CHECK(two_one.idrank.to_uint64() == 5);
  CHECK_FALSE(two_one.special_mu1_eq_2);

  auto three_two = ptmon::rank_and_idrank(Partition({3, 2}));
  CHECK(three_two.rank.to_uint64() == 12);
  CHECK(three_two.idrank.to_uint64() == 12);

  auto special = ptmon::rank_and_idrank(Partition({2, 1, 1}));
  CHECK(special.rank.to_uint64() == 8);
  CHECK(special.idrank.to_uint64() == 9);
  CHECK(special.special_mu1_eq_2);

  auto empty = ptmon::rank_and_idrank(Partition{});
  CHECK(empty.rank.is_zero());
  CHECK(empty.idrank.is_zero());

  // Two blocks of size one, but uniform: no special case.
  auto ones = ptmon::rank_and_idrank(Partition({1, 1}));
  CHECK(ones.rank.to_uint64() == 2);
  CHECK(ones.idrank.to_uint64() == 2);
  CHECK_FALSE(ones.special_mu1_eq_2);
}

TEST_CASE("uniform dispatch is consistent") {
  for (const auto& p : ptmon::test::partitions_up_to(6)) {
    if (!p.uniform()) {
      continue;
    }
    auto rr = ptmon::rank_and_idrank(p);
    BigUint direct = ptmon::uniform_rank(
        static_cast<std::uint64_t>(p.num_blocks()),
        static_cast<std::uint64_t>(p.size(0)));
    CHECK(rr.rank == direct);
    CHECK(rr.idrank == direct);
  }
}

TEST_CASE("minimal idempotent generating set counts") {
  CHECK(ptmon::migs_count(Partition({2, 1})).to_uint64() == 1);
  CHECK(ptmon::migs_count(Partition({3, 2})).to_uint64() == 12);
  CHECK(ptmon::migs_count(Partition({2, 1, 1})).to_uint64() == 2);
  CHECK(ptmon::migs_count(Partition({1, 1})).to_uint64() == 1);
  CHECK(ptmon::migs_count(Partition({2, 2})).to_uint64() == 2);
  CHECK(ptmon::migs_count(Partition{}).to_uint64() == 1);
}
