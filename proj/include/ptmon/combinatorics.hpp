#ifndef PTMON_COMBINATORICS_HPP_
#define PTMON_COMBINATORICS_HPP_

#include <cstdint>

#include "ptmon/bigint.hpp"
#include "ptmon/partition.hpp"

namespace ptmon {

// binom(n, k), with binom(n, k) = 0 whenever k > n.
BigUint binomial(std::uint64_t n, std::uint64_t k);

BigUint factorial(std::uint64_t n);

// Stirling number of the second kind: partitions of a j-set into i
// non-empty parts.
BigUint stirling2(std::uint64_t j, std::uint64_t i);

// Surjections [j] -> [i]: stirling2(j, i) * i!.
BigUint surjection_count(std::uint64_t j, std::uint64_t i);

// Injections [i] -> [j]: j! / (j - i)! when i <= j, else 0.
BigUint injection_count(std::uint64_t i, std::uint64_t j);

// Rank (= idempotent rank) of the submonoid of the full transformation
// monoid on n points generated by its idempotents: 2 when n = 2,
// binom(n, 2) otherwise.
BigUint singular_rank(std::uint64_t n);

// Number of strongly connected tournaments on n labelled vertices.
BigUint strong_tournament_count(std::uint64_t n);

// Number of minimal idempotent generating sets of the idempotent-generated
// submonoid of the full transformation monoid on n points: 1 when n = 2,
// strong_tournament_count(n) otherwise.
BigUint singular_migs_count(std::uint64_t n);

// Strongly connected mixed tournaments on n labelled vertices with exactly
// k doubled arcs; the k = 0 column recovers strong_tournament_count.
BigUint strong_mixed_tournament_count(std::uint64_t n, std::uint64_t k);

// Rank (= idempotent rank) for a uniform partition into m blocks of size n:
// 2 for (m, n) = (2, 1), and m * singular_rank(n) + n! * binom(m, 2)
// otherwise.
BigUint uniform_rank(std::uint64_t m, std::uint64_t n);

// Number of minimal idempotent generating sets for a uniform partition into
// m blocks of size n.
BigUint uniform_migs_count(std::uint64_t m, std::uint64_t n);

// Exact number of idempotent transformations preserving the partition,
// computed by recurrence over sub-partitions (memoised on the multiset of
// block sizes).
BigUint idempotent_count(const Partition& p);

struct RankResult {
  BigUint rank;
  BigUint idrank;
  // The value of the general rank formula; rank == rho always, and
  // idrank == rho except in the special case below.
  BigUint rho;
  // Set when the partition is non-uniform with exactly two blocks of
  // size 1; then idrank == rank + 1.
  bool special_mu1_eq_2 = false;
};

// Rank and idempotent rank of the submonoid generated by the idempotents
// of the partition-preserving transformation monoid.  Uniform partitions
// dispatch to uniform_rank.
RankResult rank_and_idrank(const Partition& p);

// Number of minimal idempotent generating sets of that submonoid.
BigUint migs_count(const Partition& p);

}  // namespace ptmon

#endif  // PTMON_COMBINATORICS_HPP_
