#ifndef PTMON_ORACLE_HPP_
#define PTMON_ORACLE_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ptmon/element_set.hpp"
#include "ptmon/error.hpp"
#include "ptmon/partition.hpp"
#include "ptmon/transformation.hpp"

namespace ptmon {

// Limits for the exhaustive searches.  Subset searches charge each batch of
// same-size subsets against max_subsets up front, so a run either completes
// a batch or fails before starting it; this keeps results identical across
// worker counts.
struct SearchBudget {
  std::uint64_t max_closure_elements = 1000000;
  std::uint64_t max_subsets = 10000000;
  std::optional<std::chrono::milliseconds> time_limit;
};

// The submonoid generated by gens: the least set containing the identity
// and gens and closed under composition, computed by breadth-first
// right-multiplication.
ElementSet closure(const ElementSet& gens, const SearchBudget& budget = {});
ElementSet closure(const Partition& p,
                   const std::vector<PartTransformation>& gens,
                   const SearchBudget& budget = {});

// Every idempotent of the partition-preserving transformation monoid, by
// direct enumeration and the f*f == f test on flat maps.
ElementSet enumerate_idempotents(const Partition& p,
                                 const SearchBudget& budget = {});

// The submonoid generated by all idempotents.
ElementSet idempotent_generated(const Partition& p,
                                const SearchBudget& budget = {});

// Whether the closure of gens is exactly target; bails out early as soon as
// a product escapes target.
bool generates(const ElementSet& gens, const ElementSet& target,
               const SearchBudget& budget = {});

// Smallest k such that some k-subset of the candidate pool (the idempotents,
// or the whole submonoid) generates the idempotent-generated submonoid.
// The identity is free and never counted.
int exhaustive_rank(const Partition& p, bool idempotents_only,
                    const SearchBudget& budget = {}, int jobs = 1);

struct MigsResult {
  std::vector<ElementSet> sets;
  // Raw enumeration checks every subset and assumes nothing.  Structured
  // enumeration walks the classified shape of minimal generating sets
  // (per-size-class choices plus collapse choices) and verifies each
  // candidate, so its completeness rests on that classification.
  bool assumes_classification = false;
};

// All idempotent generating sets of minimal size.
MigsResult exhaustive_migs(const Partition& p, const SearchBudget& budget = {},
                           bool structured = false, int jobs = 1);

// Membership test for the idempotent-generated submonoid over a uniform
// partition: either the induced block map is the identity and every
// component is the identity or non-invertible, or the induced block map is
// itself non-invertible.  Throws std::invalid_argument on non-uniform input.
bool uniform_membership(const PartTransformation& f);

// Whether some subset of gens of size idrank generates the whole
// idempotent-generated submonoid.  Requires gens to consist of idempotents
// and to generate it.
bool contains_minimal_subset(const ElementSet& gens,
                             const SearchBudget& budget = {}, int jobs = 1);

}  // namespace ptmon

#endif  // PTMON_ORACLE_HPP_
