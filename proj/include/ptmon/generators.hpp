#ifndef PTMON_GENERATORS_HPP_
#define PTMON_GENERATORS_HPP_

#include <map>
#include <utility>
#include <vector>

#include "ptmon/element_set.hpp"
#include "ptmon/partition.hpp"
#include "ptmon/transformation.hpp"

namespace ptmon {

// The full idempotent generating set: all single-block point collapses
// embedded at each block, together with all block collapses whose component
// is injective or surjective (bijective for equal sizes).  Its closure is
// the whole idempotent-generated submonoid.
ElementSet full_idempotent_generators(const Partition& p);

// The choice data behind a minimal generating set: one minimal idempotent
// generating set per occurring block size (acting on that size class only),
// plus, for every block i and every smaller occurring size, a chosen
// representative block j of that size and a surjective component for the
// collapse of block i onto block j.
struct GeneratingSetSpec {
  // Keyed by block size.
  std::map<int, ElementSet> class_generators;
  // Keyed by (collapsed block i, representative block j); the value is the
  // surjective component map from block i's points onto block j's.
  std::map<std::pair<int, int>, std::vector<int>> collapses;
};

// Deterministic default choices: the canonical minimal generating set of
// each size class, the largest block index as the representative of each
// smaller size, and the order-preserving quotient x -> min(x, size-1) as
// the surjective component.
GeneratingSetSpec default_spec(const Partition& p);

// The generating set assembled from a spec: the per-size-class sets, all
// injective collapses of smaller blocks into strictly larger ones, and the
// chosen surjective collapses onto smaller representatives.  Its size is
// the idempotent rank when each per-class set is minimal.
// Throws std::invalid_argument if the spec does not fit the partition.
ElementSet minimal_generating_set(const Partition& p,
                                  const GeneratingSetSpec& spec);

// A generating set of size exactly rank().  Equal to the default minimal
// generating set except for non-uniform partitions with exactly two
// size-1 blocks, where two idempotents are traded for their (single,
// non-idempotent) product.
ElementSet rank_generating_set(const Partition& p);

// A word over a generating set, stored as indices into the set's canonical
// order; evaluating left to right reproduces the factorised element.
struct GeneratorWord {
  std::vector<int> letters;
};

PartTransformation evaluate_word(const ElementSet& generators,
                                 const GeneratorWord& word);

// Expresses an idempotent as a word over full_idempotent_generators() of
// its partition, following the kernel-class factorisation: per class, flatten
// the kernels of the non-image components, apply the image component, then
// transfer each flattened block onto the image block.
// Throws std::invalid_argument if the input is not idempotent.
GeneratorWord factorize_idempotent(const PartTransformation& f);

// Helpers shared with the exhaustive searches.

// The uniform partition consisting of the blocks of one size.
Partition class_partition(const Partition& p, int size);

// Lifts a transformation of a size class (blocks listed ascending in
// class_blocks) to the whole partition, acting identically elsewhere.
PartTransformation embed_class_element(const Partition& p,
                                       const std::vector<int>& class_blocks,
                                       const PartTransformation& element);

// The canonical minimal idempotent generating set of one size class,
// embedded into p.  Built from a strongly connected tournament between the
// class blocks (and point collapses within each block); for exactly two
// blocks the permutation components are split across the two directions.
std::vector<PartTransformation> canonical_class_migs(const Partition& p,
                                                     int size);

}  // namespace ptmon

#endif  // PTMON_GENERATORS_HPP_
