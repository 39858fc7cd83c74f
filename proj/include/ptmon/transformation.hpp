#ifndef PTMON_TRANSFORMATION_HPP_
#define PTMON_TRANSFORMATION_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "ptmon/bigint.hpp"
#include "ptmon/partition.hpp"

namespace ptmon {

class FlatTransformation;

// A transformation of the partitioned set that maps every block into a
// single block.  It is stored in block form: block_images() is the induced
// map on block indices, and block_map(i) is the component map from block i
// into block block_images()[i], so block i's point x is sent to point
// block_map(i)[x] of block block_images()[i].
//
// Values are immutable after construction and cheap to copy around; all
// operations on them are pure functions, so they can be shared freely
// between threads.
class PartTransformation {
 public:
  // Validates that each component map lands inside its target block.
  PartTransformation(Partition partition, std::vector<int> block_images,
                     std::vector<std::vector<int>> block_maps);

  static PartTransformation identity(const Partition& p);

  const Partition& partition() const noexcept { return partition_; }
  const std::vector<int>& block_images() const noexcept { return fbar_; }
  const std::vector<int>& block_map(int block) const {
    return blocks_[static_cast<std::size_t>(block)];
  }

  bool is_identity() const;

  friend bool operator==(const PartTransformation& lhs,
                         const PartTransformation& rhs) {
    return lhs.partition_ == rhs.partition_ && lhs.fbar_ == rhs.fbar_
           && lhs.blocks_ == rhs.blocks_;
  }
  friend std::strong_ordering operator<=>(const PartTransformation& lhs,
                                          const PartTransformation& rhs);

 private:
  Partition partition_;
  std::vector<int> fbar_;
  std::vector<std::vector<int>> blocks_;
};

struct TransformationHash {
  std::size_t operator()(const PartTransformation& t) const noexcept;
};

// Left-action composition: a point is mapped by f first, then by g.
// Throws std::invalid_argument if f and g live over different partitions.
PartTransformation compose(const PartTransformation& f,
                           const PartTransformation& g);

inline PartTransformation operator*(const PartTransformation& f,
                                    const PartTransformation& g) {
  return compose(f, g);
}

// Decides f * f == f through the block-wise characterisation: the induced
// block map must be idempotent, components over its image must be
// idempotent, and every other component's image must land in the image of
// the component it is chained with.
bool is_idempotent(const PartTransformation& f);

int image_size(const PartTransformation& f);

// The idempotent collapsing block `source` into block `target` with the
// given component map, every other block fixed pointwise.  The component
// must be injective when source's block is smaller than target's,
// surjective when larger, bijective when equal.
PartTransformation block_collapse(const Partition& p, int target, int source,
                                  const std::vector<int>& component);

// The transformation acting as `map` on block k and identically elsewhere.
PartTransformation embed_block_map(const Partition& p, int k,
                                   const std::vector<int>& map);

// Exact size of the full monoid of partition-preserving transformations.
BigUint total_count(const Partition& p);

// Visits every partition-preserving transformation exactly once, in a fixed
// deterministic order.  Throws BudgetExceeded (naming the required count)
// if the monoid has more than max_elements elements.
void for_each_element(const Partition& p,
                      const std::function<void(const PartTransformation&)>& fn,
                      std::uint64_t max_elements = 1000000);

std::vector<PartTransformation> enumerate_all(
    const Partition& p, std::uint64_t max_elements = 1000000);

// The same transformation as a plain map on flat points 0 .. n-1 in the
// canonical flat order.
class FlatTransformation {
 public:
  // Throws std::invalid_argument unless the map sends each block inside a
  // single block.
  FlatTransformation(Partition partition, std::vector<int> point_map);

  const Partition& partition() const noexcept { return partition_; }
  const std::vector<int>& point_map() const noexcept { return map_; }
  int apply(int point) const { return map_[static_cast<std::size_t>(point)]; }

  friend bool operator==(const FlatTransformation& lhs,
                         const FlatTransformation& rhs) {
    return lhs.partition_ == rhs.partition_ && lhs.map_ == rhs.map_;
  }

 private:
  Partition partition_;
  std::vector<int> map_;
};

FlatTransformation to_flat(const PartTransformation& f);
PartTransformation from_flat(const FlatTransformation& f);
PartTransformation from_flat(const Partition& p, std::vector<int> point_map);

FlatTransformation compose(const FlatTransformation& f,
                           const FlatTransformation& g);

// The partition of an index set into classes with equal image under a map.
// Classes are canonically ordered: each class ascending, classes by their
// least element.
class KernelRelation {
 public:
  static KernelRelation from_map(const std::vector<int>& map);

  const std::vector<std::vector<int>>& classes() const noexcept {
    return classes_;
  }
  int num_classes() const noexcept { return static_cast<int>(classes_.size()); }

  // True when every class is a singleton (the equality relation).
  bool is_trivial() const;

  // True when every class of *this is contained in a class of other.
  bool refines(const KernelRelation& other) const;

  friend bool operator==(const KernelRelation& lhs,
                         const KernelRelation& rhs) {
    return lhs.classes_ == rhs.classes_;
  }

 private:
  std::vector<std::vector<int>> classes_;
};

// Kernel of the flat point map of f.
KernelRelation kernel(const PartTransformation& f);

}  // namespace ptmon

#endif  // PTMON_TRANSFORMATION_HPP_
