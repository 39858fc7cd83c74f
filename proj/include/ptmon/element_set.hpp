#ifndef PTMON_ELEMENT_SET_HPP_
#define PTMON_ELEMENT_SET_HPP_

#include <vector>

#include "ptmon/partition.hpp"
#include "ptmon/transformation.hpp"

namespace ptmon {

// A deduplicated, canonically ordered set of transformations over a single
// partition.  Canonical order is the lexicographic order on (block images,
// component maps), so two sets with the same members compare equal no
// matter how they were produced.  Immutable after construction.
class ElementSet {
 public:
  explicit ElementSet(Partition partition);
  ElementSet(Partition partition, std::vector<PartTransformation> elements);

  const Partition& partition() const noexcept { return partition_; }

  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool empty() const noexcept { return elements_.empty(); }

  const PartTransformation& operator[](int i) const {
    return elements_[static_cast<std::size_t>(i)];
  }

  bool contains(const PartTransformation& t) const;
  // Position in canonical order, or -1 if absent.
  int index_of(const PartTransformation& t) const;

  std::vector<PartTransformation>::const_iterator begin() const {
    return elements_.begin();
  }
  std::vector<PartTransformation>::const_iterator end() const {
    return elements_.end();
  }

  friend bool operator==(const ElementSet& lhs, const ElementSet& rhs) {
    return lhs.partition_ == rhs.partition_ && lhs.elements_ == rhs.elements_;
  }
  friend std::strong_ordering operator<=>(const ElementSet& lhs,
                                          const ElementSet& rhs) {
    return lhs.elements_ <=> rhs.elements_;
  }

 private:
  Partition partition_;
  std::vector<PartTransformation> elements_;
};

}  // namespace ptmon

#endif  // PTMON_ELEMENT_SET_HPP_
