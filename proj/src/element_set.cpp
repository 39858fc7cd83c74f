#include "ptmon/element_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptmon {

ElementSet::ElementSet(Partition partition)
    : partition_(std::move(partition)) {}

ElementSet::ElementSet(Partition partition,
                       std::vector<PartTransformation> elements)
    : partition_(std::move(partition)), elements_(std::move(elements)) {
  for (const auto& t : elements_) {
    if (!(t.partition() == partition_)) {
      throw std::invalid_argument(
          "ElementSet: element over a different partition");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool ElementSet::contains(const PartTransformation& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

int ElementSet::index_of(const PartTransformation& t) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), t);
  if (it == elements_.end() || !(*it == t)) {
    return -1;
  }
  return static_cast<int>(it - elements_.begin());
}

}  // namespace ptmon
