#ifndef PTMON_PARTITION_HPP_
#define PTMON_PARTITION_HPP_

#include <memory>
#include <vector>

namespace ptmon {

// A partition of the set {1, ..., n} into m blocks, known only through its
// block sizes.  Sizes are stored sorted non-increasingly; constructing from
// an unsorted list yields the sorted partition.  The empty partition (m = 0,
// n = 0) is allowed.
//
// Blocks are indexed 0 .. m-1 and points of block i are 0 .. size(i)-1.
// The canonical flat order lists block 0's points first, then block 1's,
// and so on; flat point p belongs to block block_of(p) at local position
// p - offset(block_of(p)).
//
// Copies share the underlying data and are cheap.
class Partition {
 public:
  Partition();  // the empty partition
  explicit Partition(std::vector<int> block_sizes);

  int num_blocks() const noexcept { return static_cast<int>(data_->sizes.size()); }
  int degree() const noexcept { return data_->total; }

  int size(int block) const { return data_->sizes[static_cast<std::size_t>(block)]; }
  int offset(int block) const { return data_->offsets[static_cast<std::size_t>(block)]; }
  int block_of(int point) const { return data_->block_of[static_cast<std::size_t>(point)]; }

  const std::vector<int>& sizes() const noexcept { return data_->sizes; }

  // True when all blocks have the same size; vacuously true for m <= 1.
  bool uniform() const noexcept;

  friend bool operator==(const Partition& lhs, const Partition& rhs) {
    return lhs.data_ == rhs.data_ || lhs.data_->sizes == rhs.data_->sizes;
  }

 private:
  struct Data {
    std::vector<int> sizes;
    std::vector<int> offsets;
    std::vector<int> block_of;
    int total = 0;
  };
  std::shared_ptr<const Data> data_;
};

// Statistics of a partition used throughout the counting formulas, indexed
// by block size i = 1 .. n (index 0 is unused):
//   blocks_of_size[i]  the blocks of size i, ascending          (M_i)
//   mu[i]              how many blocks have size i              (mu_i)
//   smaller_sizes[i]   the occurring sizes strictly below i     (N_i)
//   nu[i]              how many distinct smaller sizes occur    (nu_i)
struct Profile {
  std::vector<std::vector<int>> blocks_of_size;
  std::vector<int> mu;
  std::vector<std::vector<int>> smaller_sizes;
  std::vector<int> nu;

  // The distinct block sizes, ascending.
  std::vector<int> occurring_sizes;
};

Profile profile(const Partition& p);

}  // namespace ptmon

#endif  // PTMON_PARTITION_HPP_
