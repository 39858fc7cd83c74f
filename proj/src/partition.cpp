#include "ptmon/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ptmon {

Partition::Partition() : Partition(std::vector<int>{}) {}

Partition::Partition(std::vector<int> block_sizes) {
  for (int s : block_sizes) {
    if (s <= 0) {
      throw std::invalid_argument("Partition: block sizes must be positive");
    }
  }
  std::sort(block_sizes.begin(), block_sizes.end(), std::greater<int>());
  auto data = std::make_shared<Data>();
  data->sizes = std::move(block_sizes);
  data->offsets.reserve(data->sizes.size());
  for (int s : data->sizes) {
    data->offsets.push_back(data->total);
    data->total += s;
  }
  data->block_of.resize(static_cast<std::size_t>(data->total));
  for (std::size_t i = 0; i < data->sizes.size(); ++i) {
    for (int j = 0; j < data->sizes[i]; ++j) {
      data->block_of[static_cast<std::size_t>(data->offsets[i] + j)]
          = static_cast<int>(i);
    }
  }
  data_ = std::move(data);
}

bool Partition::uniform() const noexcept {
  const auto& s = data_->sizes;
  return s.empty() || s.front() == s.back();
}

Profile profile(const Partition& p) {
  Profile out;
  int n = p.degree();
  out.blocks_of_size.resize(static_cast<std::size_t>(n) + 1);
  out.mu.assign(static_cast<std::size_t>(n) + 1, 0);
  out.smaller_sizes.resize(static_cast<std::size_t>(n) + 1);
  out.nu.assign(static_cast<std::size_t>(n) + 1, 0);

  for (int b = 0; b < p.num_blocks(); ++b) {
    int s = p.size(b);
    out.blocks_of_size[static_cast<std::size_t>(s)].push_back(b);
    ++out.mu[static_cast<std::size_t>(s)];
  }
  for (int i = 1; i <= n; ++i) {
    if (out.mu[static_cast<std::size_t>(i)] != 0) {
      out.occurring_sizes.push_back(i);
    }
    for (int j = 1; j < i; ++j) {
      if (out.mu[static_cast<std::size_t>(j)] != 0) {
        out.smaller_sizes[static_cast<std::size_t>(i)].push_back(j);
      }
    }
    out.nu[static_cast<std::size_t>(i)]
        = static_cast<int>(out.smaller_sizes[static_cast<std::size_t>(i)].size());
  }
  return out;
}

}  // namespace ptmon
