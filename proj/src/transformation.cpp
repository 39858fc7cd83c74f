#include "ptmon/transformation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "ptmon/error.hpp"
#include "ptmon/maps.hpp"

namespace ptmon {

PartTransformation::PartTransformation(Partition partition,
                                       std::vector<int> block_images,
                                       std::vector<std::vector<int>> block_maps)
    : partition_(std::move(partition)),
      fbar_(std::move(block_images)),
      blocks_(std::move(block_maps)) {
  std::size_t m = static_cast<std::size_t>(partition_.num_blocks());
  if (fbar_.size() != m || blocks_.size() != m) {
    throw std::invalid_argument(
        "PartTransformation: block data does not match the partition");
  }
  for (std::size_t i = 0; i < m; ++i) {
    int target = fbar_[i];
    if (target < 0 || target >= partition_.num_blocks()) {
      throw std::invalid_argument(
          "PartTransformation: block image out of range");
    }
    const auto& map = blocks_[i];
    if (static_cast<int>(map.size()) != partition_.size(static_cast<int>(i))) {
      throw std::invalid_argument(
          "PartTransformation: component map has wrong domain size");
    }
    for (int v : map) {
      if (v < 0 || v >= partition_.size(target)) {
        throw std::invalid_argument(
            "PartTransformation: component map value out of range");
      }
    }
  }
}

PartTransformation PartTransformation::identity(const Partition& p) {
  std::vector<int> fbar = identity_map(p.num_blocks());
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(p.num_blocks()));
  for (int i = 0; i < p.num_blocks(); ++i) {
    blocks.push_back(identity_map(p.size(i)));
  }
  return PartTransformation(p, std::move(fbar), std::move(blocks));
}

bool PartTransformation::is_identity() const {
  for (std::size_t i = 0; i < fbar_.size(); ++i) {
    if (fbar_[i] != static_cast<int>(i)) {
      return false;
    }
    const auto& map = blocks_[i];
    for (std::size_t x = 0; x < map.size(); ++x) {
      if (map[x] != static_cast<int>(x)) {
        return false;
      }
    }
  }
  return true;
}

std::strong_ordering operator<=>(const PartTransformation& lhs,
                                 const PartTransformation& rhs) {
  if (auto c = lhs.partition_.sizes() <=> rhs.partition_.sizes(); c != 0) {
    return c;
  }
  if (auto c = lhs.fbar_ <=> rhs.fbar_; c != 0) {
    return c;
  }
  return lhs.blocks_ <=> rhs.blocks_;
}

std::size_t TransformationHash::operator()(
    const PartTransformation& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  for (int v : t.block_images()) {
    mix(v);
  }
  for (int i = 0; i < t.partition().num_blocks(); ++i) {
    for (int v : t.block_map(i)) {
      mix(v);
    }
  }
  return h;
}

PartTransformation compose(const PartTransformation& f,
                           const PartTransformation& g) {
  if (!(f.partition() == g.partition())) {
    throw std::invalid_argument("compose: transformations over different partitions");
  }
  int m = f.partition().num_blocks();
  std::vector<int> fbar(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int mid = f.block_images()[static_cast<std::size_t>(i)];
    fbar[static_cast<std::size_t>(i)]
        = g.block_images()[static_cast<std::size_t>(mid)];
    const auto& first = f.block_map(i);
    const auto& second = g.block_map(mid);
    std::vector<int> map(first.size());
    for (std::size_t x = 0; x < first.size(); ++x) {
      map[x] = second[static_cast<std::size_t>(first[x])];
    }
    blocks[static_cast<std::size_t>(i)] = std::move(map);
  }
  return PartTransformation(f.partition(), std::move(fbar), std::move(blocks));
}

bool is_idempotent(const PartTransformation& f) {
  const auto& fbar = f.block_images();
  int m = f.partition().num_blocks();
  if (!is_idempotent_map(fbar)) {
    return false;
  }
  std::vector<bool> in_image(static_cast<std::size_t>(m), false);
  for (int v : fbar) {
    in_image[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 0; i < m; ++i) {
    if (in_image[static_cast<std::size_t>(i)]
        && !is_idempotent_map(f.block_map(i))) {
      return false;
    }
  }
  for (int i = 0; i < m; ++i) {
    if (in_image[static_cast<std::size_t>(i)]) {
      continue;
    }
    int target = fbar[static_cast<std::size_t>(i)];
    std::vector<bool> image_of_target(
        static_cast<std::size_t>(f.partition().size(
            fbar[static_cast<std::size_t>(target)])),
        false);
    for (int v : f.block_map(target)) {
      image_of_target[static_cast<std::size_t>(v)] = true;
    }
    for (int v : f.block_map(i)) {
      if (!image_of_target[static_cast<std::size_t>(v)]) {
        return false;
      }
    }
  }
  return true;
}

int image_size(const PartTransformation& f) {
  return image_size_of_map(to_flat(f).point_map(), f.partition().degree());
}

PartTransformation block_collapse(const Partition& p, int target, int source,
                                  const std::vector<int>& component) {
  if (target < 0 || target >= p.num_blocks() || source < 0
      || source >= p.num_blocks()) {
    throw std::out_of_range("block_collapse: block index out of range");
  }
  if (target == source) {
    throw std::invalid_argument("block_collapse: target and source must differ");
  }
  int src_size = p.size(source);
  int tgt_size = p.size(target);
  if (static_cast<int>(component.size()) != src_size) {
    throw std::invalid_argument("block_collapse: component has wrong domain size");
  }
  for (int v : component) {
    if (v < 0 || v >= tgt_size) {
      throw std::invalid_argument("block_collapse: component value out of range");
    }
  }
  if (src_size <= tgt_size && !is_injective(component, tgt_size)) {
    throw std::invalid_argument("block_collapse: component must be injective");
  }
  if (src_size >= tgt_size && !is_surjective(component, tgt_size)) {
    throw std::invalid_argument("block_collapse: component must be surjective");
  }
  std::vector<int> fbar = identity_map(p.num_blocks());
  fbar[static_cast<std::size_t>(source)] = target;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(p.num_blocks()));
  for (int i = 0; i < p.num_blocks(); ++i) {
    blocks.push_back(i == source ? component : identity_map(p.size(i)));
  }
  return PartTransformation(p, std::move(fbar), std::move(blocks));
}

PartTransformation embed_block_map(const Partition& p, int k,
                                   const std::vector<int>& map) {
  if (k < 0 || k >= p.num_blocks()) {
    throw std::out_of_range("embed_block_map: block index out of range");
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(p.num_blocks()));
  for (int i = 0; i < p.num_blocks(); ++i) {
    blocks.push_back(i == k ? map : identity_map(p.size(i)));
  }
  return PartTransformation(p, identity_map(p.num_blocks()),
                            std::move(blocks));
}

BigUint total_count(const Partition& p) {
  // Component choices are independent: block i picks an image block j and
  // one of size(j)^size(i) maps, so the total factorises per block.
  BigUint out{1};
  for (int i = 0; i < p.num_blocks(); ++i) {
    BigUint per_block;
    for (int j = 0; j < p.num_blocks(); ++j) {
      per_block += BigUint::pow(BigUint(static_cast<std::uint64_t>(p.size(j))),
                                static_cast<std::uint64_t>(p.size(i)));
    }
    out *= per_block;
  }
  return out;
}

void for_each_element(const Partition& p,
                      const std::function<void(const PartTransformation&)>& fn,
                      std::uint64_t max_elements) {
  BigUint count = total_count(p);
  if (count > BigUint(max_elements)) {
    throw BudgetExceeded("for_each_element: monoid has " + count.to_decimal()
                             + " elements, cap is "
                             + std::to_string(max_elements),
                         max_elements);
  }
  int m = p.num_blocks();
  if (m == 0) {
    fn(PartTransformation::identity(p));
    return;
  }
  std::vector<int> fbar(static_cast<std::size_t>(m), 0);
  while (true) {
    // All component maps for this block-image vector, odometer order.
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      blocks.emplace_back(static_cast<std::size_t>(p.size(i)), 0);
    }
    while (true) {
      fn(PartTransformation(p, fbar, blocks));
      int bi = m - 1;
      int xi = p.size(bi) - 1;
      bool done = true;
      while (bi >= 0) {
        int radix = p.size(fbar[static_cast<std::size_t>(bi)]);
        auto& digit = blocks[static_cast<std::size_t>(bi)][static_cast<std::size_t>(xi)];
        if (digit + 1 < radix) {
          ++digit;
          done = false;
          break;
        }
        digit = 0;
        --xi;
        if (xi < 0) {
          --bi;
          if (bi >= 0) {
            xi = p.size(bi) - 1;
          }
        }
      }
      if (done) {
        break;
      }
    }
    int pos = m - 1;
    while (pos >= 0 && fbar[static_cast<std::size_t>(pos)] == m - 1) {
      fbar[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      return;
    }
    ++fbar[static_cast<std::size_t>(pos)];
  }
}

std::vector<PartTransformation> enumerate_all(const Partition& p,
                                              std::uint64_t max_elements) {
  std::vector<PartTransformation> out;
  for_each_element(
      p, [&out](const PartTransformation& t) { out.push_back(t); },
      max_elements);
  return out;
}

FlatTransformation::FlatTransformation(Partition partition,
                                       std::vector<int> point_map)
    : partition_(std::move(partition)), map_(std::move(point_map)) {
  int n = partition_.degree();
  if (static_cast<int>(map_.size()) != n) {
    throw std::invalid_argument("FlatTransformation: wrong number of points");
  }
  for (int v : map_) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("FlatTransformation: point image out of range");
    }
  }
  for (int b = 0; b < partition_.num_blocks(); ++b) {
    int target = partition_.block_of(map_[static_cast<std::size_t>(partition_.offset(b))]);
    for (int x = 1; x < partition_.size(b); ++x) {
      int image = map_[static_cast<std::size_t>(partition_.offset(b) + x)];
      if (partition_.block_of(image) != target) {
        throw std::invalid_argument(
            "FlatTransformation: map does not preserve the partition");
      }
    }
  }
}

FlatTransformation to_flat(const PartTransformation& f) {
  const Partition& p = f.partition();
  std::vector<int> map(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.num_blocks(); ++i) {
    int target = f.block_images()[static_cast<std::size_t>(i)];
    const auto& component = f.block_map(i);
    for (int x = 0; x < p.size(i); ++x) {
      map[static_cast<std::size_t>(p.offset(i) + x)]
          = p.offset(target) + component[static_cast<std::size_t>(x)];
    }
  }
  return FlatTransformation(p, std::move(map));
}

PartTransformation from_flat(const FlatTransformation& f) {
  const Partition& p = f.partition();
  int m = p.num_blocks();
  std::vector<int> fbar(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int target = p.block_of(f.apply(p.offset(i)));
    fbar[static_cast<std::size_t>(i)] = target;
    std::vector<int> component(static_cast<std::size_t>(p.size(i)));
    for (int x = 0; x < p.size(i); ++x) {
      component[static_cast<std::size_t>(x)]
          = f.apply(p.offset(i) + x) - p.offset(target);
    }
    blocks[static_cast<std::size_t>(i)] = std::move(component);
  }
  return PartTransformation(p, std::move(fbar), std::move(blocks));
}

PartTransformation from_flat(const Partition& p, std::vector<int> point_map) {
  return from_flat(FlatTransformation(p, std::move(point_map)));
}

FlatTransformation compose(const FlatTransformation& f,
                           const FlatTransformation& g) {
  if (!(f.partition() == g.partition())) {
    throw std::invalid_argument("compose: transformations over different partitions");
  }
  std::vector<int> map(f.point_map().size());
  for (std::size_t x = 0; x < map.size(); ++x) {
    map[x] = g.apply(f.point_map()[x]);
  }
  return FlatTransformation(f.partition(), std::move(map));
}

KernelRelation KernelRelation::from_map(const std::vector<int>& map) {
  KernelRelation out;
  std::map<int, std::vector<int>> by_image;
  for (std::size_t x = 0; x < map.size(); ++x) {
    by_image[map[x]].push_back(static_cast<int>(x));
  }
  for (auto& [image, cls] : by_image) {
    out.classes_.push_back(std::move(cls));
  }
  std::sort(out.classes_.begin(), out.classes_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return out;
}

bool KernelRelation::is_trivial() const {
  return std::all_of(classes_.begin(), classes_.end(),
                     [](const std::vector<int>& cls) { return cls.size() == 1; });
}

bool KernelRelation::refines(const KernelRelation& other) const {
  int n = 0;
  for (const auto& cls : other.classes_) {
    n += static_cast<int>(cls.size());
  }
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < other.classes_.size(); ++c) {
    for (int x : other.classes_[c]) {
      class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
    }
  }
  for (const auto& cls : classes_) {
    int c = class_of[static_cast<std::size_t>(cls.front())];
    for (int x : cls) {
      if (class_of[static_cast<std::size_t>(x)] != c) {
        return false;
      }
    }
  }
  return true;
}

KernelRelation kernel(const PartTransformation& f) {
  return KernelRelation::from_map(to_flat(f).point_map());
}

}  // namespace ptmon
