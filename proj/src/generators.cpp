#include "ptmon/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ptmon/maps.hpp"

namespace ptmon {

ElementSet full_idempotent_generators(const Partition& p) {
  std::vector<PartTransformation> gens;
  for (int k = 0; k < p.num_blocks(); ++k) {
    for (int x = 0; x < p.size(k); ++x) {
      for (int y = 0; y < p.size(k); ++y) {
        if (x != y) {
          gens.push_back(embed_block_map(p, k, point_collapse_map(p.size(k), x, y)));
        }
      }
    }
  }
  for (int i = 0; i < p.num_blocks(); ++i) {
    for (int j = 0; j < p.num_blocks(); ++j) {
      if (i == j) {
        continue;
      }
      const auto components
          = p.size(j) <= p.size(i)
                ? all_injections(p.size(j), p.size(i))
                : all_surjections(p.size(j), p.size(i));
      for (const auto& f : components) {
        gens.push_back(block_collapse(p, i, j, f));
      }
    }
  }
  return ElementSet(p, std::move(gens));
}

namespace {

// Point collapses of one block realising a minimal generating set of the
// non-invertible part of the full transformation monoid on `size` points.
// For size >= 3 one collapse is chosen per point pair so that the directed
// graph of collapses is a strongly connected tournament (forward along
// consecutive points, backward otherwise); for size 2 both collapses are
// needed.
std::vector<std::vector<int>> block_migs_maps(int size) {
  std::vector<std::vector<int>> out;
  if (size == 2) {
    out.push_back(point_collapse_map(2, 0, 1));
    out.push_back(point_collapse_map(2, 1, 0));
    return out;
  }
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (b == a + 1) {
        out.push_back(point_collapse_map(size, b, a));
      } else {
        out.push_back(point_collapse_map(size, a, b));
      }
    }
  }
  return out;
}

}  // namespace

Partition class_partition(const Partition& p, int size) {
  Profile prof = profile(p);
  int mu = prof.mu[static_cast<std::size_t>(size)];
  return Partition(std::vector<int>(static_cast<std::size_t>(mu), size));
}

PartTransformation embed_class_element(const Partition& p,
                                       const std::vector<int>& class_blocks,
                                       const PartTransformation& element) {
  std::vector<int> fbar = identity_map(p.num_blocks());
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(p.num_blocks()));
  for (int i = 0; i < p.num_blocks(); ++i) {
    blocks.push_back(identity_map(p.size(i)));
  }
  for (std::size_t t = 0; t < class_blocks.size(); ++t) {
    int host = class_blocks[t];
    int target_pos = element.block_images()[t];
    fbar[static_cast<std::size_t>(host)]
        = class_blocks[static_cast<std::size_t>(target_pos)];
    blocks[static_cast<std::size_t>(host)] = element.block_map(static_cast<int>(t));
  }
  return PartTransformation(p, std::move(fbar), std::move(blocks));
}

std::vector<PartTransformation> canonical_class_migs(const Partition& p,
                                                     int size) {
  Profile prof = profile(p);
  const std::vector<int>& blocks = prof.blocks_of_size[static_cast<std::size_t>(size)];
  int mu = static_cast<int>(blocks.size());
  std::vector<PartTransformation> out;
  for (int k : blocks) {
    for (const auto& map : block_migs_maps(size)) {
      out.push_back(embed_block_map(p, k, map));
    }
  }
  if (mu == 2) {
    int b1 = blocks[0];
    int b2 = blocks[1];
    if (size == 1) {
      // A single map cannot cover both directions; both collapses are needed.
      out.push_back(block_collapse(p, b1, b2, {0}));
      out.push_back(block_collapse(p, b2, b1, {0}));
    } else {
      // Split the permutation components across the two directions, both
      // non-empty: the identity goes one way, everything else the other.
      for (const auto& f : all_permutations(size)) {
        if (f == identity_map(size)) {
          out.push_back(block_collapse(p, b2, b1, f));
        } else {
          out.push_back(block_collapse(p, b1, b2, f));
        }
      }
    }
  } else if (mu >= 3) {
    // One direction per block pair, strongly connected as for the points.
    for (int a = 0; a < mu; ++a) {
      for (int b = a + 1; b < mu; ++b) {
        int target = (b == a + 1) ? blocks[static_cast<std::size_t>(b)]
                                  : blocks[static_cast<std::size_t>(a)];
        int source = (b == a + 1) ? blocks[static_cast<std::size_t>(a)]
                                  : blocks[static_cast<std::size_t>(b)];
        for (const auto& f : all_permutations(size)) {
          out.push_back(block_collapse(p, target, source, f));
        }
      }
    }
  }
  return out;
}

GeneratingSetSpec default_spec(const Partition& p) {
  GeneratingSetSpec spec;
  Profile prof = profile(p);
  for (int q : prof.occurring_sizes) {
    spec.class_generators.emplace(q, ElementSet(p, canonical_class_migs(p, q)));
  }
  for (int i = 0; i < p.num_blocks(); ++i) {
    for (int s : prof.smaller_sizes[static_cast<std::size_t>(p.size(i))]) {
      int rep = prof.blocks_of_size[static_cast<std::size_t>(s)].back();
      std::vector<int> f(static_cast<std::size_t>(p.size(i)));
      for (int x = 0; x < p.size(i); ++x) {
        f[static_cast<std::size_t>(x)] = std::min(x, s - 1);
      }
      spec.collapses.emplace(std::make_pair(i, rep), std::move(f));
    }
  }
  return spec;
}

namespace {

void validate_spec(const Partition& p, const GeneratingSetSpec& spec) {
  Profile prof = profile(p);
  std::vector<int> occurring = prof.occurring_sizes;
  std::vector<int> keys;
  for (const auto& [q, gens] : spec.class_generators) {
    keys.push_back(q);
    for (const auto& g : gens) {
      if (!(g.partition() == p)) {
        throw std::invalid_argument("spec: class generator over wrong partition");
      }
      if (!is_idempotent(g)) {
        throw std::invalid_argument("spec: class generator is not idempotent");
      }
      // Must act inside its size class only.
      for (int b = 0; b < p.num_blocks(); ++b) {
        int image = g.block_images()[static_cast<std::size_t>(b)];
        bool inside = p.size(b) == q;
        if (!inside && (image != b || g.block_map(b) != identity_map(p.size(b)))) {
          throw std::invalid_argument("spec: class generator moves other sizes");
        }
        if (inside && p.size(image) != q) {
          throw std::invalid_argument("spec: class generator leaves its class");
        }
      }
    }
  }
  if (keys != occurring) {
    throw std::invalid_argument("spec: class generators must cover exactly the occurring sizes");
  }
  // Per block: one representative of each smaller occurring size.
  std::vector<std::vector<int>> seen(static_cast<std::size_t>(p.num_blocks()));
  for (const auto& [key, f] : spec.collapses) {
    auto [i, j] = key;
    if (i < 0 || i >= p.num_blocks() || j < 0 || j >= p.num_blocks()
        || p.size(j) >= p.size(i)) {
      throw std::invalid_argument("spec: collapse must target a strictly smaller block");
    }
    if (static_cast<int>(f.size()) != p.size(i)
        || *std::max_element(f.begin(), f.end()) >= p.size(j)
        || *std::min_element(f.begin(), f.end()) < 0
        || !is_surjective(f, p.size(j))) {
      throw std::invalid_argument("spec: collapse component must be surjective");
    }
    seen[static_cast<std::size_t>(i)].push_back(p.size(j));
  }
  for (int i = 0; i < p.num_blocks(); ++i) {
    auto sizes = seen[static_cast<std::size_t>(i)];
    std::sort(sizes.begin(), sizes.end());
    if (sizes != prof.smaller_sizes[static_cast<std::size_t>(p.size(i))]) {
      throw std::invalid_argument(
          "spec: block " + std::to_string(i + 1)
          + " needs exactly one representative per smaller occurring size");
    }
  }
}

}  // namespace

ElementSet minimal_generating_set(const Partition& p,
                                  const GeneratingSetSpec& spec) {
  validate_spec(p, spec);
  std::vector<PartTransformation> gens;
  for (const auto& [q, class_gens] : spec.class_generators) {
    for (const auto& g : class_gens) {
      gens.push_back(g);
    }
  }
  // All injective collapses of a smaller block into a strictly larger one.
  for (int i = 0; i < p.num_blocks(); ++i) {
    for (int j = i + 1; j < p.num_blocks(); ++j) {
      if (p.size(i) > p.size(j)) {
        for (const auto& f : all_injections(p.size(j), p.size(i))) {
          gens.push_back(block_collapse(p, i, j, f));
        }
      }
    }
  }
  // The chosen surjective collapses onto smaller representatives.
  for (const auto& [key, f] : spec.collapses) {
    auto [i, j] = key;
    gens.push_back(block_collapse(p, j, i, f));
  }
  return ElementSet(p, std::move(gens));
}

ElementSet rank_generating_set(const Partition& p) {
  ElementSet base = minimal_generating_set(p, default_spec(p));
  Profile prof = profile(p);
  if (p.uniform() || prof.mu[1] != 2) {
    return base;
  }
  // Two blocks of size 1 (the last two): trade the third idempotent linking
  // them to the rest for a single non-idempotent product.
  int m = p.num_blocks();
  PartTransformation f = block_collapse(p, m - 2, m - 1, {0});
  PartTransformation g = block_collapse(p, m - 1, m - 2, {0});
  PartTransformation e = block_collapse(p, 0, m - 1, {0});
  PartTransformation eg = compose(e, g);
  std::vector<PartTransformation> gens;
  for (const auto& t : base) {
    if (!(t == e) && !(t == g)) {
      gens.push_back(t);
    }
  }
  if (static_cast<int>(gens.size()) != base.size() - 2) {
    throw std::logic_error("rank_generating_set: expected elements missing");
  }
  gens.push_back(eg);
  return ElementSet(p, std::move(gens));
}

PartTransformation evaluate_word(const ElementSet& generators,
                                 const GeneratorWord& word) {
  PartTransformation out = PartTransformation::identity(generators.partition());
  for (int index : word.letters) {
    if (index < 0 || index >= generators.size()) {
      throw std::out_of_range("evaluate_word: letter index out of range");
    }
    out = compose(out, generators[index]);
  }
  return out;
}

namespace {

// An idempotent of T_k as a product of point collapses: one letter per
// non-image point, sending it to its image.
std::vector<std::vector<int>> greedy_idempotent_letters(
    const std::vector<int>& map) {
  int k = static_cast<int>(map.size());
  std::vector<bool> in_image(static_cast<std::size_t>(k), false);
  for (int v : map) {
    in_image[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::vector<int>> out;
  for (int y = 0; y < k; ++y) {
    if (!in_image[static_cast<std::size_t>(y)]) {
      out.push_back(point_collapse_map(k, map[static_cast<std::size_t>(y)], y));
    }
  }
  return out;
}

// The idempotent with the same kernel as `map`, fixing each class minimum.
std::vector<int> min_class_idempotent(const std::vector<int>& map,
                                      int codomain) {
  std::vector<int> first(static_cast<std::size_t>(codomain), -1);
  int k = static_cast<int>(map.size());
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int x = 0; x < k; ++x) {
    int v = map[static_cast<std::size_t>(x)];
    if (first[static_cast<std::size_t>(v)] < 0) {
      first[static_cast<std::size_t>(v)] = x;
    }
    out[static_cast<std::size_t>(x)] = first[static_cast<std::size_t>(v)];
  }
  return out;
}

// Extends the partial transfer map induced by `component` on the fixed
// points of `flattener` to a full injective or surjective map, assigning
// the smallest available values to the remaining points in order.
std::vector<int> extend_transfer_map(const std::vector<int>& flattener,
                                     const std::vector<int>& component,
                                     int codomain) {
  int k = static_cast<int>(component.size());
  std::vector<int> h(static_cast<std::size_t>(k), -1);
  std::vector<bool> used(static_cast<std::size_t>(codomain), false);
  for (int x = 0; x < k; ++x) {
    if (flattener[static_cast<std::size_t>(x)] == x) {
      h[static_cast<std::size_t>(x)] = component[static_cast<std::size_t>(x)];
      used[static_cast<std::size_t>(component[static_cast<std::size_t>(x)])] = true;
    }
  }
  if (k <= codomain) {
    int next = 0;
    for (int x = 0; x < k; ++x) {
      if (h[static_cast<std::size_t>(x)] >= 0) {
        continue;
      }
      while (used[static_cast<std::size_t>(next)]) {
        ++next;
      }
      h[static_cast<std::size_t>(x)] = next;
      used[static_cast<std::size_t>(next)] = true;
    }
  } else {
    std::vector<int> missing;
    for (int v = 0; v < codomain; ++v) {
      if (!used[static_cast<std::size_t>(v)]) {
        missing.push_back(v);
      }
    }
    std::size_t next_missing = 0;
    for (int x = 0; x < k; ++x) {
      if (h[static_cast<std::size_t>(x)] >= 0) {
        continue;
      }
      h[static_cast<std::size_t>(x)] = next_missing < missing.size()
                                           ? missing[next_missing++]
                                           : 0;
    }
  }
  return h;
}

}  // namespace

GeneratorWord factorize_idempotent(const PartTransformation& f) {
  if (!is_idempotent(f)) {
    throw std::invalid_argument("factorize_idempotent: input is not idempotent");
  }
  const Partition& p = f.partition();
  ElementSet gens = full_idempotent_generators(p);
  GeneratorWord word;
  int direct = gens.index_of(f);
  if (direct >= 0) {
    word.letters.push_back(direct);
    return word;
  }

  auto push = [&word, &gens](const PartTransformation& letter) {
    int index = gens.index_of(letter);
    if (index < 0) {
      throw std::logic_error("factorize_idempotent: letter is not a generator");
    }
    word.letters.push_back(index);
  };

  KernelRelation block_kernel = KernelRelation::from_map(f.block_images());
  for (const auto& cls : block_kernel.classes()) {
    int image_block = f.block_images()[static_cast<std::size_t>(cls.front())];
    std::vector<int> others;
    for (int b : cls) {
      if (b != image_block) {
        others.push_back(b);
      }
    }
    std::vector<std::vector<int>> flatteners;
    for (int b : others) {
      std::vector<int> e
          = min_class_idempotent(f.block_map(b), p.size(image_block));
      for (const auto& letter : greedy_idempotent_letters(e)) {
        push(embed_block_map(p, b, letter));
      }
      flatteners.push_back(std::move(e));
    }
    for (const auto& letter : greedy_idempotent_letters(f.block_map(image_block))) {
      push(embed_block_map(p, image_block, letter));
    }
    for (std::size_t t = 0; t < others.size(); ++t) {
      std::vector<int> h = extend_transfer_map(
          flatteners[t], f.block_map(others[t]), p.size(image_block));
      push(block_collapse(p, image_block, others[t], h));
    }
  }
  return word;
}

}  // namespace ptmon
