#include "ptmon/maps.hpp"

#include <algorithm>
#include <numeric>

namespace ptmon {

std::vector<int> identity_map(int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<int> constant_map(int k, int value) {
  return std::vector<int>(static_cast<std::size_t>(k), value);
}

std::vector<int> point_collapse_map(int k, int x, int y) {
  std::vector<int> out = identity_map(k);
  out[static_cast<std::size_t>(y)] = x;
  return out;
}

bool is_injective(const std::vector<int>& map, int codomain) {
  std::vector<bool> seen(static_cast<std::size_t>(codomain), false);
  for (int v : map) {
    if (seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool is_surjective(const std::vector<int>& map, int codomain) {
  return image_size_of_map(map, codomain) == codomain;
}

bool is_permutation(const std::vector<int>& map) {
  return is_injective(map, static_cast<int>(map.size()));
}

bool is_idempotent_map(const std::vector<int>& map) {
  for (int v : map) {
    if (map[static_cast<std::size_t>(v)] != v) {
      return false;
    }
  }
  return true;
}

int image_size_of_map(const std::vector<int>& map, int codomain) {
  std::vector<bool> seen(static_cast<std::size_t>(codomain), false);
  int count = 0;
  for (int v : map) {
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      ++count;
    }
  }
  return count;
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur = identity_map(k);
  do {
    out.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

namespace {

// Odometer over all maps [k] -> [l], calling fn for each.
template <typename Fn>
void for_each_map(int k, int l, Fn fn) {
  if (l == 0 && k > 0) {
    return;
  }
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  while (true) {
    fn(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == l - 1) {
      cur[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      return;
    }
    ++cur[static_cast<std::size_t>(pos)];
  }
}

}  // namespace

std::vector<std::vector<int>> all_injections(int k, int l) {
  std::vector<std::vector<int>> out;
  if (k > l) {
    return out;
  }
  for_each_map(k, l, [&](const std::vector<int>& m) {
    if (is_injective(m, l)) {
      out.push_back(m);
    }
  });
  return out;
}

std::vector<std::vector<int>> all_surjections(int k, int l) {
  std::vector<std::vector<int>> out;
  if (l > k) {
    return out;
  }
  for_each_map(k, l, [&](const std::vector<int>& m) {
    if (is_surjective(m, l)) {
      out.push_back(m);
    }
  });
  return out;
}

}  // namespace ptmon
