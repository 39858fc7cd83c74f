#ifndef PTMON_TESTS_TEST_UTIL_HPP_
#define PTMON_TESTS_TEST_UTIL_HPP_

#include <vector>

#include "ptmon/partition.hpp"

namespace ptmon::test {

// All integer partitions of n, each non-increasing.
inline std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// All partitions with 1 <= degree <= max_n.
inline std::vector<Partition> partitions_up_to(int max_n) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& shape : integer_partitions(n)) {
      out.emplace_back(shape);
    }
  }
  return out;
}

// Counts strongly connected tournaments on n labelled vertices by checking
// every orientation of the complete graph directly.
inline int brute_force_strong_tournaments(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      pairs.emplace_back(a, b);
    }
  }
  int count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    std::vector<std::vector<bool>> adj(
        static_cast<std::size_t>(n),
        std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      auto [a, b] = pairs[e];
      if (mask & (std::uint64_t{1} << e)) {
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
      } else {
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
      }
    }
    auto reaches_all = [&](bool reverse) {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      std::vector<int> stack{0};
      seen[0] = true;
      int visited = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
          bool edge = reverse
                          ? adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]
                          : adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
          if (edge && !seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            ++visited;
            stack.push_back(w);
          }
        }
      }
      return visited == n;
    };
    if (n == 0 || (reaches_all(false) && reaches_all(true))) {
      ++count;
    }
  }
  return count;
}

}  // namespace ptmon::test

#endif  // PTMON_TESTS_TEST_UTIL_HPP_
