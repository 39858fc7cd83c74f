#ifndef PTMON_MAPS_HPP_
#define PTMON_MAPS_HPP_

#include <vector>

namespace ptmon {

// Utilities for plain maps [k] -> [l], represented as vectors of 0-based
// image points: map[x] is the image of x.

std::vector<int> identity_map(int k);
std::vector<int> constant_map(int k, int value);

// The idempotent of T_k sending y to x and fixing everything else.
std::vector<int> point_collapse_map(int k, int x, int y);

bool is_injective(const std::vector<int>& map, int codomain);
bool is_surjective(const std::vector<int>& map, int codomain);
bool is_permutation(const std::vector<int>& map);
bool is_idempotent_map(const std::vector<int>& map);

int image_size_of_map(const std::vector<int>& map, int codomain);

// Enumeration in lexicographic order of the image vectors.
std::vector<std::vector<int>> all_permutations(int k);
std::vector<std::vector<int>> all_injections(int k, int l);
std::vector<std::vector<int>> all_surjections(int k, int l);

}  // namespace ptmon

#endif  // PTMON_MAPS_HPP_
