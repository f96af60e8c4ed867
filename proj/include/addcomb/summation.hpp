#pragma once

#include <cstddef>
#include <span>

namespace addcomb {

// Pairwise (cascade) summation: error O(log n * eps) and a fixed reduction
// order, so repeated runs agree bit for bit.
template <typename T>
T pairwise_sum(std::span<const T> xs) {
  constexpr std::size_t kLeaf = 32;
  if (xs.size() <= kLeaf) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

template <typename T>
T pairwise_mean(std::span<const T> xs) {
  if (xs.empty()) return T{};
  return pairwise_sum(xs) / static_cast<double>(xs.size());
}

}  // namespace addcomb
