#pragma once

// Ground subsets as 64-bit masks, plus k-subset enumeration and ranking.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dichromate/errors.hpp"

namespace dichromate {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;

inline Mask bit(std::size_t e) { return Mask{1} << e; }
inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }
inline bool contains(Mask m, std::size_t e) { return (m >> e) & 1U; }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<std::size_t> elements_of(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<std::size_t>& elements) {
  Mask m = 0;
  for (auto e : elements) m |= bit(e);
  return m;
}

std::uint64_t binomial(std::size_t n, std::size_t k);

// Colex rank of a k-subset among all k-subsets of {0..n-1}; dense in
// [0, binomial(n, k)).
std::uint64_t subset_rank(Mask m);

/// Calls f(mask) for every k-subset of {0..n-1}, in increasing mask order
/// (which is colex order).
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (n > kMaxGround) throw ResourceError("ground set larger than 64 elements");
  if (k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  const Mask limit = full_mask(n);
  Mask m = full_mask(k);
  while (true) {
    f(m);
    if (m == (limit & ~(full_mask(n - k)))) break;
    // Gosper's hack.
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

}  // namespace dichromate
