#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace liesplit {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// Set bit positions in increasing order.
inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline int highest_bit(Mask m) { return 63 - std::countl_zero(m); }

/// Sign of X_a ∧ X_b relative to X_{a|b} (both ordered increasingly), or 0
/// when the masks overlap.
inline int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Total order on masks used for every basis enumeration: popcount first,
/// then numeric value.
struct MaskOrder {
  bool operator()(Mask a, Mask b) const {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  }
};

/// All masks over `width` bits in MaskOrder.
inline std::vector<Mask> ordered_masks(int width) {
  std::vector<Mask> out;
  for (int p = 0; p <= width; ++p) {
    // Gosper's hack over p-subsets.
    if (p == 0) {
      out.push_back(0);
      continue;
    }
    Mask m = (Mask(1) << p) - 1;
    const Mask limit = width == 64 ? 0 : (Mask(1) << width);
    while (width == 64 || m < limit) {
      out.push_back(m);
      Mask c = m & (~m + 1);
      Mask r = m + c;
      if (r == 0) break;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return out;
}

}  // namespace liesplit
