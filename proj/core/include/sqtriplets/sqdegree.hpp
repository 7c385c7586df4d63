#pragma once

#include <bit>
#include <string>
#include <vector>

namespace sqt {

/// A squarefree multidegree: a subset of {1..n} stored as a bitmask,
/// bit v-1 set when variable v is a member.
struct SqDegree {
  int n = 0;
  unsigned mask = 0;

  int card() const { return std::popcount(mask); }
  unsigned full() const { return (1u << n) - 1u; }
  unsigned complement() const { return full() & ~mask; }
  bool contains(int v) const { return (mask >> (v - 1)) & 1u; }

  bool operator==(const SqDegree&) const = default;
};

inline unsigned mask_complement(unsigned mask, int n) {
  return ((1u << n) - 1u) & ~mask;
}

inline int mask_card(unsigned mask) { return std::popcount(mask); }

inline bool mask_subset(unsigned a, unsigned b) { return (a & ~b) == 0; }

/// Sorted members of a mask, as 1-based variable indices.
inline std::vector<int> mask_members(unsigned mask, int n) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if ((mask >> (v - 1)) & 1u) out.push_back(v);
  return out;
}

inline unsigned mask_of_members(const std::vector<int>& vars) {
  unsigned m = 0;
  for (int v : vars) m |= 1u << (v - 1);
  return m;
}

/// "13" for {1,3}, "" for the empty set (unambiguous for n <= 9).
inline std::string mask_key(unsigned mask, int n) {
  std::string s;
  for (int v = 1; v <= n; ++v)
    if ((mask >> (v - 1)) & 1u) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace sqt
