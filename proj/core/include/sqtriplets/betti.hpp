#pragma once

#include <map>
#include <string>
#include <utility>

namespace sqt {

/// Finitely supported table of dimensions indexed by (cohomological
/// position, squarefree multidegree).  Also used for homology and
/// cohomology tables.
class BettiTable {
 public:
  using Key = std::pair<int, unsigned>;  // (position, degree mask)

  void add(int pos, unsigned mask, long v);
  long get(int pos, unsigned mask) const;
  bool empty() const { return entries_.empty(); }
  const std::map<Key, long>& entries() const { return entries_; }

  /// Collapses multidegrees to total degrees: (position, |R|) -> dim.
  std::map<std::pair<int, int>, long> singly_graded() const;

  /// The table of the translated complex F[k] (positions shift down by k).
  BettiTable translated(int k) const;

  long total() const;

  bool operator==(const BettiTable&) const = default;

  std::string to_string(int n) const;

 private:
  std::map<Key, long> entries_;
};

}  // namespace sqt
