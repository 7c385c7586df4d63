#pragma once

#include <set>
#include <vector>

#include "sqtriplets/exact.hpp"

namespace sqt {

/// Interval decomposition of the complement of a one-sided degree set A in
/// [0, n]: intervals [u_i + 1, u_i + w_i - 1] with boundary pseudo-intervals
/// u_0 = -1, w_0 = c+1 and u_last = n-b, w_last = b+1.
struct PinchingWeights {
  std::vector<int> u;
  std::vector<int> w;
};

PinchingWeights pinching_weights(const std::set<int>& a, int n);

/// Rank of the degree-d term of the associated equivariant complex:
/// C(n,d) times a symmetric-power factor per interval above d and a
/// divided-power factor per interval below.  d must be a degree of A.
Int term_rank(const PinchingWeights& p, int d, int n);

struct ConstructionBetti {
  IntVector ranks;        // term_rank over the degrees of A, ascending
  bool concordant = false;  // proportional to the solver and Herzog-Kuhl rays
};

/// Term ranks over A, flagged against solve_betti of the one-sided triplet
/// (A, [a, n-c], [b, n-a]) and against herzog_kuhl(A).
ConstructionBetti construction_betti(const std::set<int>& a, int n);

}  // namespace sqt
