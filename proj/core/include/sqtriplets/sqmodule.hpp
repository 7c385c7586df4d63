#pragma once

#include <vector>

#include "sqtriplets/betti.hpp"
#include "sqtriplets/exact.hpp"
#include "sqtriplets/sqdegree.hpp"

namespace sqt {

/// Finite data of a squarefree module: one vector space dimension per subset
/// R of {1..n} plus the multiplication maps x_v : M_R -> M_{R+v}.  Each M_R
/// carries a fixed ordered basis; all maps are matrices in these bases.
class SqModule {
 public:
  SqModule() = default;
  explicit SqModule(int n);

  int n() const { return n_; }
  unsigned degree_count() const { return 1u << n_; }

  long dim(unsigned mask) const { return dims_[mask]; }
  void set_dim(unsigned mask, long d);

  /// Multiplication by x_v from degree R (v not in R); shape
  /// dim(R + v) x dim(R).  Unset maps with a zero-dimensional end come back
  /// correctly shaped.
  RatMatrix mult(int v, unsigned mask) const;
  void set_mult(int v, unsigned mask, RatMatrix m);

  /// Composite multiplication along from -> to (from a subset of to),
  /// applying variables in ascending order.
  RatMatrix mult_path(unsigned from, unsigned to) const;

  bool is_zero() const;
  long total_dim() const;

  /// Shape and commuting-square diagnostics; empty when valid.
  std::vector<std::string> validate() const;

  /// Equality of the module data: dimensions and the shape-corrected
  /// multiplication maps.
  bool operator==(const SqModule& o) const;

 private:
  int n_ = 0;
  std::vector<long> dims_;
  std::vector<RatMatrix> mult_;  // index mask * n + (v-1)
};

/// The module (S/A)(-B) for a partition A, B, C of {1..n}: dimension 1
/// exactly in the degrees R with B inside R and R disjoint from A.
SqModule standard_module(int n, unsigned a_mask, unsigned b_mask,
                         unsigned c_mask);

/// Degreewise dual: N_R = (M_{R^c})^*, multiplication maps transposed.
SqModule alexander_dual_module(const SqModule& m);

/// Dimension of the degree-d squarefree part of S(-b): C(n-|b|, d-|b|).
Int squarefree_part_dim(const SqDegree& b, int d, int n);

/// Betti spaces dim Tor_i(M, k)_R from Koszul homology, recorded at
/// position -i.
BettiTable tor_betti(const SqModule& m);

}  // namespace sqt
