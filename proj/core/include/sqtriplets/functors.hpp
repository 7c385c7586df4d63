#pragma once

#include <map>
#include <vector>

#include "sqtriplets/freecomplex.hpp"
#include "sqtriplets/sqmodule.hpp"

namespace sqt {

/// Bounded complex of squarefree modules with degreewise matrices as maps.
/// maps(p)[R] sends X^p_R to X^{p+1}_R.
class SqModuleComplex {
 public:
  SqModuleComplex() = default;
  explicit SqModuleComplex(int n) : n_(n) {}

  int n() const { return n_; }
  bool empty() const { return terms_.empty(); }
  const std::map<int, SqModule>& terms() const { return terms_; }
  const SqModule& term(int p) const;
  bool has_term(int p) const { return terms_.count(p) != 0; }

  const std::vector<RatMatrix>& map(int p) const;
  bool has_map(int p) const { return maps_.count(p) != 0; }

  void set_term(int p, SqModule m);
  void set_map(int p, std::vector<RatMatrix> mats);

  /// Shape, module-homomorphism and composite-zero diagnostics.
  std::vector<std::string> validate() const;

 private:
  int n_ = 0;
  std::map<int, SqModule> terms_;
  std::map<int, std::vector<RatMatrix>> maps_;  // per degree mask
};

/// Minimal free squarefree resolution with its augmentation: the generators
/// at position 0 carry vectors in M at their degrees.
struct ResolvedModule {
  FreeSqComplex complex;        // positions -len .. 0
  std::vector<RatVector> aug;   // one vector per generator at position 0
};

ResolvedModule resolve_module_with_aug(const SqModule& m);

/// Minimal free squarefree resolution of a module, at positions <= 0.
FreeSqComplex resolve_module(const SqModule& m);

/// Termwise Alexander dual of a free complex: a free term with generator
/// degrees B becomes the module sum of the S/B, maps dualized degreewise,
/// positions negated.
SqModuleComplex alexander_termwise(const FreeSqComplex& f);

/// Minimal free complex quasi-isomorphic to X, assembled from the top
/// position by mapping cones over lifted chain maps, then minimalized.
/// Checks that the output has the homology dimension table of the input.
FreeSqComplex resolve_complex(const SqModuleComplex& x);

/// Homology dimension table of a module complex by direct kernel/image
/// computation per squarefree degree.
BettiTable module_complex_homology_dims(const SqModuleComplex& x);

/// The composite endofunctor: resolve_complex of the termwise Alexander
/// dual of the standard dual.  Output is minimal.
FreeSqComplex ad(const FreeSqComplex& f);

FreeSqComplex ad_iterate(const FreeSqComplex& f, int times);

/// Betti table of ad(f) computed from homology alone:
/// entry (i, R) = dim H^{i+|R|}_{R^c}(f).
BettiTable ad_betti_shortcut(const FreeSqComplex& f);

}  // namespace sqt
