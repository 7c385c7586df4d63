#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sqtriplets/betti.hpp"
#include "sqtriplets/exact.hpp"
#include "sqtriplets/sqdegree.hpp"
#include "sqtriplets/sqmodule.hpp"

namespace sqt {

/// Free generator: its squarefree multidegree.  The cohomological position
/// is the key of the term holding it.
struct Generator {
  unsigned mask = 0;
  bool operator==(const Generator&) const = default;
};

/// Bounded complex of free squarefree modules.  The differential at p maps
/// term p to term p+1; its matrix holds scalar coefficients only, the
/// monomial on the entry (source g -> target h) being implied by the degree
/// difference x^{deg g \ deg h}.  A nonzero entry requires deg g to contain
/// deg h.
class FreeSqComplex {
 public:
  FreeSqComplex() = default;
  explicit FreeSqComplex(int n) : n_(n) {}

  int n() const { return n_; }
  bool empty() const { return terms_.empty(); }
  int min_pos() const;
  int max_pos() const;

  const std::map<int, std::vector<Generator>>& terms() const { return terms_; }
  const std::vector<Generator>& term(int p) const;
  const RatMatrix& diff(int p) const;
  bool has_term(int p) const { return terms_.count(p) != 0; }
  bool has_diff(int p) const { return diffs_.count(p) != 0; }

  void set_term(int p, std::vector<Generator> gens);
  void set_diff(int p, RatMatrix m);

  /// Drops empty terms and differentials touching them.
  void prune();

  long generator_count() const;

  bool operator==(const FreeSqComplex&) const = default;

 private:
  int n_ = 0;
  std::map<int, std::vector<Generator>> terms_;
  std::map<int, RatMatrix> diffs_;
};

/// Homogeneity, shape and d^2 = 0 diagnostics; empty means valid.
std::vector<std::string> validate(const FreeSqComplex& f);

/// The complex of vector spaces F_R: per position, the generators of degree
/// contained in R, with the scalar submatrices as differentials.
struct EvaluatedComplex {
  std::map<int, std::vector<std::size_t>> basis;  // indices into term(p)
  std::map<int, RatMatrix> maps;                  // position p -> p+1
};
EvaluatedComplex evaluate_at(const FreeSqComplex& f, unsigned mask);

/// Homology modules with induced multiplication maps, from echelon-canonical
/// cycle representatives.  Zero modules are omitted.
std::map<int, SqModule> homology(const FreeSqComplex& f);

/// Dimension table of a homology map: (i, R) -> dim H^i_R.
BettiTable homology_table(const std::map<int, SqModule>& h);

/// Standard duality Hom(-, S(-1)): generator (B, p) goes to (B^c, -p); the
/// map leaving position -p-1 is (-1)^p times the transpose of the map
/// entering position p+1.
FreeSqComplex dualize(const FreeSqComplex& f);

/// Cohomology table C^i_R = dim H^{-i}(dual)_{R^c}.
BettiTable cohomology(const FreeSqComplex& f);

/// Generator table (position, degree) -> multiplicity.
BettiTable generator_table(const FreeSqComplex& f);

struct InvariantTables {
  BettiTable b;  // generators of the minimalized complex
  BettiTable h;  // homology dimensions
  BettiTable c;  // cohomology dimensions
};
InvariantTables invariants(const FreeSqComplex& f);

/// Cancels same-degree unit entries by Gaussian elimination until none
/// remain; pivots scanned by ascending position, then row, then column.
FreeSqComplex minimalize(FreeSqComplex f);

bool is_minimal(const FreeSqComplex& f);

/// Strand decomposition of a minimal complex: generator (R, p) belongs to
/// strand p + |R|.  Throws domain_error on non-minimal input.
std::map<int, BettiTable> strands(const FreeSqComplex& f);

/// Purity and linearity of a minimal complex viewed singly graded.
struct SinglyGradedProfile {
  std::map<int, std::set<int>> degrees;  // position -> total degrees present
  std::vector<int> degree_sequence;      // ascending; populated when pure
  bool is_pure = false;
  bool is_linear = false;
};
SinglyGradedProfile singly_graded_profile(const FreeSqComplex& f);

/// One-line summary like "S^2 <- S(-2)^3 <- S(-3)" (descending positions).
std::string singly_graded_summary(const FreeSqComplex& f);

/// The translate F[k]: positions shift down by k, differentials unchanged.
FreeSqComplex translate(const FreeSqComplex& f, int k);

/// The complex L(M): for each R a block of copies of M_R placed in degree
/// R^c at position |R|, with differential entries
/// (-1)^{#{i in R : i < j}} times the x_j multiplication coefficients.
FreeSqComplex ell_complex(const SqModule& m);

}  // namespace sqt
