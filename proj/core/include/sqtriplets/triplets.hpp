#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sqtriplets/exact.hpp"

namespace sqt {

/// Degree triplet (n, A, B, C): the three singly graded degree sets of a
/// candidate triplet of pure complexes.
struct DegreeTriplet {
  int n = 0;
  std::set<int> a, b, c;

  bool operator==(const DegreeTriplet&) const = default;
  bool operator<(const DegreeTriplet& o) const;
};

/// Corner parameters and internal nondegree counts.  Satisfies
/// n = a + b + c + e with e = e_a + e_b + e_c.
struct TripletParams {
  int a = 0, b = 0, c = 0;
  int e_a = 0, e_b = 0, e_c = 0;
  int e() const { return e_a + e_b + e_c; }
};

/// Corner/endpoint/count validation; throws domain_error naming the failed
/// condition.
TripletParams derive_params(const DegreeTriplet& t);

struct BalanceReport {
  bool balanced = false;
  std::string violation;  // empty when balanced
};

/// Full balance check: derive_params conditions plus the corner-balancing
/// inequalities, reporting the first violation.
BalanceReport check_balanced(const DegreeTriplet& t);
bool is_balanced(const DegreeTriplet& t);

/// All balanced triplets of type n, in lexicographic (A, B, C) order.
/// Worker threads only affect wall time, never the result.
std::vector<DegreeTriplet> enumerate_balanced(int n, int threads = 1);

/// One reduction step removing internal nondegrees from side A.  Requires a
/// balanced triplet with an internal nondegree on A; otherwise throws a
/// domain_error instructing rotation of the sides.
DegreeTriplet reduce(const DegreeTriplet& t);

/// Rotated triplet (B, C, A), balanced exactly when t is.
DegreeTriplet rotate_sides(const DegreeTriplet& t);

/// The r x (r+1) system for the r+1 Betti numbers on side A (alternating
/// signs folded into the columns): rows for internal nondegrees of the
/// third complex, of the second complex, and for j = 0..a-1.
RatMatrix reduced_system(const DegreeTriplet& t);

/// The full system on the 3n+3 sign-adjusted unknowns: two transition
/// blocks plus one vanishing row per nondegree of each side.
RatMatrix full_system(const DegreeTriplet& t);

/// Exact solution data of the triplet systems.
struct BettiSolution {
  int nullity = 0;
  RatVector alpha_hat, beta_hat, gamma_hat;  // indexed 0..n
  IntVector alpha, beta, gamma;              // on the degree supports
  bool positive = false;       // all three vectors strictly positive
  bool supports_exact = false; // hats vanish off-support, nonzero on-support
  bool signs_consistent = false;  // hat signs follow the strand parity
};

/// Solves the reduced system; on nullity one, reconstructs the sign-adjusted
/// vectors (alpha_hat at degree a_i carries sign (-1)^{i+a_i}), propagates
/// through the transition matrix and strips signs on the supports.
BettiSolution solve_betti(const DegreeTriplet& t);

/// Herzog-Kuhl ray of a degree sequence: entries 1/prod |d_j - d_i|,
/// primitive-normalized.
IntVector herzog_kuhl(const std::vector<int>& degrees);

/// ASCII degree triangle: filled circle per degree, blank per nondegree,
/// corner labels a, b, c, plus one legend line per side.
std::string render_triangle(const DegreeTriplet& t);

/// Text format "n=3; A=0,2; B=0,2,3; C=1,2,3".
std::string triplet_to_string(const DegreeTriplet& t);
DegreeTriplet parse_triplet(const std::string& s);

}  // namespace sqt
