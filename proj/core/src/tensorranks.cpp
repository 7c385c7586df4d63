#include "sqtriplets/tensorranks.hpp"

#include "sqtriplets/error.hpp"
#include "sqtriplets/triplets.hpp"

namespace sqt {

PinchingWeights pinching_weights(const std::set<int>& a, int n) {
  if (a.empty()) throw domain_error("pinching_weights: empty degree set");
  if (*a.begin() < 0 || *a.rbegin() > n)
    throw domain_error("pinching_weights: degrees outside [0, n]");
  const int c = *a.begin();
  const int b = n - *a.rbegin();

  PinchingWeights p;
  p.u.push_back(-1);
  p.w.push_back(c + 1);
  int run_start = -1;
  for (int d = c; d <= n - b + 1; ++d) {
    const bool gap = d <= n - b && a.count(d) == 0;
    if (gap && run_start < 0) run_start = d;
    if (!gap && run_start >= 0) {
      p.u.push_back(run_start - 1);
      p.w.push_back(d - run_start + 1);
      run_start = -1;
    }
  }
  p.u.push_back(n - b);
  p.w.push_back(b + 1);
  return p;
}

Int term_rank(const PinchingWeights& p, int d, int n) {
  for (std::size_t i = 0; i < p.u.size(); ++i)
    if (d > p.u[i] && d < p.u[i] + p.w[i])
      throw domain_error("term_rank: d is a nondegree of the decomposition");
  Int result = binom(static_cast<long>(n), static_cast<long>(d));
  for (std::size_t i = 0; i < p.u.size(); ++i) {
    const long w = p.w[i];
    if (d <= p.u[i]) {
      const long k = p.u[i] - d;  // dim Sym^k of a w-dimensional space
      result *= binom(w - 1 + k, k);
    } else if (d >= p.u[i] + w) {
      const long k = d - p.u[i] - w;  // dim of the k-th divided power
      result *= binom(w - 1 + k, k);
    }
  }
  return result;
}

ConstructionBetti construction_betti(const std::set<int>& a, int n) {
  const PinchingWeights p = pinching_weights(a, n);
  ConstructionBetti out;
  for (int d : a) out.ranks.push_back(term_rank(p, d, n));

  const int c = *a.begin();
  const int b = n - *a.rbegin();
  const int e = (n - b - c + 1) - static_cast<int>(a.size());
  const int corner_a = n - b - c - e;
  DegreeTriplet t;
  t.n = n;
  t.a = a;
  for (int d = corner_a; d <= n - c; ++d) t.b.insert(d);
  for (int d = b; d <= n - corner_a; ++d) t.c.insert(d);

  const BettiSolution sol = solve_betti(t);
  const IntVector hk = herzog_kuhl(std::vector<int>(a.begin(), a.end()));
  out.concordant = sol.nullity == 1 && proportional(out.ranks, sol.alpha) &&
                   proportional(out.ranks, hk);
  return out;
}

}  // namespace sqt
