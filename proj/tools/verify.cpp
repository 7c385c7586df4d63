#include "verify.hpp"

#include <array>
#include <iostream>
#include <map>
#include <vector>

#include "sqtriplets/freecomplex.hpp"
#include "sqtriplets/functors.hpp"
#include "sqtriplets/sqmodule.hpp"
#include "sqtriplets/tensorranks.hpp"
#include "sqtriplets/triplets.hpp"

namespace sqtcli {

namespace {

using namespace sqt;

FreeSqComplex example_complex() {
  FreeSqComplex f(3);
  f.set_term(0, {Generator{0}});
  f.set_term(-1, {Generator{0b011}, Generator{0b101}, Generator{0b110}});
  RatMatrix d(1, 3);
  d(0, 0) = 1;
  d(0, 1) = 1;
  d(0, 2) = 1;
  f.set_diff(-1, d);
  f.prune();
  return f;
}

std::vector<std::array<unsigned, 3>> partitions(int n) {
  std::vector<std::array<unsigned, 3>> out;
  const unsigned full = (1u << n) - 1u;
  for (unsigned a = 0; a <= full; ++a)
    for (unsigned b = (~a) & full;; b = (b - 1) & (~a & full)) {
      out.push_back({a, b, full & ~(a | b)});
      if (b == 0) break;
    }
  return out;
}

struct Chain {
  FreeSqComplex f, ad1, ad2, ad3;
};

std::vector<Chain> build_suite(int max_n) {
  std::vector<Chain> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& [a, b, c] : partitions(n)) {
      Chain ch;
      ch.f = resolve_module(standard_module(n, a, b, c));
      ch.ad1 = ad(ch.f);
      ch.ad2 = ad(ch.ad1);
      ch.ad3 = ad(ch.ad2);
      out.push_back(std::move(ch));
    }
  Chain ex;
  ex.f = example_complex();
  ex.ad1 = ad(ex.f);
  ex.ad2 = ad(ex.ad1);
  ex.ad3 = ad(ex.ad2);
  out.push_back(std::move(ex));
  return out;
}

BettiTable rotate_h_to_b(const BettiTable& h, int n) {
  BettiTable out;
  const unsigned full = (1u << n) - 1u;
  for (const auto& [key, v] : h.entries()) {
    const unsigned r = full & ~key.second;
    out.add(key.first - mask_card(r), r, v);
  }
  return out;
}

bool fail(const std::string& what) {
  std::cout << "FAIL: " << what << "\n";
  return false;
}

bool verify_rotation(const std::vector<Chain>& suite) {
  for (const Chain& ch : suite) {
    const int n = ch.f.n();
    const InvariantTables tf = invariants(ch.f);
    const InvariantTables ta = invariants(ch.ad1);
    if (!(ta.b == rotate_h_to_b(tf.h, n)))
      return fail("rotation: B(ad F) != rotated H(F)");
    if (!(ta.h == tf.c)) return fail("rotation: H(ad F) != C(F)");
    if (!(ta.c == rotate_h_to_b(tf.b, n)))
      return fail("rotation: C(ad F) != rotated B(F)");
    if (!(ad_betti_shortcut(ch.f) == generator_table(ch.ad1)))
      return fail("rotation: betti shortcut differs from ad generators");
    const auto strand_tables = strands(ch.ad1);
    const auto hom = homology(ch.f);
    std::map<int, BettiTable> expect;
    for (const auto& [i, module] : hom) {
      BettiTable lt = generator_table(ell_complex(module)).translated(n - i);
      if (!lt.empty()) expect[i] = std::move(lt);
    }
    if (expect.size() != strand_tables.size())
      return fail("rotation: strand count mismatch");
    for (const auto& [i, want] : expect) {
      auto it = strand_tables.find(i);
      if (it == strand_tables.end() || !(it->second == want))
        return fail("rotation: strand content mismatch");
    }
  }
  std::cout << "rotation identities hold on " << suite.size()
            << " complexes\n";
  return true;
}

bool verify_yanagawa(const std::vector<Chain>& suite) {
  for (const Chain& ch : suite) {
    const InvariantTables lhs = invariants(ch.ad3);
    const InvariantTables rhs = invariants(translate(ch.f, ch.f.n()));
    if (!(lhs.b == rhs.b && lhs.h == rhs.h && lhs.c == rhs.c))
      return fail("yanagawa: third iterate differs from the n-translate");
  }
  std::cout << "third-iterate translation holds on " << suite.size()
            << " complexes\n";
  return true;
}

bool verify_structure(const std::vector<Chain>& suite) {
  for (const Chain& ch : suite) {
    for (const FreeSqComplex* f : {&ch.f, &ch.ad1, &ch.ad2, &ch.ad3}) {
      if (!validate(*f).empty()) return fail("structure: invalid iterate");
      if (!is_minimal(*f)) return fail("structure: non-minimal iterate");
    }
    const SinglyGradedProfile p0 = singly_graded_profile(ch.f);
    if (!p0.is_pure) continue;
    // transfer of the least degree to the last term of the next iterate
    const int n = ch.f.n();
    const int d0 = p0.degree_sequence.front();
    const int t = ch.f.max_pos();
    const long mult = static_cast<long>(ch.f.term(t).size());
    if (ch.ad1.min_pos() != -n + d0 + t)
      return fail("structure: transferred initial position is off");
    const auto& last = ch.ad1.term(ch.ad1.min_pos());
    if (static_cast<long>(last.size()) != mult)
      return fail("structure: transferred multiplicity is off");
    for (const Generator& g : last)
      if (mask_card(g.mask) != n - d0)
        return fail("structure: transferred degree is off");
  }
  std::cout << "validation, minimality and endpoint transfer hold\n";
  return true;
}

bool verify_solver(int max_n, int threads) {
  long total = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto all = enumerate_balanced(n, threads);
    for (const DegreeTriplet& t : all) {
      const RatMatrix rs = reduced_system(t);
      if (rs.rows() + 1 != rs.cols() || rs.cols() != t.a.size())
        return fail("solver: reduced system shape at " + triplet_to_string(t));
      const BettiSolution sol = solve_betti(t);
      if (sol.nullity != 1)
        return fail("solver: nullity != 1 at " + triplet_to_string(t));
      if (nullspace(full_system(t)).size() != 1)
        return fail("solver: full system nullity at " + triplet_to_string(t));
      if (!sol.positive || !sol.supports_exact || !sol.signs_consistent)
        return fail("solver: degenerate solution at " + triplet_to_string(t));
      const TripletParams p = derive_params(t);
      if (p.e_b == 0 && p.e_c == 0) {
        if (sol.alpha != herzog_kuhl(std::vector<int>(t.a.begin(), t.a.end())))
          return fail("solver: Herzog-Kuhl mismatch at " +
                      triplet_to_string(t));
        const ConstructionBetti cb = construction_betti(t.a, t.n);
        if (!cb.concordant)
          return fail("solver: tensor ranks discordant at " +
                      triplet_to_string(t));
      }
      if (p.e_a > 0) {
        const DegreeTriplet r = reduce(t);
        if (!is_balanced(r))
          return fail("solver: reduction left balance at " +
                      triplet_to_string(t));
      }
    }
    total += static_cast<long>(all.size());
    std::cout << "  n = " << n << ": " << all.size()
              << " balanced triplets, all nullity 1 and positive\n";
  }
  std::cout << "solver sweep clean over " << total << " triplets\n";
  return true;
}

}  // namespace

int run_verify(const std::string& suite, int max_n, int threads) {
  bool ok = true;
  const bool with_complexes =
      suite == "all" || suite == "rotation" || suite == "yanagawa";
  std::vector<Chain> chains;
  if (with_complexes) chains = build_suite(std::min(max_n, 4));
  if (suite == "all" || suite == "rotation")
    ok = ok && verify_rotation(chains);
  if (suite == "all" || suite == "yanagawa")
    ok = ok && verify_yanagawa(chains);
  if (suite == "all") ok = ok && verify_structure(chains);
  if (suite == "all" || suite == "solver")
    ok = ok && verify_solver(max_n, threads);
  std::cout << (ok ? "verify: OK" : "verify: FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace sqtcli
