#pragma once

#include <array>
#include <random>
#include <vector>

#include "sqtriplets/exact.hpp"
#include "sqtriplets/freecomplex.hpp"
#include "sqtriplets/functors.hpp"
#include "sqtriplets/sqmodule.hpp"

namespace fixtures {

/// S <- S(-2)^3 over three variables, differential row (x1x2, x1x3, x2x3).
inline sqt::FreeSqComplex example23() {
  using namespace sqt;
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

/// Minimal resolution of the simple module k over n variables.
inline sqt::FreeSqComplex koszul_of_k(int n) {
  return sqt::resolve_module(sqt::standard_module(n, (1u << n) - 1u, 0, 0));
}

/// All partitions (A, B, C) of {1..n} as mask triples.
inline std::vector<std::array<unsigned, 3>> partitions(int n) {
  std::vector<std::array<unsigned, 3>> out;
  const unsigned full = (1u << n) - 1u;
  for (unsigned a = 0; a <= full; ++a) {
    for (unsigned b = (~a) & full;; b = (b - 1) & (~a & full)) {
      out.push_back({a, b, full & ~(a | b)});
      if (b == 0) break;
    }
  }
  return out;
}

/// The verification suite: resolutions of every S/A(-B;C) for 1 <= n <=
/// max_n, followed by the example complex.
inline std::vector<sqt::FreeSqComplex> standard_suite(int max_n) {
  std::vector<sqt::FreeSqComplex> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& [a, b, c] : partitions(n))
      out.push_back(sqt::resolve_module(sqt::standard_module(n, a, b, c)));
  out.push_back(example23());
  return out;
}

/// Random invertible small-integer matrix.
inline sqt::RatMatrix random_unimodular(std::size_t k, std::mt19937& rng) {
  using namespace sqt;
  RatMatrix m = RatMatrix::identity(k);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, k ? k - 1 : 0);
  for (int step = 0; step < static_cast<int>(3 * k); ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t t = 0; t < k; ++t) m(i, t) += Rat(c) * m(j, t);
  }
  return m;
}

inline sqt::RatMatrix inverse(const sqt::RatMatrix& m) {
  using namespace sqt;
  const std::size_t k = m.rows();
  RatMatrix aug(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
    aug(i, k + i) = 1;
  }
  rref_inplace(aug);
  RatMatrix inv(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inv(i, j) = aug(i, k + j);
  return inv;
}

/// Random valid squarefree module: a sum of one or two standard modules
/// conjugated by a random basis change in every degree.  Dimensions stay
/// at most 2 and the commuting squares hold by construction.
inline sqt::SqModule random_module(int n, std::mt19937& rng) {
  using namespace sqt;
  const auto parts = partitions(n);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  std::uniform_int_distribution<int> count(1, 2);
  const int summands = count(rng);

  const unsigned degs = 1u << n;
  SqModule m(n);
  std::vector<std::array<unsigned, 3>> chosen;
  for (int s = 0; s < summands; ++s) chosen.push_back(parts[pick(rng)]);
  std::vector<SqModule> blocks;
  for (const auto& [a, b, c] : chosen)
    blocks.push_back(standard_module(n, a, b, c));
  for (unsigned r = 0; r < degs; ++r) {
    long d = 0;
    for (const SqModule& blk : blocks) d += blk.dim(r);
    m.set_dim(r, d);
  }
  std::vector<RatMatrix> change(degs), change_inv(degs);
  for (unsigned r = 0; r < degs; ++r) {
    change[r] = random_unimodular(static_cast<std::size_t>(m.dim(r)), rng);
    change_inv[r] = inverse(change[r]);
  }
  for (unsigned r = 0; r < degs; ++r) {
    for (int v = 1; v <= n; ++v) {
      const unsigned bit = 1u << (v - 1);
      if (r & bit) continue;
      const unsigned rv = r | bit;
      RatMatrix block(static_cast<std::size_t>(m.dim(rv)),
                      static_cast<std::size_t>(m.dim(r)));
      std::size_t ro = 0, co = 0;
      for (const SqModule& blk : blocks) {
        const RatMatrix piece = blk.mult(v, r);
        for (std::size_t i = 0; i < piece.rows(); ++i)
          for (std::size_t j = 0; j < piece.cols(); ++j)
            block(ro + i, co + j) = piece(i, j);
        ro += static_cast<std::size_t>(blk.dim(rv));
        co += static_cast<std::size_t>(blk.dim(r));
      }
      m.set_mult(v, r, change[rv] * block * change_inv[r]);
    }
  }
  return m;
}

/// Random module homomorphism src -> tgt, optionally constrained to land in
/// the kernel of a following map; built from the exact solution space of
/// the commuting constraints.
inline std::vector<sqt::RatMatrix> random_hom(
    const sqt::SqModule& src, const sqt::SqModule& tgt,
    const std::vector<sqt::RatMatrix>* post, const sqt::SqModule* post_tgt,
    std::mt19937& rng) {
  using namespace sqt;
  const int n = src.n();
  const unsigned degs = 1u << n;
  // unknown layout: entries of phi_R for every degree, row-major
  std::vector<std::size_t> offset(degs + 1, 0);
  for (unsigned r = 0; r < degs; ++r)
    offset[r + 1] =
        offset[r] + static_cast<std::size_t>(tgt.dim(r) * src.dim(r));
  const std::size_t unknowns = offset[degs];
  std::vector<RatVector> rows;

  auto entry = [&](unsigned r, long i, long j) {
    return offset[r] + static_cast<std::size_t>(i * src.dim(r) + j);
  };
  // commuting with multiplication: mult_tgt(v,R) phi_R = phi_{R+v} mult_src(v,R)
  for (unsigned r = 0; r < degs; ++r) {
    for (int v = 1; v <= n; ++v) {
      const unsigned bit = 1u << (v - 1);
      if (r & bit) continue;
      const unsigned rv = r | bit;
      const RatMatrix mt = tgt.mult(v, r);
      const RatMatrix ms = src.mult(v, r);
      for (long i = 0; i < tgt.dim(rv); ++i)
        for (long j = 0; j < src.dim(r); ++j) {
          RatVector row(unknowns);
          for (long k = 0; k < tgt.dim(r); ++k)
            row[entry(r, k, j)] += mt(static_cast<std::size_t>(i),
                                      static_cast<std::size_t>(k));
          for (long k = 0; k < src.dim(rv); ++k)
            row[entry(rv, i, k)] -= ms(static_cast<std::size_t>(k),
                                       static_cast<std::size_t>(j));
          rows.push_back(std::move(row));
        }
    }
  }
  // optional composite-zero constraint: post_R phi_R = 0
  if (post != nullptr && post_tgt != nullptr) {
    for (unsigned r = 0; r < degs; ++r) {
      const RatMatrix& p = (*post)[r];
      for (long i = 0; i < post_tgt->dim(r); ++i)
        for (long j = 0; j < src.dim(r); ++j) {
          RatVector row(unknowns);
          for (long k = 0; k < tgt.dim(r); ++k)
            row[entry(r, k, j)] += p(static_cast<std::size_t>(i),
                                     static_cast<std::size_t>(k));
          rows.push_back(std::move(row));
        }
    }
  }

  RatMatrix sys(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) sys(i, j) = rows[i][j];
  const auto basis = nullspace(sys);
  RatVector phi(unknowns);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const RatVector& b : basis) {
    const int c = coef(rng);
    if (c == 0) continue;
    for (std::size_t i = 0; i < unknowns; ++i) phi[i] += Rat(c) * b[i];
  }
  std::vector<RatMatrix> mats(degs);
  for (unsigned r = 0; r < degs; ++r) {
    RatMatrix m(static_cast<std::size_t>(tgt.dim(r)),
                static_cast<std::size_t>(src.dim(r)));
    for (long i = 0; i < tgt.dim(r); ++i)
      for (long j = 0; j < src.dim(r); ++j)
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            phi[entry(r, i, j)];
    mats[r] = std::move(m);
  }
  return mats;
}

/// Random two- or three-term module complex with valid maps.
inline sqt::SqModuleComplex random_module_complex(int n, int terms,
                                                  std::mt19937& rng) {
  using namespace sqt;
  SqModuleComplex x(n);
  std::vector<SqModule> mods;
  for (int i = 0; i < terms; ++i) mods.push_back(random_module(n, rng));
  for (int i = 0; i < terms; ++i) x.set_term(i, mods[static_cast<std::size_t>(i)]);
  if (terms >= 2 && x.has_term(terms - 1) && x.has_term(terms - 2)) {
    // build maps from the top down so composites can be constrained to zero
    auto top = random_hom(mods[static_cast<std::size_t>(terms - 2)],
                          mods[static_cast<std::size_t>(terms - 1)], nullptr,
                          nullptr, rng);
    x.set_map(terms - 2, top);
    if (terms >= 3) {
      auto lower = random_hom(mods[0], mods[1], &top,
                              &mods[static_cast<std::size_t>(terms - 1)], rng);
      x.set_map(0, lower);
    }
  }
  return x;
}

}  // namespace fixtures
