#include "sqtriplets/functors.hpp"

#include <algorithm>
#include <sstream>

#include "sqtriplets/error.hpp"

namespace sqt {

namespace {

RatMatrix shaped(std::size_t rows, std::size_t cols) {
  return RatMatrix(rows, cols);
}

}  // namespace

const SqModule& SqModuleComplex::term(int p) const {
  auto it = terms_.find(p);
  if (it == terms_.end()) throw internal_error("missing module term");
  return it->second;
}

const std::vector<RatMatrix>& SqModuleComplex::map(int p) const {
  auto it = maps_.find(p);
  if (it == maps_.end()) throw internal_error("missing module map");
  return it->second;
}

void SqModuleComplex::set_term(int p, SqModule m) {
  if (m.is_zero())
    terms_.erase(p);
  else
    terms_[p] = std::move(m);
}

void SqModuleComplex::set_map(int p, std::vector<RatMatrix> mats) {
  maps_[p] = std::move(mats);
}

std::vector<std::string> SqModuleComplex::validate() const {
  std::vector<std::string> issues;
  const unsigned count = 1u << n_;
  for (const auto& [p, m] : terms_) {
    for (const std::string& s : m.validate())
      issues.push_back("term " + std::to_string(p) + ": " + s);
    if (!has_term(p + 1)) continue;
    if (!has_map(p)) {
      issues.push_back("map " + std::to_string(p) + " missing");
      continue;
    }
    const auto& mats = map(p);
    const SqModule& tgt = term(p + 1);
    if (mats.size() != count) {
      issues.push_back("map " + std::to_string(p) + " has wrong arity");
      continue;
    }
    for (unsigned r = 0; r < count; ++r) {
      if (mats[r].rows() != static_cast<std::size_t>(tgt.dim(r)) ||
          mats[r].cols() != static_cast<std::size_t>(m.dim(r))) {
        issues.push_back("map " + std::to_string(p) + " shape mismatch at " +
                         mask_key(r, n_));
        continue;
      }
      for (int v = 1; v <= n_; ++v) {
        const unsigned bit = 1u << (v - 1);
        if (r & bit) continue;
        const RatMatrix lhs = tgt.mult(v, r) * mats[r];
        const RatMatrix rhs = mats[r | bit] * m.mult(v, r);
        if (!(lhs == rhs))
          issues.push_back("map " + std::to_string(p) +
                           " does not commute with multiplication at " +
                           mask_key(r, n_));
      }
    }
  }
  if (!issues.empty()) return issues;
  for (const auto& [p, m] : terms_) {
    (void)m;
    if (!has_map(p) || !has_map(p + 1)) continue;
    for (unsigned r = 0; r < count; ++r)
      if (!(map(p + 1)[r] * map(p)[r]).is_zero())
        issues.push_back("composite at " + std::to_string(p) + " nonzero");
  }
  return issues;
}

namespace {

// Generators of the free cover of a degreewise collection of vector spaces
// inside a free module: for each degree R, a canonical complement of the
// span of the multiplication images from below.
struct CoverData {
  std::vector<Generator> gens;          // new generators, mask ascending
  std::vector<RatVector> vectors;       // their vectors inside the ambient
};

}  // namespace

ResolvedModule resolve_module_with_aug(const SqModule& m) {
  const int n = m.n();
  const unsigned count = 1u << n;
  ResolvedModule out;
  out.complex = FreeSqComplex(n);
  if (m.is_zero()) return out;

  // Step 0: minimal generators of M itself.  In degree R the generators are
  // a canonical completion of sum_v x_v M_{R-v} inside M_R.
  std::vector<Generator> gens0;
  std::vector<RatVector> vec0;
  for (unsigned r = 0; r < count; ++r) {
    const std::size_t dim = static_cast<std::size_t>(m.dim(r));
    if (dim == 0) continue;
    std::vector<RatVector> below;
    for (int v = 1; v <= n; ++v) {
      const unsigned bit = 1u << (v - 1);
      if ((r & bit) == 0) continue;
      const RatMatrix& mv = m.mult(v, r & ~bit);
      for (std::size_t j = 0; j < mv.cols(); ++j) {
        RatVector col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = mv(i, j);
        below.push_back(std::move(col));
      }
    }
    // canonical span of the image, then complete with standard vectors
    RatMatrix w(dim, below.size());
    for (std::size_t j = 0; j < below.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) w(i, j) = below[j][i];
    RatMatrix t = w.transposed();
    const auto pivots = rref_inplace(t);
    std::vector<RatVector> have;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      RatVector row(dim);
      for (std::size_t j = 0; j < dim; ++j) row[j] = t(k, j);
      have.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < dim && have.size() < dim; ++i) {
      RatVector cand(dim);
      cand[i] = 1;
      std::vector<RatVector> cols = have;
      RatMatrix sp(dim, cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t k = 0; k < dim; ++k) sp(k, j) = cols[j][k];
      if (!solve(sp, cand).has_value()) {
        have.push_back(cand);
        gens0.push_back(Generator{r});
        vec0.push_back(cand);
      }
    }
  }
  out.complex.set_term(0, gens0);
  out.aug = vec0;

  // Kernel chase: gens at position -s are minimal generators of the kernel
  // of the previous differential, evaluated degree by degree.
  int pos = 0;
  while (true) {
    if (pos < -(n + 1))
      throw internal_error("resolution exceeded the length bound");
    const std::vector<Generator>& cur = out.complex.term(pos);
    if (cur.empty()) break;

    // evaluation of the map F^pos -> (pos == 0 ? M : F^{pos+1}) per degree
    // is delegated: kernel of the free differential for pos < 0, kernel of
    // the augmentation for pos == 0.
    std::vector<std::vector<RatVector>> kernel(count);
    for (unsigned r = 0; r < count; ++r) {
      std::vector<std::size_t> alive;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (mask_subset(cur[i].mask, r)) alive.push_back(i);
      if (alive.empty()) continue;
      RatMatrix eval;
      if (pos == 0) {
        const std::size_t rows = static_cast<std::size_t>(m.dim(r));
        eval = shaped(rows, alive.size());
        for (std::size_t j = 0; j < alive.size(); ++j) {
          const Generator& g = cur[alive[j]];
          const RatMatrix path = m.mult_path(g.mask, r);
          const RatVector& base = out.aug[alive[j]];
          for (std::size_t i = 0; i < rows; ++i) {
            Rat acc = 0;
            for (std::size_t k = 0; k < base.size(); ++k)
              acc += path(i, k) * base[k];
            eval(i, j) = acc;
          }
        }
      } else {
        const RatMatrix& d = out.complex.diff(pos);
        const std::vector<Generator>& tgt = out.complex.term(pos + 1);
        std::vector<std::size_t> tgt_alive;
        for (std::size_t i = 0; i < tgt.size(); ++i)
          if (mask_subset(tgt[i].mask, r)) tgt_alive.push_back(i);
        eval = shaped(tgt_alive.size(), alive.size());
        for (std::size_t i = 0; i < tgt_alive.size(); ++i)
          for (std::size_t j = 0; j < alive.size(); ++j)
            eval(i, j) = d(tgt_alive[i], alive[j]);
      }
      std::vector<RatVector> null = nullspace(eval);
      for (RatVector& v : null) {
        RatVector fullv(cur.size());
        for (std::size_t j = 0; j < alive.size(); ++j) fullv[alive[j]] = v[j];
        kernel[r].push_back(std::move(fullv));
      }
    }

    // minimal generators of the kernel: complete the multiplication images
    // of lower-degree kernels inside each kernel slice
    std::vector<Generator> next;
    std::vector<RatVector> next_vecs;
    for (unsigned r = 0; r < count; ++r) {
      if (kernel[r].empty()) continue;
      std::vector<RatVector> have;
      for (int v = 1; v <= n; ++v) {
        const unsigned bit = 1u << (v - 1);
        if ((r & bit) == 0) continue;
        for (const RatVector& kv : kernel[r & ~bit]) have.push_back(kv);
      }
      // membership tests run inside the kernel slice coordinates
      const std::size_t amb = cur.size();
      auto in_span = [&](const std::vector<RatVector>& span,
                         const RatVector& v) {
        RatMatrix sp(amb, span.size());
        for (std::size_t j = 0; j < span.size(); ++j)
          for (std::size_t i = 0; i < amb; ++i) sp(i, j) = span[j][i];
        return solve(sp, v).has_value();
      };
      for (const RatVector& cand : kernel[r]) {
        if (in_span(have, cand)) continue;
        have.push_back(cand);
        next.push_back(Generator{r});
        next_vecs.push_back(cand);
      }
    }
    if (next.empty()) break;

    RatMatrix d(cur.size(), next.size());
    for (std::size_t j = 0; j < next.size(); ++j)
      for (std::size_t i = 0; i < cur.size(); ++i) d(i, j) = next_vecs[j][i];
    out.complex.set_term(pos - 1, std::move(next));
    out.complex.set_diff(pos - 1, std::move(d));
    --pos;
  }
  out.complex.prune();
  return out;
}

FreeSqComplex resolve_module(const SqModule& m) {
  return resolve_module_with_aug(m).complex;
}

SqModuleComplex alexander_termwise(const FreeSqComplex& f) {
  const int n = f.n();
  const unsigned count = 1u << n;
  SqModuleComplex out(n);
  if (f.empty()) return out;

  // term at position q is the Alexander dual of the free term at -q:
  // one copy of S/B per generator of degree B
  for (const auto& [p, gens] : f.terms()) {
    SqModule m(n);
    for (unsigned r = 0; r < count; ++r) {
      long d = 0;
      for (const Generator& g : gens)
        if ((g.mask & r) == 0) ++d;
      m.set_dim(r, d);
    }
    for (unsigned r = 0; r < count; ++r) {
      for (int v = 1; v <= n; ++v) {
        const unsigned bit = 1u << (v - 1);
        if (r & bit) continue;
        const unsigned rv = r | bit;
        RatMatrix mult(static_cast<std::size_t>(m.dim(rv)),
                       static_cast<std::size_t>(m.dim(r)));
        std::size_t row = 0;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          if ((gens[gi].mask & rv) != 0) continue;
          std::size_t col = 0;
          for (std::size_t gj = 0; gj < gens.size(); ++gj) {
            if ((gens[gj].mask & r) != 0) continue;
            if (gi == gj) mult(row, col) = 1;
            ++col;
          }
          ++row;
        }
        m.set_mult(v, r, std::move(mult));
      }
    }
    out.set_term(-p, std::move(m));
  }

  // the map leaving position q is the degreewise transpose of the free
  // differential entering position -q
  for (const auto& [p, gens] : f.terms()) {
    (void)gens;
    if (!f.has_diff(p - 1) || !out.has_term(-p) || !out.has_term(-p + 1))
      continue;
    const RatMatrix& d = f.diff(p - 1);
    const std::vector<Generator>& src_gens = f.term(p - 1);
    const std::vector<Generator>& tgt_gens = f.term(p);
    std::vector<RatMatrix> mats(count);
    for (unsigned r = 0; r < count; ++r) {
      std::vector<std::size_t> alive_src, alive_tgt;
      for (std::size_t i = 0; i < src_gens.size(); ++i)
        if ((src_gens[i].mask & r) == 0) alive_src.push_back(i);
      for (std::size_t i = 0; i < tgt_gens.size(); ++i)
        if ((tgt_gens[i].mask & r) == 0) alive_tgt.push_back(i);
      RatMatrix mat(alive_src.size(), alive_tgt.size());
      for (std::size_t i = 0; i < alive_src.size(); ++i)
        for (std::size_t j = 0; j < alive_tgt.size(); ++j)
          mat(i, j) = d(alive_tgt[j], alive_src[i]);
      mats[r] = std::move(mat);
    }
    out.set_map(-p, std::move(mats));
  }
  return out;
}

BettiTable module_complex_homology_dims(const SqModuleComplex& x) {
  BettiTable out;
  if (x.empty()) return out;
  const unsigned count = 1u << x.n();
  for (const auto& [p, m] : x.terms()) {
    for (unsigned r = 0; r < count; ++r) {
      const long dim = m.dim(r);
      if (dim == 0) continue;
      long rank_out = 0, rank_in = 0;
      if (x.has_map(p) && x.has_term(p + 1))
        rank_out = static_cast<long>(rank(x.map(p)[r]));
      if (x.has_map(p - 1) && x.has_term(p - 1))
        rank_in = static_cast<long>(rank(x.map(p - 1)[r]));
      out.add(p, r, dim - rank_out - rank_in);
    }
  }
  return out;
}

namespace {

// Augmented free complex: each generator of T carries a vector inside the
// module complex X at its position and degree.
struct AugmentedComplex {
  FreeSqComplex t;
  std::map<int, std::vector<RatVector>> aug;  // per position, per generator
};

// Image of generator g (mask d, augmentation vector base at position p)
// inside X^p_R for R containing d.
RatVector aug_at(const SqModuleComplex& x, int p, unsigned gen_mask,
                 const RatVector& base, unsigned r) {
  if (!x.has_term(p))
    return RatVector();
  const SqModule& m = x.term(p);
  const RatMatrix path = m.mult_path(gen_mask, r);
  RatVector out(static_cast<std::size_t>(m.dim(r)));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rat acc = 0;
    for (std::size_t k = 0; k < base.size(); ++k) acc += path(i, k) * base[k];
    out[i] = acc;
  }
  return out;
}

}  // namespace

FreeSqComplex resolve_complex(const SqModuleComplex& x) {
  const int n = x.n();
  FreeSqComplex result(n);
  if (x.empty()) return result;

  // start from the resolution of the top term, then cone in lower positions
  const int top = x.terms().rbegin()->first;
  AugmentedComplex t;
  {
    const ResolvedModule res = resolve_module_with_aug(x.term(top));
    t.t = translate(res.complex, -top);  // augmentation now sits at `top`
    for (const auto& [p, gens] : t.t.terms())
      t.aug[p].assign(gens.size(), RatVector());
    t.aug[top] = res.aug;
  }

  for (auto it = std::next(x.terms().rbegin()); it != x.terms().rend(); ++it) {
    const int p = it->first;
    const SqModule& xp = it->second;
    const ResolvedModule res = resolve_module_with_aug(xp);
    // place the resolution with its augmented end at p+1 for the lifting,
    // the cone will shift it down to p
    const FreeSqComplex fa = translate(res.complex, -(p + 1));

    // chain map psi_s : FA^s -> T^s lifting the composite of the
    // augmentation with the module differential X^p -> X^{p+1}
    std::map<int, RatMatrix> psi;
    for (auto fit = fa.terms().rbegin(); fit != fa.terms().rend(); ++fit) {
      const int s = fit->first;
      const std::vector<Generator>& fgens = fit->second;
      const std::vector<Generator>& tgens = t.t.term(s);
      RatMatrix psis(tgens.size(), fgens.size());
      for (std::size_t j = 0; j < fgens.size(); ++j) {
        const unsigned rg = fgens[j].mask;
        // unknown: element of T^s in degree rg
        std::vector<std::size_t> t_alive;
        for (std::size_t i = 0; i < tgens.size(); ++i)
          if (mask_subset(tgens[i].mask, rg)) t_alive.push_back(i);

        // rows: d_T z = y  where y = psi_{s+1}(d_FA g)
        std::vector<std::size_t> up_alive;
        if (t.t.has_term(s + 1))
          for (std::size_t i = 0; i < t.t.term(s + 1).size(); ++i)
            if (mask_subset(t.t.term(s + 1)[i].mask, rg)) up_alive.push_back(i);

        RatVector y(up_alive.size());
        if (fa.has_diff(s) && t.t.has_term(s + 1)) {
          const RatMatrix& dfa = fa.diff(s);
          const RatMatrix& psin = psi.at(s + 1);
          for (std::size_t i = 0; i < up_alive.size(); ++i) {
            Rat acc = 0;
            for (std::size_t k = 0; k < dfa.rows(); ++k)
              if (dfa(k, j) != 0) acc += psin(up_alive[i], k) * dfa(k, j);
            y[i] = acc;
          }
        }

        // rows: eps z = c(g), nonzero only at the augmented end where
        // c(g) = phi(alpha(g)) with alpha the resolution augmentation and
        // phi the module differential leaving position p
        RatVector c;
        std::size_t eps_rows = 0;
        if (x.has_term(s)) {
          eps_rows = static_cast<std::size_t>(x.term(s).dim(rg));
          c.assign(eps_rows, Rat(0));
          if (s == p + 1 && x.has_map(p)) {
            const RatVector alpha_g =
                aug_at(x, p, fgens[j].mask, res.aug[j], rg);
            const RatMatrix& phi_r = x.map(p)[rg];
            for (std::size_t i = 0; i < eps_rows; ++i) {
              Rat acc = 0;
              for (std::size_t k = 0; k < alpha_g.size(); ++k)
                acc += phi_r(i, k) * alpha_g[k];
              c[i] = acc;
            }
          }
        }

        RatMatrix sys(up_alive.size() + eps_rows, t_alive.size());
        RatVector rhs(up_alive.size() + eps_rows);
        if (!up_alive.empty() && t.t.has_diff(s)) {
          const RatMatrix& dt = t.t.diff(s);
          for (std::size_t i = 0; i < up_alive.size(); ++i)
            for (std::size_t k = 0; k < t_alive.size(); ++k)
              sys(i, k) = dt(up_alive[i], t_alive[k]);
        }
        for (std::size_t i = 0; i < up_alive.size(); ++i) rhs[i] = y[i];
        if (eps_rows > 0) {
          for (std::size_t k = 0; k < t_alive.size(); ++k) {
            const Generator& tg = tgens[t_alive[k]];
            const RatVector col =
                aug_at(x, s, tg.mask, t.aug.at(s)[t_alive[k]], rg);
            for (std::size_t i = 0; i < eps_rows; ++i)
              sys(up_alive.size() + i, k) = col.empty() ? Rat(0) : col[i];
          }
          for (std::size_t i = 0; i < eps_rows; ++i)
            rhs[up_alive.size() + i] = c[i];
        }

        const auto z = solve(sys, rhs);
        if (!z)
          throw internal_error(
              "resolve_complex: inconsistent lifting system (invalid input "
              "complex)");
        for (std::size_t k = 0; k < t_alive.size(); ++k)
          psis(t_alive[k], j) = (*z)[k];
      }
      psi.emplace(s, std::move(psis));
    }

    // mapping cone: FA generators drop one position, internal differential
    // negated, psi glues them to T
    AugmentedComplex cone;
    cone.t = FreeSqComplex(n);
    const FreeSqComplex shifted = translate(fa, 1);
    for (int q = std::min(shifted.empty() ? p : shifted.min_pos(),
                          t.t.min_pos());
         q <= std::max(p, t.t.max_pos()); ++q) {
      std::vector<Generator> gens;
      std::vector<RatVector> augs;
      for (const Generator& g : shifted.term(q)) {
        gens.push_back(g);
        augs.push_back(RatVector());
      }
      if (q == p)
        for (std::size_t i = 0; i < res.aug.size(); ++i)
          augs[i] = res.aug[i];
      for (std::size_t i = 0; i < t.t.term(q).size(); ++i) {
        gens.push_back(t.t.term(q)[i]);
        augs.push_back(t.aug.count(q) ? t.aug.at(q)[i] : RatVector());
      }
      cone.t.set_term(q, gens);
      cone.aug[q] = std::move(augs);
    }
    for (int q = cone.t.empty() ? p : cone.t.min_pos();
         q < (cone.t.empty() ? p : cone.t.max_pos()); ++q) {
      const std::size_t fa_src = shifted.term(q).size();
      const std::size_t t_src = t.t.term(q).size();
      const std::size_t fa_tgt = shifted.term(q + 1).size();
      const std::size_t t_tgt = t.t.term(q + 1).size();
      if (fa_src + t_src == 0 || fa_tgt + t_tgt == 0) continue;
      RatMatrix d(fa_tgt + t_tgt, fa_src + t_src);
      if (shifted.has_diff(q)) {
        const RatMatrix& dfa = shifted.diff(q);
        for (std::size_t i = 0; i < fa_tgt; ++i)
          for (std::size_t j = 0; j < fa_src; ++j) d(i, j) = -dfa(i, j);
      }
      if (t.t.has_diff(q)) {
        const RatMatrix& dt = t.t.diff(q);
        for (std::size_t i = 0; i < t_tgt; ++i)
          for (std::size_t j = 0; j < t_src; ++j)
            d(fa_tgt + i, fa_src + j) = dt(i, j);
      }
      // psi block glues the FA columns (FA^{q+1}) to the T rows (T^{q+1})
      auto pit = psi.find(q + 1);
      if (pit != psi.end() && fa_src > 0 && t_tgt > 0) {
        const RatMatrix& ps = pit->second;
        for (std::size_t i = 0; i < t_tgt; ++i)
          for (std::size_t j = 0; j < fa_src; ++j)
            d(fa_tgt + i, j) = ps(i, j);
      }
      cone.t.set_diff(q, std::move(d));
    }
    cone.t.prune();
    t = std::move(cone);
  }

  result = minimalize(t.t);
  const auto diag = validate(result);
  if (!diag.empty())
    throw internal_error("resolve_complex produced an invalid complex: " +
                         diag.front());
  if (!(homology_table(homology(result)) == module_complex_homology_dims(x)))
    throw internal_error(
        "resolve_complex: output homology differs from input homology");
  return result;
}

FreeSqComplex ad(const FreeSqComplex& f) {
  return resolve_complex(alexander_termwise(dualize(f)));
}

FreeSqComplex ad_iterate(const FreeSqComplex& f, int times) {
  FreeSqComplex out = f;
  for (int i = 0; i < times; ++i) out = ad(out);
  return out;
}

BettiTable ad_betti_shortcut(const FreeSqComplex& f) {
  const unsigned full = (1u << f.n()) - 1u;
  BettiTable out;
  const BettiTable h = homology_table(homology(f));
  for (const auto& [key, v] : h.entries()) {
    const unsigned r_mask = full & ~key.second;
    const int r = mask_card(r_mask);
    out.add(key.first - r, r_mask, v);
  }
  return out;
}

}  // namespace sqt
