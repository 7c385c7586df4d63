#include "sqtriplets/freecomplex.hpp"

#include <algorithm>
#include <sstream>

#include "sqtriplets/error.hpp"

namespace sqt {

namespace {

int parity_sign(int p) { return ((p % 2) + 2) % 2 == 0 ? 1 : -1; }

RatMatrix from_columns(std::size_t rows, const std::vector<RatVector>& cols) {
  RatMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace

int FreeSqComplex::min_pos() const {
  if (terms_.empty()) throw internal_error("min_pos of empty complex");
  return terms_.begin()->first;
}

int FreeSqComplex::max_pos() const {
  if (terms_.empty()) throw internal_error("max_pos of empty complex");
  return terms_.rbegin()->first;
}

const std::vector<Generator>& FreeSqComplex::term(int p) const {
  static const std::vector<Generator> none;
  auto it = terms_.find(p);
  return it == terms_.end() ? none : it->second;
}

const RatMatrix& FreeSqComplex::diff(int p) const {
  auto it = diffs_.find(p);
  if (it == diffs_.end()) throw internal_error("missing differential");
  return it->second;
}

void FreeSqComplex::set_term(int p, std::vector<Generator> gens) {
  if (gens.empty())
    terms_.erase(p);
  else
    terms_[p] = std::move(gens);
}

void FreeSqComplex::set_diff(int p, RatMatrix m) { diffs_[p] = std::move(m); }

void FreeSqComplex::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.empty() ? terms_.erase(it) : std::next(it);
  for (auto it = diffs_.begin(); it != diffs_.end();) {
    const int p = it->first;
    if (!has_term(p) || !has_term(p + 1))
      it = diffs_.erase(it);
    else
      ++it;
  }
  // adjacent nonzero terms always carry a (possibly zero) differential
  for (const auto& [p, gens] : terms_) {
    if (!has_term(p + 1) || diffs_.count(p)) continue;
    diffs_.emplace(p, RatMatrix(term(p + 1).size(), gens.size()));
  }
}

long FreeSqComplex::generator_count() const {
  long t = 0;
  for (const auto& [p, gens] : terms_) t += static_cast<long>(gens.size());
  return t;
}

std::vector<std::string> validate(const FreeSqComplex& f) {
  std::vector<std::string> issues;
  auto note = [&](int p, const std::string& s) {
    std::ostringstream os;
    os << "position " << p << ": " << s;
    issues.push_back(os.str());
  };
  for (const auto& [p, gens] : f.terms()) {
    for (const Generator& g : gens)
      if (g.mask >= (1u << f.n())) note(p, "generator degree out of range");
    if (!f.has_term(p + 1)) continue;
    if (!f.has_diff(p)) {
      note(p, "missing differential between nonzero terms");
      continue;
    }
    const RatMatrix& d = f.diff(p);
    const auto& tgt = f.term(p + 1);
    if (d.rows() != tgt.size() || d.cols() != gens.size()) {
      note(p, "differential shape mismatch");
      continue;
    }
    for (std::size_t h = 0; h < tgt.size(); ++h)
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (d(h, g) != 0 && !mask_subset(tgt[h].mask, gens[g].mask)) {
          std::ostringstream os;
          os << "inhomogeneous entry (" << h << ", " << g << ")";
          note(p, os.str());
        }
  }
  if (!issues.empty()) return issues;
  // d composed with d vanishes; with homogeneity in place the plain scalar
  // product carries exactly the per-multidegree coefficients
  for (const auto& [p, d1] : f.terms()) {
    (void)d1;
    if (!f.has_diff(p) || !f.has_diff(p + 1)) continue;
    if (!(f.diff(p + 1) * f.diff(p)).is_zero())
      note(p, "composite of consecutive differentials is nonzero");
  }
  return issues;
}

EvaluatedComplex evaluate_at(const FreeSqComplex& f, unsigned mask) {
  EvaluatedComplex ev;
  for (const auto& [p, gens] : f.terms()) {
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mask_subset(gens[i].mask, mask)) basis.push_back(i);
    ev.basis[p] = std::move(basis);
  }
  for (const auto& [p, basis] : ev.basis) {
    if (!f.has_diff(p)) continue;
    auto itn = ev.basis.find(p + 1);
    if (itn == ev.basis.end()) continue;
    const RatMatrix& d = f.diff(p);
    RatMatrix sub(itn->second.size(), basis.size());
    for (std::size_t i = 0; i < itn->second.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        sub(i, j) = d(itn->second[i], basis[j]);
    ev.maps[p] = std::move(sub);
  }
  return ev;
}

namespace {

// Cycle space, boundary space and canonical homology representatives of one
// evaluated degree slice.
struct HomologySlot {
  std::vector<std::size_t> basis;   // generator indices alive at this degree
  std::vector<RatVector> bounds;    // canonical basis of the boundary space
  std::vector<RatVector> reps;      // cycle representatives spanning H
};

// Accepts candidate columns that enlarge the span of `have`.
struct SpanBuilder {
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  bool contains(const RatVector& v) {
    if (members_.empty()) {
      return std::all_of(v.begin(), v.end(),
                         [](const Rat& x) { return x == 0; });
    }
    return solve(from_columns(dim_, members_), v).has_value();
  }

  bool insert(const RatVector& v) {
    if (contains(v)) return false;
    members_.push_back(v);
    return true;
  }

  std::size_t dim_;
  std::vector<RatVector> members_;
};

HomologySlot homology_slot(const EvaluatedComplex& ev, int p) {
  HomologySlot slot;
  slot.basis = ev.basis.at(p);
  const std::size_t dim = slot.basis.size();
  if (dim == 0) return slot;

  std::vector<RatVector> cycles;
  auto out = ev.maps.find(p);
  if (out != ev.maps.end()) {
    cycles = nullspace(out->second);
  } else {
    cycles.resize(dim, RatVector(dim));
    for (std::size_t i = 0; i < dim; ++i) cycles[i][i] = 1;
  }

  auto in = ev.maps.find(p - 1);
  if (in != ev.maps.end() && in->second.cols() > 0) {
    RatMatrix t = in->second.transposed();
    const auto pivots = rref_inplace(t);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      RatVector row(dim);
      for (std::size_t j = 0; j < dim; ++j) row[j] = t(r, j);
      slot.bounds.push_back(std::move(row));
    }
  }

  SpanBuilder span(dim);
  for (const RatVector& b : slot.bounds) span.insert(b);
  for (const RatVector& z : cycles)
    if (span.insert(z)) slot.reps.push_back(z);
  return slot;
}

}  // namespace

std::map<int, SqModule> homology(const FreeSqComplex& f) {
  std::map<int, SqModule> out;
  if (f.empty()) return out;
  const int n = f.n();
  const unsigned count = 1u << n;

  std::map<int, std::vector<HomologySlot>> slots;
  for (const auto& [p, gens] : f.terms()) {
    (void)gens;
    slots[p].resize(count);
  }
  for (unsigned r = 0; r < count; ++r) {
    const EvaluatedComplex ev = evaluate_at(f, r);
    for (auto& [p, vec] : slots) vec[r] = homology_slot(ev, p);
  }

  for (auto& [p, vec] : slots) {
    SqModule h(n);
    bool nonzero = false;
    for (unsigned r = 0; r < count; ++r) {
      h.set_dim(r, static_cast<long>(vec[r].reps.size()));
      if (!vec[r].reps.empty()) nonzero = true;
    }
    if (!nonzero) continue;
    for (unsigned r = 0; r < count; ++r) {
      const HomologySlot& src = vec[r];
      if (src.reps.empty()) continue;
      for (int v = 1; v <= n; ++v) {
        const unsigned bit = 1u << (v - 1);
        if (r & bit) continue;
        const HomologySlot& tgt = vec[r | bit];
        RatMatrix m(tgt.reps.size(), src.reps.size());
        if (tgt.reps.empty()) {
          h.set_mult(v, r, std::move(m));
          continue;
        }
        // position of each source generator inside the larger basis
        std::vector<std::size_t> where(src.basis.size());
        for (std::size_t i = 0; i < src.basis.size(); ++i) {
          auto it = std::find(tgt.basis.begin(), tgt.basis.end(), src.basis[i]);
          if (it == tgt.basis.end())
            throw internal_error("homology: basis inclusion failed");
          where[i] = static_cast<std::size_t>(it - tgt.basis.begin());
        }
        std::vector<RatVector> cols = tgt.bounds;
        cols.insert(cols.end(), tgt.reps.begin(), tgt.reps.end());
        const RatMatrix span = from_columns(tgt.basis.size(), cols);
        for (std::size_t j = 0; j < src.reps.size(); ++j) {
          RatVector w(tgt.basis.size());
          for (std::size_t i = 0; i < src.basis.size(); ++i)
            w[where[i]] = src.reps[j][i];
          auto x = solve(span, w);
          if (!x)
            throw internal_error("homology: induced map not in cycle span");
          for (std::size_t i = 0; i < tgt.reps.size(); ++i)
            m(i, j) = (*x)[tgt.bounds.size() + i];
        }
        h.set_mult(v, r, std::move(m));
      }
    }
    out.emplace(p, std::move(h));
  }
  return out;
}

BettiTable homology_table(const std::map<int, SqModule>& h) {
  BettiTable t;
  for (const auto& [p, m] : h)
    for (unsigned r = 0; r < m.degree_count(); ++r) t.add(p, r, m.dim(r));
  return t;
}

FreeSqComplex dualize(const FreeSqComplex& f) {
  FreeSqComplex out(f.n());
  const unsigned full = (1u << f.n()) - 1u;
  for (const auto& [p, gens] : f.terms()) {
    std::vector<Generator> dual(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      dual[i] = Generator{full & ~gens[i].mask};
    out.set_term(-p, std::move(dual));
  }
  for (const auto& [p, gens] : f.terms()) {
    (void)gens;
    if (!f.has_diff(p)) continue;
    RatMatrix t = f.diff(p).transposed();
    if (parity_sign(p) < 0) t = t.negated();
    out.set_diff(-p - 1, std::move(t));
  }
  out.prune();
  return out;
}

BettiTable cohomology(const FreeSqComplex& f) {
  const unsigned full = (1u << f.n()) - 1u;
  BettiTable out;
  const BettiTable dual_h = homology_table(homology(dualize(f)));
  for (const auto& [key, v] : dual_h.entries())
    out.add(-key.first, full & ~key.second, v);
  return out;
}

BettiTable generator_table(const FreeSqComplex& f) {
  BettiTable t;
  for (const auto& [p, gens] : f.terms())
    for (const Generator& g : gens) t.add(p, g.mask, 1);
  return t;
}

InvariantTables invariants(const FreeSqComplex& f) {
  InvariantTables t;
  t.b = generator_table(minimalize(f));
  t.h = homology_table(homology(f));
  t.c = cohomology(f);
  return t;
}

namespace {

struct Pivot {
  int p;
  std::size_t row, col;
};

bool find_pivot(const FreeSqComplex& f, Pivot& out) {
  for (const auto& [p, gens] : f.terms()) {
    if (!f.has_diff(p)) continue;
    const RatMatrix& d = f.diff(p);
    const auto& tgt = f.term(p + 1);
    for (std::size_t h = 0; h < d.rows(); ++h)
      for (std::size_t g = 0; g < d.cols(); ++g)
        if (d(h, g) != 0 && tgt[h].mask == gens[g].mask) {
          out = {p, h, g};
          return true;
        }
  }
  return false;
}

RatMatrix drop_row_col(const RatMatrix& m, std::size_t row, std::size_t col,
                       bool drop_row, bool drop_col) {
  RatMatrix out(m.rows() - (drop_row ? 1 : 0), m.cols() - (drop_col ? 1 : 0));
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (drop_row && i == row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (drop_col && j == col) continue;
      out(oi, oj) = m(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

void cancel_pair(FreeSqComplex& f, const Pivot& pv) {
  const int p = pv.p;
  const RatMatrix d = f.diff(p);
  const Rat e = d(pv.row, pv.col);

  // Gaussian update of the middle differential, then drop the pair
  RatMatrix nd(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      nd(i, j) = d(i, j) - d(i, pv.col) * d(pv.row, j) / e;
  nd = drop_row_col(nd, pv.row, pv.col, true, true);

  std::vector<Generator> src = f.term(p);
  src.erase(src.begin() + static_cast<long>(pv.col));
  std::vector<Generator> tgt = f.term(p + 1);
  tgt.erase(tgt.begin() + static_cast<long>(pv.row));

  const bool had_in = f.has_diff(p - 1);
  const bool had_out = f.has_diff(p + 1);
  RatMatrix din, dout;
  if (had_in) din = drop_row_col(f.diff(p - 1), pv.col, 0, true, false);
  if (had_out) dout = drop_row_col(f.diff(p + 1), 0, pv.row, false, true);

  f.set_term(p, std::move(src));
  f.set_term(p + 1, std::move(tgt));
  f.set_diff(p, std::move(nd));
  if (had_in) f.set_diff(p - 1, std::move(din));
  if (had_out) f.set_diff(p + 1, std::move(dout));
  f.prune();
}

}  // namespace

FreeSqComplex minimalize(FreeSqComplex f) {
  f.prune();
  Pivot pv;
  while (find_pivot(f, pv)) cancel_pair(f, pv);
  return f;
}

bool is_minimal(const FreeSqComplex& f) {
  Pivot pv;
  return !find_pivot(f, pv);
}

std::map<int, BettiTable> strands(const FreeSqComplex& f) {
  if (!is_minimal(f)) throw domain_error("strands: complex is not minimal");
  std::map<int, BettiTable> out;
  for (const auto& [p, gens] : f.terms())
    for (const Generator& g : gens)
      out[p + mask_card(g.mask)].add(p, g.mask, 1);
  return out;
}

SinglyGradedProfile singly_graded_profile(const FreeSqComplex& f) {
  if (!is_minimal(f))
    throw domain_error("singly_graded_profile: complex is not minimal");
  SinglyGradedProfile prof;
  for (const auto& [p, gens] : f.terms())
    for (const Generator& g : gens) prof.degrees[p].insert(mask_card(g.mask));
  if (f.empty()) {
    prof.is_pure = prof.is_linear = true;
    return prof;
  }
  bool pure = true;
  for (const auto& [p, degs] : prof.degrees)
    if (degs.size() != 1) pure = false;
  if (pure) {
    // contiguous support, degree strictly growing toward lower positions
    for (int p = f.min_pos(); p <= f.max_pos(); ++p)
      if (!f.has_term(p)) pure = false;
  }
  if (pure) {
    for (int p = f.max_pos(); p >= f.min_pos(); --p)
      prof.degree_sequence.push_back(*prof.degrees.at(p).begin());
    for (std::size_t i = 0; i + 1 < prof.degree_sequence.size(); ++i)
      if (prof.degree_sequence[i] >= prof.degree_sequence[i + 1]) pure = false;
    if (!pure) prof.degree_sequence.clear();
  }
  prof.is_pure = pure;
  if (pure) {
    prof.is_linear = true;
    for (std::size_t i = 0; i + 1 < prof.degree_sequence.size(); ++i)
      if (prof.degree_sequence[i + 1] - prof.degree_sequence[i] != 1)
        prof.is_linear = false;
  }
  return prof;
}

std::string singly_graded_summary(const FreeSqComplex& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!first_term) os << " <- ";
    first_term = false;
    std::map<int, long> counts;
    for (const Generator& g : it->second) ++counts[mask_card(g.mask)];
    bool first_piece = true;
    for (const auto& [d, m] : counts) {
      if (!first_piece) os << "+";
      first_piece = false;
      os << "S";
      if (d != 0) os << "(-" << d << ")";
      if (m != 1) os << "^" << m;
    }
  }
  return os.str();
}

FreeSqComplex translate(const FreeSqComplex& f, int k) {
  FreeSqComplex out(f.n());
  for (const auto& [p, gens] : f.terms()) out.set_term(p - k, gens);
  for (const auto& [p, gens] : f.terms()) {
    (void)gens;
    if (f.has_diff(p)) out.set_diff(p - k, f.diff(p));
  }
  out.prune();
  return out;
}

FreeSqComplex ell_complex(const SqModule& m) {
  const int n = m.n();
  FreeSqComplex out(n);
  const unsigned count = 1u << n;

  // position i gathers the blocks (M_R)° with |R| = i, placed in degree R^c
  std::map<int, std::vector<unsigned>> blocks;
  for (unsigned r = 0; r < count; ++r)
    if (m.dim(r) > 0) blocks[mask_card(r)].push_back(r);

  std::map<int, std::map<unsigned, std::size_t>> offset;
  for (const auto& [i, masks] : blocks) {
    std::vector<Generator> gens;
    for (unsigned r : masks) {
      offset[i][r] = gens.size();
      for (long b = 0; b < m.dim(r); ++b)
        gens.push_back(Generator{mask_complement(r, n)});
    }
    out.set_term(i, std::move(gens));
  }

  for (const auto& [i, masks] : blocks) {
    if (!out.has_term(i + 1)) continue;
    RatMatrix d(out.term(i + 1).size(), out.term(i).size());
    for (unsigned r : masks) {
      for (int j = 1; j <= n; ++j) {
        const unsigned bit = 1u << (j - 1);
        if (r & bit) continue;
        const unsigned rj = r | bit;
        if (m.dim(rj) == 0) continue;
        const int sign =
            mask_card(r & (bit - 1)) % 2 == 0 ? 1 : -1;  // (-1)^{alpha(j,R)}
        const RatMatrix& mv = m.mult(j, r);
        const std::size_t col0 = offset.at(i).at(r);
        const std::size_t row0 = offset.at(i + 1).at(rj);
        for (std::size_t bi = 0; bi < mv.rows(); ++bi)
          for (std::size_t bj = 0; bj < mv.cols(); ++bj)
            if (mv(bi, bj) != 0)
              d(row0 + bi, col0 + bj) += sign * mv(bi, bj);
      }
    }
    out.set_diff(i, std::move(d));
  }
  out.prune();
  return out;
}

}  // namespace sqt
