#include "sqtriplets/sqmodule.hpp"

#include <sstream>

#include "sqtriplets/error.hpp"

namespace sqt {

SqModule::SqModule(int n) : n_(n) {
  if (n < 0 || n > 24) throw domain_error("variable count out of range");
  dims_.assign(1u << n, 0);
  mult_.assign((1u << n) * static_cast<unsigned>(n > 0 ? n : 1), RatMatrix());
}

void SqModule::set_dim(unsigned mask, long d) {
  if (d < 0) throw domain_error("negative dimension");
  dims_[mask] = d;
}

RatMatrix SqModule::mult(int v, unsigned mask) const {
  const RatMatrix& m = mult_[mask * static_cast<unsigned>(n_ > 0 ? n_ : 1) +
                             static_cast<unsigned>(v - 1)];
  const std::size_t rows =
      static_cast<std::size_t>(dims_[mask | (1u << (v - 1))]);
  const std::size_t cols = static_cast<std::size_t>(dims_[mask]);
  if (m.rows() == rows && m.cols() == cols) return m;
  if (rows == 0 || cols == 0) return RatMatrix(rows, cols);
  return m;  // mismatched nonzero shapes surface through validate()
}

void SqModule::set_mult(int v, unsigned mask, RatMatrix m) {
  mult_[mask * static_cast<unsigned>(n_ > 0 ? n_ : 1) +
        static_cast<unsigned>(v - 1)] = std::move(m);
}

RatMatrix SqModule::mult_path(unsigned from, unsigned to) const {
  if (!mask_subset(from, to)) throw internal_error("mult_path: not a subset");
  RatMatrix acc;
  bool started = false;
  unsigned cur = from;
  for (int v = 1; v <= n_; ++v) {
    const unsigned bit = 1u << (v - 1);
    if ((to & bit) == 0 || (from & bit) != 0) continue;
    const RatMatrix& step = mult(v, cur);
    acc = started ? step * acc : step;
    started = true;
    cur |= bit;
  }
  if (!started) return RatMatrix::identity(static_cast<std::size_t>(dim(from)));
  return acc;
}

bool SqModule::operator==(const SqModule& o) const {
  if (n_ != o.n_ || dims_ != o.dims_) return false;
  for (unsigned r = 0; r < degree_count(); ++r)
    for (int v = 1; v <= n_; ++v) {
      if ((r >> (v - 1)) & 1u) continue;
      if (!(mult(v, r) == o.mult(v, r))) return false;
    }
  return true;
}

bool SqModule::is_zero() const {
  for (long d : dims_)
    if (d != 0) return false;
  return true;
}

long SqModule::total_dim() const {
  long t = 0;
  for (long d : dims_) t += d;
  return t;
}

std::vector<std::string> SqModule::validate() const {
  std::vector<std::string> issues;
  auto note = [&](const std::string& s) { issues.push_back(s); };
  const unsigned count = degree_count();
  for (unsigned r = 0; r < count; ++r) {
    for (int v = 1; v <= n_; ++v) {
      if ((r >> (v - 1)) & 1u) continue;
      const unsigned rv = r | (1u << (v - 1));
      const RatMatrix& m = mult(v, r);
      const std::size_t want_rows = static_cast<std::size_t>(dims_[rv]);
      const std::size_t want_cols = static_cast<std::size_t>(dims_[r]);
      if (m.rows() != want_rows || m.cols() != want_cols) {
        if (!(want_rows == 0 || want_cols == 0) ||
            !(m.rows() == 0 && m.cols() == 0)) {
          std::ostringstream os;
          os << "mult shape mismatch at v=" << v << " R=" << mask_key(r, n_);
          note(os.str());
        }
      }
    }
  }
  if (!issues.empty()) return issues;
  // commuting squares: x_u x_v = x_v x_u out of every degree
  for (unsigned r = 0; r < count; ++r) {
    if (dims_[r] == 0) continue;
    for (int u = 1; u <= n_; ++u) {
      if ((r >> (u - 1)) & 1u) continue;
      for (int v = u + 1; v <= n_; ++v) {
        if ((r >> (v - 1)) & 1u) continue;
        const unsigned ru = r | (1u << (u - 1));
        const unsigned rv = r | (1u << (v - 1));
        if (dims_[ru | rv] == 0) continue;
        const RatMatrix lhs = mult(v, ru) * mult(u, r);
        const RatMatrix rhs = mult(u, rv) * mult(v, r);
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "square at R=" << mask_key(r, n_) << " u=" << u << " v=" << v
             << " does not commute";
          note(os.str());
        }
      }
    }
  }
  return issues;
}

SqModule standard_module(int n, unsigned a_mask, unsigned b_mask,
                         unsigned c_mask) {
  const unsigned full = (1u << n) - 1u;
  if ((a_mask | b_mask | c_mask) != full ||
      (a_mask & b_mask) != 0 || (a_mask & c_mask) != 0 ||
      (b_mask & c_mask) != 0)
    throw domain_error("standard_module: A, B, C must partition {1..n}");
  SqModule m(n);
  auto alive = [&](unsigned r) {
    return mask_subset(b_mask, r) && (r & a_mask) == 0;
  };
  for (unsigned r = 0; r <= full; ++r) m.set_dim(r, alive(r) ? 1 : 0);
  for (unsigned r = 0; r <= full; ++r) {
    if (!alive(r)) continue;
    for (int v = 1; v <= n; ++v) {
      const unsigned bit = 1u << (v - 1);
      if (r & bit) continue;
      if (alive(r | bit)) m.set_mult(v, r, RatMatrix::identity(1));
    }
  }
  return m;
}

SqModule alexander_dual_module(const SqModule& m) {
  const int n = m.n();
  SqModule out(n);
  const unsigned full = (1u << n) - 1u;
  for (unsigned r = 0; r <= full; ++r) out.set_dim(r, m.dim(full & ~r));
  for (unsigned r = 0; r <= full; ++r) {
    for (int v = 1; v <= n; ++v) {
      const unsigned bit = 1u << (v - 1);
      if (r & bit) continue;
      const unsigned rv = r | bit;
      if (out.dim(r) == 0 || out.dim(rv) == 0) continue;
      // dual of x_v : M_{(R+v)^c} -> M_{R^c}
      out.set_mult(v, r, m.mult(v, full & ~rv).transposed());
    }
  }
  return out;
}

Int squarefree_part_dim(const SqDegree& b, int d, int n) {
  if (d < 0 || d > n) throw domain_error("degree out of [0, n]");
  return binom(static_cast<long>(n - b.card()),
               static_cast<long>(d - b.card()));
}

BettiTable tor_betti(const SqModule& m) {
  const int n = m.n();
  BettiTable out;
  for (unsigned r = 0; r < (1u << n); ++r) {
    // Koszul complex of M restricted to degree R: homological degree j has
    // basis (S, b) with S a j-subset of R and b a basis vector of M_{R\S}.
    const std::vector<int> members = mask_members(r, n);
    const int rc = static_cast<int>(members.size());
    std::vector<std::vector<unsigned>> subsets(rc + 1);
    for (unsigned s = 0;; s = (s - r) & r) {  // iterate subsets of r
      subsets[mask_card(s)].push_back(s);
      if (s == r) break;
    }
    std::vector<std::vector<std::pair<unsigned, long>>> basis(rc + 1);
    for (int j = 0; j <= rc; ++j)
      for (unsigned s : subsets[j])
        for (long b = 0; b < m.dim(r & ~s); ++b) basis[j].push_back({s, b});

    auto index_of = [&](int j, unsigned s, long b) {
      long off = 0;
      for (unsigned t : subsets[j]) {
        if (t == s) break;
        off += m.dim(r & ~t);
      }
      return static_cast<std::size_t>(off + b);
    };

    std::vector<RatMatrix> d(rc + 1);  // d[j] : degree j -> j-1
    for (int j = 1; j <= rc; ++j) {
      RatMatrix mat(basis[j - 1].size(), basis[j].size());
      for (std::size_t col = 0; col < basis[j].size(); ++col) {
        const auto [s, b] = basis[j][col];
        int pos = 0;
        for (int v : mask_members(s, n)) {
          const unsigned s2 = s & ~(1u << (v - 1));
          const RatMatrix& mv = m.mult(v, r & ~s);
          const int sign = (pos % 2 == 0) ? 1 : -1;
          for (std::size_t row_b = 0; row_b < mv.rows(); ++row_b) {
            const Rat& coeff = mv(row_b, static_cast<std::size_t>(b));
            if (coeff == 0) continue;
            mat(index_of(j - 1, s2, static_cast<long>(row_b)), col) +=
                sign * coeff;
          }
          ++pos;
        }
      }
      d[j] = std::move(mat);
    }

    for (int j = 0; j <= rc; ++j) {
      const std::size_t dim_j = basis[j].size();
      if (dim_j == 0) continue;
      const std::size_t rank_out = (j >= 1) ? rank(d[j]) : 0;
      std::size_t rank_in = 0;
      if (j + 1 <= rc) rank_in = rank(d[j + 1]);
      const long h = static_cast<long>(dim_j - rank_out - rank_in);
      if (j >= 1 && dim_j < rank_out + rank_in)
        throw internal_error("tor_betti: negative homology dimension");
      out.add(-j, r, h);
    }
  }
  return out;
}

}  // namespace sqt
