#include "sqtriplets/exact.hpp"

#include <algorithm>

#include "sqtriplets/error.hpp"

namespace sqt {

Rat rat(long num, long den) { return rat(Int(num), Int(den)); }

Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw domain_error("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return rat(num, den);
  } catch (const std::invalid_argument&) {
    throw domain_error("malformed rational literal: " + s);
  }
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatMatrix RatMatrix::identity(std::size_t k) {
  RatMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::negated() const {
  RatMatrix t(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(i, j) = -(*this)(i, j);
  return t;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw internal_error("matrix/vector shape mismatch");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols() != y.rows()) throw internal_error("matrix product shape mismatch");
  RatMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j)
        if (y(k, j) != 0) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

Int binom(const Int& x, long p) {
  if (p < 0) return 0;
  Int result = 1;
  for (long i = 0; i < p; ++i) {
    result *= x - i;
    // the running product of i+1 consecutive integers is divisible by (i+1)!
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(i + 1));
  }
  return result;
}

Int binom(long x, long p) { return binom(Int(x), p); }

RatMatrix transition_matrix(int n) {
  if (n < 0) throw domain_error("transition_matrix needs n >= 0");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  RatMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Int e = binom(Int(n - static_cast<long>(j)), static_cast<long>(i));
      if (j % 2 == 1) e = -e;
      a(i, j) = Rat(e);
    }
  return a;
}

std::vector<std::size_t> rref_inplace(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(sel, j));
    const Rat pivot = m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return rref_inplace(m).size(); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  const std::vector<std::size_t> pivots = rref_inplace(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw internal_error("solve: rhs length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const std::vector<std::size_t> pivots = rref_inplace(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

IntVector primitive_vector(const RatVector& v) {
  Int scale = 1;
  for (const Rat& q : v) scale = lcm(scale, q.get_den());
  IntVector ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(scale);
    ints[i] = scaled.get_num();
  }
  return primitive_vector(ints);
}

IntVector primitive_vector(const IntVector& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw domain_error("primitive_vector: zero vector");
  IntVector out(v.size());
  int lead = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] / g;
    if (lead == 0 && out[i] != 0) lead = sgn(out[i]);
  }
  if (lead < 0)
    for (Int& x : out) x = -x;
  return out;
}

bool proportional(const IntVector& x, const IntVector& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] * y[j] != x[j] * y[i]) return false;
  return true;
}

}  // namespace sqt
