#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sqt {

using Int = mpz_class;
using Rat = mpq_class;
using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

/// Canonicalized rational from an integer pair.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

/// Parses "p" or "p/q"; throws domain_error on malformed input or q = 0.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

/// Dense rational matrix with immutable shape.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_zero() const;

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  RatMatrix transposed() const;
  RatMatrix negated() const;
  RatVector apply(const RatVector& v) const;  // matrix * column vector

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);

/// Binomial coefficient C(x, p) via the falling factorial
/// x(x-1)...(x-p+1)/p!, so x may be any integer; C(x, p) = 0 for p < 0.
Int binom(const Int& x, long p);
Int binom(long x, long p);

/// The (n+1) x (n+1) matrix with entry (i, j) = (-1)^j C(n-j, i).
RatMatrix transition_matrix(int n);

std::size_t rank(RatMatrix m);

/// Reduced row echelon form in place; returns the pivot columns.
/// Deterministic: pivots are the first nonzero entries top to bottom.
std::vector<std::size_t> rref_inplace(RatMatrix& m);

/// Basis of the right nullspace, in reduced-echelon form: one basis vector
/// per free column (ascending), with a 1 in that coordinate.  Deterministic.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// One solution of m x = b with free coordinates set to 0, or nullopt if the
/// system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Clears denominators, divides by the gcd and flips the sign so the first
/// nonzero entry is positive.  Throws domain_error on the zero vector.
IntVector primitive_vector(const RatVector& v);
IntVector primitive_vector(const IntVector& v);

/// Exact proportionality of two integer vectors (same length, cross products
/// equal).  Zero-length vectors are proportional; a zero vector is
/// proportional to anything of the same length.
bool proportional(const IntVector& x, const IntVector& y);

}  // namespace sqt
