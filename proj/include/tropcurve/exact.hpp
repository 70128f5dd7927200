#pragma once

// Exact rational scalars, vectors and matrices.
//
// Everything in tropcurve is computed over Q with GMP-backed rationals; no
// floating point ever enters a geometric predicate.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropcurve {

/// Caller passed something the operation's contract forbids.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;
using LatticePoint = std::vector<std::int64_t>;

/// Parse "p/q", "p" or "-p/q". Result is canonicalized.
Rat parse_rat(std::string_view text);
std::string format_rat(const Rat &r);

RatVec to_ratvec(const LatticePoint &p);

/// Dense row-major rational matrix.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<RatVec> &rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  RatVec row(std::size_t r) const;
  RatVec operator*(const RatVec &x) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact solution of A x = b for square A; nullopt when A is singular.
std::optional<RatVec> solve_linear(const RatMatrix &a, const RatVec &b);

Rat determinant(const RatMatrix &a);

std::size_t rank(const RatMatrix &a);

/// Basis of { x : A x = 0 }, one vector per free column of the reduced
/// row echelon form.
std::vector<RatVec> nullspace(const RatMatrix &a);

/// Indices of the pivot columns of the row echelon form of A.
std::vector<std::size_t> pivot_columns(const RatMatrix &a);

/// v divided by the gcd of its entries.
std::vector<Int> primitive_vector(const std::vector<Int> &v);
LatticePoint primitive_vector(const LatticePoint &v);

/// Clears denominators of v and divides by the content; the result is the
/// primitive integer vector with the same direction.
std::vector<Int> primitive_direction(const RatVec &v);

Rat dot(const RatVec &a, const RatVec &b);
RatVec add(const RatVec &a, const RatVec &b);
RatVec sub(const RatVec &a, const RatVec &b);
RatVec scale(const RatVec &a, const Rat &s);
bool is_zero(const RatVec &v);

Int factorial(unsigned n);

} // namespace tropcurve
