#pragma once

// Exact integer and rational linear algebra.
//
// Everything here works over GMP integers/rationals; there is no floating
// point anywhere in the toolkit. Matrices are small (the largest in practice
// is 12 columns), so the algorithms favour clarity over asymptotics.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gitfan::ratlin {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Builds num/den in lowest terms. Throws InputError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (decimal integers). Throws InputError
/// ("invalid_rational") on anything else.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// A vector of rationals kept in canonical form (lowest terms, positive
// denominators) from construction onwards.
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::vector<Rational> entries);
  RatVector(std::initializer_list<Rational> entries);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const RatVector& a, const RatVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Rational> entries_;
};

// Dense row-major integer matrix with value semantics.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  /// All rows must have equal length. `cols` is needed when rows is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& cols,
                                std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Integer& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_list() const;
  std::vector<IntVector> column_list() const;

  IntMatrix transpose() const;
  IntMatrix select_columns(const std::vector<std::size_t>& which) const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// --- vector helpers -------------------------------------------------------

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
IntVector primitive(const IntVector& v);
bool is_zero(const IntVector& v);
/// Scales a rational vector by the lcm of the denominators and divides out
/// the gcd, giving the primitive integer vector on the same ray.
IntVector primitive(const std::vector<Rational>& v);
IntVector negate(IntVector v);
bool lex_less(const IntVector& a, const IntVector& b);

// --- normal forms ---------------------------------------------------------

struct HermiteResult {
  IntMatrix H;  // row-style HNF of the input
  IntMatrix U;  // unimodular, H = U * M
};

/// Row-style Hermite normal form: H is in echelon form, pivots are positive,
/// and the entries above each pivot lie in [0, pivot). Zero rows come last.
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SmithResult {
  IntMatrix S;  // diagonal, d1 | d2 | ...
  IntMatrix U;  // unimodular rows x rows
  IntMatrix V;  // unimodular cols x cols, S = U * M * V
};

SmithResult smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);
/// Bareiss fraction-free determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Rows form a Z-basis of {x in Z^cols : m x = 0}, in Hermite normal form.
/// The result has cols(m) - rank(m) rows (possibly zero).
IntMatrix kernel_lattice_basis(const IntMatrix& m);

/// Row lattices coincide. Both inputs must have the same column count.
bool lattices_equal(const IntMatrix& b1, const IntMatrix& b2);

// --- subspaces over Q -----------------------------------------------------

/// Canonical integer basis of the Q-span of `vectors`: the reduced row
/// echelon form with each row scaled to a primitive integer vector.
std::vector<IntVector> span_basis(const std::vector<IntVector>& vectors,
                                  std::size_t dim);
/// Canonical basis of the orthogonal complement of span(vectors).
std::vector<IntVector> orthogonal_complement(
    const std::vector<IntVector>& vectors, std::size_t dim);
/// Orthogonal projection of v onto span(basis)^perp, scaled to a primitive
/// integer vector (zero if v lies in the span).
IntVector project_out(const IntVector& v, const std::vector<IntVector>& basis);

// --- exact linear programming ---------------------------------------------

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;
  Rational value;
};

/// maximize c.x subject to A x = b, x >= 0. Two-phase simplex over exact
/// rationals with Bland's rule, so it always terminates.
LpResult maximize(const std::vector<std::vector<Rational>>& A,
                  const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

}  // namespace gitfan::ratlin
