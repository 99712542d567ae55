#pragma once

// Exact linear algebra over the rationals and over Q[eps], where eps is a
// symbolic positive infinitesimal. Nothing in here ever touches a float.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dichromate/errors.hpp"

namespace dichromate {

using BigInt = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, denominator > 0

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// A polynomial in eps with rational coefficients, stored as terms sorted by
/// strictly increasing degree with no zero coefficients. The empty term list
/// is the zero polynomial.
class EpsPoly {
 public:
  struct Term {
    int degree;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  EpsPoly() = default;
  EpsPoly(const Rational& constant);  // NOLINT: rationals embed at degree 0
  EpsPoly(long constant) : EpsPoly(Rational(constant)) {}  // NOLINT
  explicit EpsPoly(std::vector<Term> terms);

  static EpsPoly monomial(const Rational& coeff, int degree);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int lowest_degree() const;  // requires !is_zero()
  int highest_degree() const;  // requires !is_zero()

  // Sign of the polynomial for every sufficiently small eps > 0.
  int sign() const;

  EpsPoly operator-() const;
  EpsPoly& operator+=(const EpsPoly& rhs);
  EpsPoly& operator-=(const EpsPoly& rhs);
  friend EpsPoly operator+(EpsPoly lhs, const EpsPoly& rhs) { return lhs += rhs; }
  friend EpsPoly operator-(EpsPoly lhs, const EpsPoly& rhs) { return lhs -= rhs; }
  friend EpsPoly operator*(const EpsPoly& lhs, const EpsPoly& rhs);
  bool operator==(const EpsPoly&) const = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

// Quotient of a by b when b divides a exactly; throws ContractViolation
// otherwise. Bareiss elimination only ever asks for exact quotients.
EpsPoly exact_divide(const EpsPoly& a, const EpsPoly& b);
inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }
inline bool is_zero(const EpsPoly& p) { return p.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DimensionError("matrix entry count does not match its shape");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<T>& entries() const { return entries_; }

  Matrix select_columns(const std::vector<std::size_t>& cols) const {
    Matrix out(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
    return out;
  }

  Matrix select_rows(const std::vector<std::size_t>& rows) const {
    Matrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using RatMatrix = Matrix<Rational>;
using EpsMatrix = Matrix<EpsPoly>;

EpsMatrix to_eps(const RatMatrix& m);
// The rational matrix when every entry has degree 0, nothing otherwise.
std::optional<RatMatrix> to_rational(const EpsMatrix& m);

// Fraction-free (Bareiss) determinant over an integral domain with exact
// division. Row swaps are tracked in the sign.
template <class T>
T bareiss_determinant(Matrix<T> a) {
  const std::size_t n = a.rows();
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (n == 0) return T(1L);
  bool negate = false;
  T previous(1L);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(a(pivot, k))) ++pivot;
    if (pivot == n) return T();
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_divide(a(i, j) * a(k, k) - a(i, k) * a(k, j), previous);
      }
      a(i, k) = T();
    }
    previous = a(k, k);
  }
  T det = a(n - 1, n - 1);
  return negate ? T(-det) : det;
}

// Rank by fraction-free elimination with full pivoting.
template <class T>
std::size_t bareiss_rank(Matrix<T> a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  T previous(1L);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t j = k; j < cols && pr == rows; ++j)
      for (std::size_t i = k; i < rows; ++i)
        if (!is_zero(a(i, j))) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    if (pr != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(k, j), a(pr, j));
    if (pc != k)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, k), a(i, pc));
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j)
        a(i, j) = exact_divide(a(i, j) * a(k, k) - a(i, k) * a(k, j), previous);
      a(i, k) = T();
    }
    previous = a(k, k);
    ++rank;
  }
  return rank;
}

/// Sign of det(m) as eps -> 0+: the sign of the lowest-degree nonzero
/// coefficient, 0 iff the determinant vanishes identically.
int det_sign_eps(const EpsMatrix& m);

Rational det_rat(const RatMatrix& m);
std::size_t rank_rat(const RatMatrix& m);
// Rank over the field Q(eps), which is the rank for all small eps > 0.
std::size_t rank_eps(const EpsMatrix& m);

struct RowEchelon {
  RatMatrix reduced;  // reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon reduced_row_echelon(const RatMatrix& m);

struct StandardForm {
  // perm[j] is the original column placed at position j; a basis comes first.
  std::vector<std::size_t> perm;
  RatMatrix c;  // r x (n - r)
  std::size_t rank = 0;

  // The matrix (I_r | C) on the permuted columns.
  RatMatrix assemble() const;
};

/// Row-reduces m to (I_r | C) after moving a basis to the front. With no
/// basis given (0-based columns), the lexicographically smallest column basis
/// is used. Throws InvalidBasisError if the supplied columns are dependent,
/// repeated, out of range or not of size rank(m).
StandardForm standard_form(const RatMatrix& m,
                           const std::optional<std::vector<std::size_t>>& basis = std::nullopt);

}  // namespace dichromate
