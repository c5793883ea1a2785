#ifndef IFORGE_MATRIX_HPP
#define IFORGE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iforge/polynomial.hpp"
#include "iforge/scalar.hpp"

namespace iforge {

/// Dense exact matrix over Q or GF(p), row-major. Immutable in spirit:
/// operations return fresh values, entries are only mutated through set().
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix zero(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix column(const std::vector<Scalar>& entries);
  static Matrix from_rows(const Field& field,
                          const std::vector<std::vector<Scalar>>& rows);
  /// Convenience for tests and fixtures: integer entries.
  static Matrix of_ints(const Field& field,
                        const std::vector<std::vector<long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator*(const Scalar& c) const;
  Matrix operator-() const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                   std::size_t ncols) const;
  Matrix column_at(std::size_t j) const;
  /// [this | other], matching row counts.
  Matrix hstack(const Matrix& other) const;
  /// [this ; other], matching column counts.
  Matrix vstack(const Matrix& other) const;

  std::string to_string() const;  // diagnostics

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form with deterministic pivoting: first nonzero
/// entry in column order.
Rref row_reduce(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Columns form a basis of ker a; rank + kernel columns = cols, exactly.
Matrix kernel_basis(const Matrix& a);

/// Some solution of a x = b, or nullopt when inconsistent. Free variables
/// are set to zero, so the answer is deterministic.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Column-wise solve: x with a x = b for a matrix right-hand side.
std::optional<Matrix> solve_columns(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);  // throws InputError when singular

bool is_invertible(const Matrix& a);

/// Basis of the column space: the columns of a at its pivot positions.
Matrix column_space_basis(const Matrix& a);

/// Companion matrix with ones on the subdiagonal and the negated low
/// coefficients in the last column: for monic p = X^n - a_{n-1}X^{n-1}
/// - ... - a_0 the last column reads (a_0, ..., a_{n-1}).
Matrix companion(const Polynomial& p);

/// Jordan block: lambda on the diagonal, ones on the superdiagonal.
Matrix jordan_block(const Scalar& lambda, std::size_t n);

Matrix block_diag(const Field& field, const std::vector<Matrix>& blocks);

/// The 2m x 2m block matrix [[alpha I, a], [I, beta I]].
Matrix phi(const Scalar& alpha, const Scalar& beta, const Matrix& a);

/// Basis-change transport s * m * s^{-1}: if the columns of s are new-basis
/// vectors in old coordinates and m acts in the new basis, the result acts
/// in the old one.
Matrix conjugate(const Matrix& s, const Matrix& m);

/// Horner evaluation of a polynomial at a square matrix.
Matrix eval(const Polynomial& f, const Matrix& a);

Matrix matrix_power(const Matrix& a, std::size_t k);

/// Simultaneous row/column relabeling: result(i, j) = a(sigma[i], sigma[j]).
/// A similarity by the permutation that lists old index sigma[i] at new
/// position i; used to reorder diagonal blocks.
Matrix permute_indices(const Matrix& a, const std::vector<std::size_t>& sigma);

}  // namespace iforge

#endif
