#include "iforge/matrix.hpp"

#include <sstream>

#include "iforge/errors.hpp"

namespace iforge {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
  return m;
}

Matrix Matrix::zero(const Field& field, std::size_t rows, std::size_t cols) {
  return Matrix(field, rows, cols);
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  if (entries.empty()) throw InputError("empty column vector");
  Matrix m(entries[0].field(), entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::from_rows(const Field& field,
                         const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::of_ints(const Field& field,
                       const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::of(field, rows[i][j]));
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw InternalError("matrix index out of range");
  return entries_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw InternalError("matrix index out of range");
  if (v.field() != field_) throw InputError("entry field mismatch");
  entries_[i * cols_ + j] = v;
}

namespace {
void check_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw InputError("matrix field mismatch");
}
}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("matrix dimension mismatch in addition");
  }
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, a.at(i, j) + b.at(i, j));
    }
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix Matrix::operator-() const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, -at(i, j));
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw InputError("matrix dimension mismatch in multiplication");
  }
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j, out.at(i, j) + aik * b.at(k, j));
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j) * c);
  }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  check_same_field(*this, other);
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                         std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw InternalError("submatrix out of range");
  }
  Matrix out(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) out.set(i, j, at(row0 + i, col0 + j));
  }
  return out;
}

Matrix Matrix::column_at(std::size_t j) const { return submatrix(0, j, rows_, 1); }

Matrix Matrix::hstack(const Matrix& other) const {
  check_same_field(*this, other);
  if (rows_ != other.rows_) throw InputError("hstack row mismatch");
  Matrix out(field_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (std::size_t j = 0; j < other.cols_; ++j) {
      out.set(i, cols_ + j, other.at(i, j));
    }
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& other) const {
  check_same_field(*this, other);
  if (cols_ != other.cols_) throw InputError("vstack column mismatch");
  Matrix out(field_, rows_ + other.rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) out.set(i, j, at(i, j));
    for (std::size_t i = 0; i < other.rows_; ++i) {
      out.set(rows_ + i, j, other.at(i, j));
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) {
      os << at(i, j).to_string() << (j + 1 < cols_ ? " " : "");
    }
    os << (i + 1 < rows_ ? "\n" : "]");
  }
  return os.str();
}

Rref row_reduce(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot_row = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (!m.at(i, col).is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == m.rows()) continue;
    if (pivot_row != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Scalar tmp = m.at(r, j);
        m.set(r, j, m.at(pivot_row, j));
        m.set(pivot_row, j, tmp);
      }
    }
    Scalar inv = m.at(r, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.set(r, j, m.at(r, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.set(i, j, m.at(i, j) - factor * m.at(r, j));
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

Matrix kernel_basis(const Matrix& a) {
  Rref rr = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::size_t dim = a.cols() - rr.rank();
  Matrix out(a.field(), a.cols(), dim);
  std::size_t k = 0;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    out.set(free_col, k, Scalar::one(a.field()));
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
      out.set(rr.pivot_cols[i], k, -rr.reduced.at(i, free_col));
    }
    ++k;
  }
  return out;
}

std::optional<Matrix> solve_columns(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows()) throw InputError("solve dimension mismatch");
  Rref rr = row_reduce(a.hstack(b));
  // any pivot inside the right block means an inconsistent column
  for (std::size_t c : rr.pivot_cols) {
    if (c >= a.cols()) return std::nullopt;
  }
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x.set(rr.pivot_cols[i], j, rr.reduced.at(i, a.cols() + j));
    }
  }
  return x;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1) throw InputError("solve expects a column right-hand side");
  return solve_columns(a, b);
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw InputError("inverse of a non-square matrix");
  Rref rr = row_reduce(a.hstack(Matrix::identity(a.field(), a.rows())));
  if (rr.rank() < a.rows() || (a.rows() > 0 && rr.pivot_cols.back() >= a.cols())) {
    throw InputError("matrix is singular");
  }
  return rr.reduced.submatrix(0, a.cols(), a.rows(), a.cols());
}

bool is_invertible(const Matrix& a) {
  return a.is_square() && rank(a) == a.rows();
}

Matrix column_space_basis(const Matrix& a) {
  Rref rr = row_reduce(a);
  Matrix out(a.field(), a.rows(), rr.rank());
  for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      out.set(i, k, a.at(i, rr.pivot_cols[k]));
    }
  }
  return out;
}

Matrix companion(const Polynomial& p) {
  if (p.is_zero() || !p.is_monic() || p.degree() < 1) {
    throw InputError("companion matrix requires a monic polynomial of degree >= 1");
  }
  std::size_t n = p.degree();
  Matrix m(p.field(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i + 1, i, Scalar::one(p.field()));
  for (std::size_t i = 0; i < n; ++i) m.set(i, n - 1, -p.coeff(i));
  return m;
}

Matrix jordan_block(const Scalar& lambda, std::size_t n) {
  if (n == 0) throw InputError("jordan block of size zero");
  Matrix m(lambda.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, lambda);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.set(i, i + 1, Scalar::one(lambda.field()));
  }
  return m;
}

Matrix block_diag(const Field& field, const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const Matrix& b : blocks) {
    if (!b.is_square()) throw InputError("block_diag expects square blocks");
    if (b.field() != field) throw InputError("block_diag field mismatch");
    n += b.rows();
  }
  Matrix out(field, n, n);
  std::size_t off = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.set(off + i, off + j, b.at(i, j));
      }
    }
    off += b.rows();
  }
  return out;
}

Matrix phi(const Scalar& alpha, const Scalar& beta, const Matrix& a) {
  if (alpha.is_zero() || beta.is_zero()) {
    throw InputError("phi requires nonzero alpha and beta");
  }
  if (!a.is_square()) throw InputError("phi expects a square block");
  std::size_t m = a.rows();
  const Field& field = a.field();
  Matrix out(field, 2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    out.set(i, i, alpha);
    out.set(m + i, m + i, beta);
    out.set(m + i, i, Scalar::one(field));
    for (std::size_t j = 0; j < m; ++j) out.set(i, m + j, a.at(i, j));
  }
  return out;
}

Matrix conjugate(const Matrix& s, const Matrix& m) {
  return s * m * inverse(s);
}

Matrix eval(const Polynomial& f, const Matrix& a) {
  if (!a.is_square()) throw InputError("polynomial evaluation at a non-square matrix");
  Matrix acc = Matrix::zero(a.field(), a.rows(), a.rows());
  Matrix id = Matrix::identity(a.field(), a.rows());
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    acc = acc * a + id * f.coeff(k);
  }
  return acc;
}

Matrix matrix_power(const Matrix& a, std::size_t k) {
  if (!a.is_square()) throw InputError("power of a non-square matrix");
  Matrix acc = Matrix::identity(a.field(), a.rows());
  for (std::size_t i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

Matrix permute_indices(const Matrix& a, const std::vector<std::size_t>& sigma) {
  if (!a.is_square() || sigma.size() != a.rows()) {
    throw InternalError("permute_indices size mismatch");
  }
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, a.at(sigma[i], sigma[j]));
    }
  }
  return out;
}

}  // namespace iforge
