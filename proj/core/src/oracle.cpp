#include "iforge/oracle.hpp"

#include <random>

#include "iforge/errors.hpp"

namespace iforge {

std::uint64_t enumeration_budget(const Field& field, std::size_t n) {
  if (!field.is_prime_field()) {
    throw InputError("exhaustive enumeration needs a finite field");
  }
  const std::uint64_t limit = std::uint64_t{1} << 32;
  std::uint64_t p = field.modulus();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (count > limit / p) {
      throw InputError("enumeration budget exceeded: p^(n^2) > 2^32");
    }
    count *= p;
  }
  return count;
}

MatrixEnumerator::MatrixEnumerator(const Field& field, std::size_t n)
    : field_(field), n_(n), digits_(n * n, 0) {
  enumeration_budget(field, n);
}

std::optional<Matrix> MatrixEnumerator::next() {
  if (done_) return std::nullopt;
  if (!first_) {
    // odometer increment
    std::size_t i = 0;
    std::uint64_t p = field_.modulus();
    for (; i < digits_.size(); ++i) {
      if (++digits_[i] < p) break;
      digits_[i] = 0;
    }
    if (i == digits_.size()) {
      done_ = true;
      return std::nullopt;
    }
  }
  first_ = false;
  Matrix m(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      m.set(i, j, Scalar::of(field_, static_cast<long>(digits_[i * n_ + j])));
    }
  }
  return m;
}

IdempotentEnumerator::IdempotentEnumerator(const Field& field, std::size_t n)
    : inner_(field, n) {}

std::optional<Matrix> IdempotentEnumerator::next() {
  while (auto m = inner_.next()) {
    if (*m * *m == *m) return m;
  }
  return std::nullopt;
}

bool brute_force_decide(const Matrix& a, const Scalar& alpha, const Scalar& beta) {
  if (!a.is_square()) throw InputError("brute force expects a square matrix");
  Scalar inv_beta = beta.inverse();
  IdempotentEnumerator idempotents(a.field(), a.rows());
  while (auto p = idempotents.next()) {
    Matrix q = (a - *p * alpha) * inv_beta;
    if (q * q == q) return true;
  }
  return false;
}

namespace {

// values are drawn with gen() % k instead of std::uniform_int_distribution
// so that streams are identical across standard libraries
Scalar random_scalar(const Field& field, std::mt19937_64& gen) {
  if (field.is_prime_field()) {
    return Scalar::of(field, static_cast<long>(gen() % field.modulus()));
  }
  return Scalar::of(field, static_cast<long>(gen() % 7) - 3);  // small range for Q
}

Matrix random_matrix_inner(const Field& field, std::size_t rows, std::size_t cols,
                           std::mt19937_64& gen) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(field, gen));
  }
  return m;
}

Matrix random_invertible_inner(const Field& field, std::size_t n,
                               std::mt19937_64& gen) {
  while (true) {
    Matrix m = random_matrix_inner(field, n, n, gen);
    if (is_invertible(m)) return m;
  }
}

}  // namespace

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols,
                     std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_matrix_inner(field, rows, cols, gen);
}

Matrix random_invertible(const Field& field, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_invertible_inner(field, n, gen);
}

RandomComposite random_composite(const Field& field, std::size_t n,
                                 const Scalar& alpha, const Scalar& beta,
                                 std::uint64_t seed) {
  if (n == 0) throw InputError("random_composite needs n >= 1");
  std::mt19937_64 gen(seed);
  std::size_t rank_p = gen() % (n + 1);
  std::size_t rank_q = gen() % (n + 1);

  auto projector = [&](std::size_t r) {
    Matrix s = random_invertible_inner(field, n, gen);
    Matrix d(field, n, n);
    for (std::size_t i = 0; i < r; ++i) d.set(i, i, Scalar::one(field));
    return conjugate(s, d);
  };
  Matrix p = projector(rank_p);
  Matrix q = projector(rank_q);
  return {p * alpha + q * beta, p, q};
}

}  // namespace iforge
