#ifndef IFORGE_ORACLE_HPP
#define IFORGE_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "iforge/composite.hpp"
#include "iforge/matrix.hpp"

namespace iforge {

enum class OracleMode { Exhaustive, Random };

/// Work limits for the ground-truth engines. Exhaustive enumeration is
/// refused when p^(n^2) would exceed 2^32.
struct OracleBudget {
  std::size_t max_dim;
  Field field;
  OracleMode mode;
  std::uint64_t seed;
  std::size_t samples;
};

/// p^(n^2) as a guarded count; throws InputError beyond 2^32.
std::uint64_t enumeration_budget(const Field& field, std::size_t n);

/// Streams every n x n matrix over GF(p), each exactly once, in odometer
/// order. Single-consumer.
class MatrixEnumerator {
 public:
  MatrixEnumerator(const Field& field, std::size_t n);
  std::optional<Matrix> next();

 private:
  Field field_;
  std::size_t n_;
  std::vector<std::uint64_t> digits_;
  bool done_ = false;
  bool first_ = true;
};

/// Streams exactly the idempotent matrices (M^2 = M) over GF(p).
class IdempotentEnumerator {
 public:
  IdempotentEnumerator(const Field& field, std::size_t n);
  std::optional<Matrix> next();

 private:
  MatrixEnumerator inner_;
};

/// Ground truth by enumeration: true iff some idempotent P makes
/// Q = beta^{-1}(A - alpha P) idempotent as well.
bool brute_force_decide(const Matrix& a, const Scalar& alpha, const Scalar& beta);

struct RandomComposite {
  Matrix a;
  Matrix p;
  Matrix q;
};

/// Deterministic per seed: two random conjugated rank projectors and their
/// weighted sum a = alpha p + beta q.
RandomComposite random_composite(const Field& field, std::size_t n,
                                 const Scalar& alpha, const Scalar& beta,
                                 std::uint64_t seed);

/// Seeded random matrix with small entries; handy for fuzzing and tests.
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols,
                     std::uint64_t seed);

/// Seeded random invertible matrix (rejection sampling on random_matrix).
Matrix random_invertible(const Field& field, std::size_t n, std::uint64_t seed);

}  // namespace iforge

#endif
