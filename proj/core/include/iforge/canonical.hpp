#ifndef IFORGE_CANONICAL_HPP
#define IFORGE_CANONICAL_HPP

#include <cstddef>
#include <vector>

#include "iforge/matrix.hpp"
#include "iforge/polynomial.hpp"

namespace iforge {

/// Kernel-growth sequence n_k = dim ker (A - lambda I)^k - dim ker (...)^{k-1},
/// weakly decreasing, trailing zeros trimmed. n_k counts Jordan blocks of
/// size >= k for lambda.
struct WeyrSequence {
  std::vector<std::size_t> values;

  /// 1-indexed access, 0 past the end.
  std::size_t at(std::size_t k) const {
    return k >= 1 && k <= values.size() ? values[k - 1] : 0;
  }
  std::size_t sum() const;
  /// Conjugate partition: Jordan block sizes in weakly decreasing order.
  std::vector<std::size_t> block_sizes() const;
  bool operator==(const WeyrSequence& o) const { return values == o.values; }
  std::string to_string() const;
};

/// Jordan data for one base-field eigenvalue: block sizes (descending) and
/// explicit chains. chains[i] has sizes[i] columns c_1..c_k with
/// (A - lambda I) c_j = c_{j-1} and (A - lambda I) c_1 = 0.
struct JordanType {
  Scalar lambda;
  std::vector<std::size_t> sizes;
  std::vector<Matrix> chains;

  /// Number of blocks of size exactly k.
  std::size_t count_of_size(std::size_t k) const;
};

enum class SpectralPartId { Alpha, Beta, Zero, AlphaPlusBeta, Coprime };

const char* to_string(SpectralPartId id);

struct SpectralPart {
  SpectralPartId id;
  Matrix basis;        // n x d, columns span the part
  Matrix restriction;  // d x d action in that basis
  std::size_t dim() const { return basis.cols(); }
};

/// Direct-sum decomposition against the point set {0, alpha, beta,
/// alpha+beta}: one generalized eigenspace per distinct point plus the
/// complementary part whose minimal polynomial avoids all of them.
/// Labels whose scalar coincides with an earlier one are merged away
/// (alpha = beta, or alpha + beta = 0).
struct SpectralSplit {
  std::vector<SpectralPart> parts;  // order: Alpha, Beta, Zero, AlphaPlusBeta, Coprime
  Matrix global_basis;              // invertible; concatenated part bases

  const SpectralPart* find(SpectralPartId id) const;
};

/// Smallest monic annihilator of v under a: the minimal g with g(a)v = 0.
Polynomial vector_annihilator(const Matrix& a, const Matrix& v);

/// Monic minimal polynomial, as the lcm of standard-basis Krylov
/// annihilators. Independent of the Smith-form path.
Polynomial minimal_polynomial(const Matrix& a);

/// Nonconstant invariant factors f_1 | f_2 | ... | f_N with product equal
/// to the characteristic polynomial, via the Smith normal form of XI - A
/// over K[X].
std::vector<Polynomial> invariant_factors(const Matrix& a);

struct FrobeniusForm {
  Matrix form;                     // block_diag(companion(f_1), ..., companion(f_N))
  Matrix transform;                // invertible, conjugate(transform, form) = a
  std::vector<Polynomial> factors; // ascending divisibility chain
};

/// Rational canonical form with an explicit similarity, by cyclic
/// decomposition (maximal-annihilator generators against a growing
/// invariant subspace). Fully independent of invariant_factors().
FrobeniusForm frobenius_form(const Matrix& a);

/// A vector whose annihilator equals the minimal polynomial of a.
/// Deterministic candidate search; for a nonderogatory a this is a cyclic
/// vector.
Matrix maximal_vector(const Matrix& a);

/// Krylov matrix [v, a v, ..., a^{k-1} v].
Matrix krylov_matrix(const Matrix& a, const Matrix& v, std::size_t k);

WeyrSequence weyr_sequence(const Matrix& a, const Scalar& lambda);

JordanType jordan_type(const Matrix& a, const Scalar& lambda);

SpectralSplit spectral_split(const Matrix& a, const Scalar& alpha,
                             const Scalar& beta);

/// The deduplicated point set {0, alpha, beta, alpha+beta}, in that order.
std::vector<Scalar> special_points(const Scalar& alpha, const Scalar& beta);

}  // namespace iforge

#endif
