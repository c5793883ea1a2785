#ifndef IFORGE_COMPOSITE_HPP
#define IFORGE_COMPOSITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "iforge/canonical.hpp"
#include "iforge/matrix.hpp"

namespace iforge {

struct DecisionCheck {
  std::string id;  // intertwine_alpha_beta | intertwine_zero_t | invariant_factors_in_Y
  bool passed;
  bool vacuous;
  std::string detail;
};

/// Structured verdict of the composite criterion. verdict is the
/// conjunction of every non-vacuous check.
struct Decision {
  bool verdict;
  std::vector<DecisionCheck> checks;
};

/// Witness pair for a = alpha P + beta Q with P, Q idempotent; everything
/// exact and machine-checkable through verify().
struct Certificate {
  Matrix p;
  Matrix q;
  Scalar alpha;
  Scalar beta;
};

struct ConstructResult {
  Decision decision;
  std::optional<Certificate> certificate;  // present iff decision.verdict
};

/// Intertwinement of two weakly decreasing sequences: u_{k+1} <= v_k and
/// v_{k+1} <= u_k for every k >= 1, with zero padding.
bool intertwined(const WeyrSequence& u, const WeyrSequence& v);

/// Decides whether a is alpha P + beta Q for some idempotents P, Q.
/// A single criterion covers every scalar configuration:
///   (a) alpha != beta:     weyr(a, alpha) and weyr(a, beta) intertwined;
///   (b) alpha + beta != 0: weyr(a, 0) and weyr(a, alpha+beta) intertwined;
///   (c) always: every invariant factor, stripped of its roots in
///       {0, alpha, beta, alpha+beta}, is a polynomial in
///       Y = (X-alpha)(X-beta).
/// Degenerate scalar pairs make (a) or (b) vacuous.
Decision decide(const Matrix& a, const Scalar& alpha, const Scalar& beta);

/// Produces an exact certificate whenever decide() accepts; otherwise
/// returns the failing Decision. A certificate that fails verification is
/// an InternalError (never expected).
ConstructResult construct(const Matrix& a, const Scalar& alpha, const Scalar& beta);

bool verify(const Matrix& a, const Certificate& cert);

struct VerifyReport {
  bool p_idempotent;
  bool q_idempotent;
  bool sum_matches;
  bool ok() const { return p_idempotent && q_idempotent && sum_matches; }
};

VerifyReport verify_detailed(const Matrix& a, const Certificate& cert);

/// (a - alpha I)(a - beta I) = alpha beta (I - (P-Q)^2), and both P and Q
/// commute with the left-hand side.
bool commutation_identity_holds(const Matrix& a, const Certificate& cert);

/// im P and ker Q intersect trivially and fill the space.
bool image_kernel_direct(const Certificate& cert);

// --- certificate builders on canonical blocks ------------------------------

/// Certificate on any square matrix with no eigenvalue in
/// {0, alpha, beta, alpha+beta} whose invariant factors all lie in K[Y].
/// Also guarantees im P (+) ker Q spans everything.
Certificate build_coprime_part(const Matrix& a, const Scalar& alpha,
                               const Scalar& beta);

/// Certificate on block_diag(J_n(alpha), J_n(beta)), alpha != beta, with
/// the im P (+) ker Q guarantee.
Certificate build_pair_equal(std::size_t n, const Scalar& alpha, const Scalar& beta);

enum class BiggerSide { Alpha, Beta };

/// Certificate on block_diag(J_a(alpha), J_{a+1}(beta)) when side == Beta,
/// or block_diag(J_{a+1}(alpha), J_a(beta)) when side == Alpha.
Certificate build_pair_offset(std::size_t a, BiggerSide side, const Scalar& alpha,
                              const Scalar& beta);

/// Certificate with beta = -alpha on a nilpotent matrix, via the
/// checkerboard idempotents on each Jordan block.
Certificate build_nilpotent_diff(const Matrix& nilpotent, const Scalar& alpha);

/// Checkerboard idempotent pair on a single nilpotent Jordan block J_k(0):
/// P = D + S and Q = D + T with D = diag(1,0,1,0,...), S carrying 1/alpha
/// on odd superdiagonal slots and T carrying -1/alpha on even ones, so that
/// alpha (P - Q) = J_k(0).
std::pair<Matrix, Matrix> checkerboard_pair(const Field& field, std::size_t k,
                                            const Scalar& alpha);

/// Certificate on a matrix with all eigenvalues in {0, alpha+beta},
/// alpha+beta != 0, via the shift a - alpha I which has eigenvalues in
/// {-alpha, beta}.
Certificate build_shifted(const Matrix& m0, const Scalar& alpha, const Scalar& beta);

}  // namespace iforge

#endif
