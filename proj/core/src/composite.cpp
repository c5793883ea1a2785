#include "iforge/composite.hpp"

#include <algorithm>

#include "iforge/errors.hpp"

namespace iforge {

namespace {

void check_scalars(const Matrix& a, const Scalar& alpha, const Scalar& beta) {
  if (!a.is_square() || a.rows() == 0) {
    throw InputError("expected a nonempty square matrix");
  }
  if (alpha.field() != a.field() || beta.field() != a.field()) {
    throw InputError("scalar field does not match the matrix field");
  }
  if (alpha.is_zero() || beta.is_zero()) {
    throw InputError("alpha and beta must be nonzero");
  }
}

Matrix scaled_identity(const Field& field, std::size_t n, const Scalar& c) {
  return Matrix::identity(field, n) * c;
}

}  // namespace

bool intertwined(const WeyrSequence& u, const WeyrSequence& v) {
  std::size_t upper = std::max(u.values.size(), v.values.size());
  for (std::size_t k = 1; k <= upper; ++k) {
    if (u.at(k + 1) > v.at(k) || v.at(k + 1) > u.at(k)) return false;
  }
  return true;
}

Decision decide(const Matrix& a, const Scalar& alpha, const Scalar& beta) {
  check_scalars(a, alpha, beta);
  Scalar t = alpha + beta;
  Decision d{true, {}};

  {
    DecisionCheck c{"intertwine_alpha_beta", true, alpha == beta, ""};
    if (c.vacuous) {
      c.detail = "alpha = beta";
    } else {
      WeyrSequence u = weyr_sequence(a, alpha);
      WeyrSequence v = weyr_sequence(a, beta);
      c.passed = intertwined(u, v);
      c.detail = "weyr(alpha)=" + u.to_string() + ", weyr(beta)=" + v.to_string();
    }
    d.checks.push_back(c);
  }
  {
    DecisionCheck c{"intertwine_zero_t", true, t.is_zero(), ""};
    if (c.vacuous) {
      c.detail = "alpha + beta = 0";
    } else {
      WeyrSequence u = weyr_sequence(a, Scalar::zero(a.field()));
      WeyrSequence v = weyr_sequence(a, t);
      c.passed = intertwined(u, v);
      c.detail = "weyr(0)=" + u.to_string() + ", weyr(alpha+beta)=" + v.to_string();
    }
    d.checks.push_back(c);
  }
  {
    DecisionCheck c{"invariant_factors_in_Y", true, false, ""};
    std::vector<Scalar> points = special_points(alpha, beta);
    std::vector<Polynomial> factors = invariant_factors(a);
    for (const Polynomial& f : factors) {
      Polynomial stripped = strip_roots(f, points).stripped;
      if (!is_poly_in_y(stripped, alpha, beta).yes) {
        c.passed = false;
        c.detail = "factor " + f.to_string() + " strips to " + stripped.to_string() +
                   ", not a polynomial in (X-alpha)(X-beta)";
        break;
      }
    }
    if (c.passed) {
      c.detail = "all " + std::to_string(factors.size()) +
                 " invariant factors reduce into K[Y]";
    }
    d.checks.push_back(c);
  }

  for (const DecisionCheck& c : d.checks) {
    if (!c.vacuous && !c.passed) d.verdict = false;
  }
  return d;
}

VerifyReport verify_detailed(const Matrix& a, const Certificate& cert) {
  if (cert.p.rows() != a.rows() || cert.p.cols() != a.cols() ||
      cert.q.rows() != a.rows() || cert.q.cols() != a.cols() || !a.is_square()) {
    throw InputError("certificate dimensions do not match the matrix");
  }
  if (cert.p.field() != a.field() || cert.q.field() != a.field() ||
      cert.alpha.field() != a.field() || cert.beta.field() != a.field()) {
    throw InputError("certificate field mismatch");
  }
  VerifyReport r{};
  r.p_idempotent = cert.p * cert.p == cert.p;
  r.q_idempotent = cert.q * cert.q == cert.q;
  r.sum_matches = cert.p * cert.alpha + cert.q * cert.beta == a;
  return r;
}

bool verify(const Matrix& a, const Certificate& cert) {
  return verify_detailed(a, cert).ok();
}

bool commutation_identity_holds(const Matrix& a, const Certificate& cert) {
  const Field& field = a.field();
  std::size_t n = a.rows();
  Matrix lhs = (a - scaled_identity(field, n, cert.alpha)) *
               (a - scaled_identity(field, n, cert.beta));
  Matrix diff = cert.p - cert.q;
  Matrix rhs = (Matrix::identity(field, n) - diff * diff) * (cert.alpha * cert.beta);
  return lhs == rhs && cert.p * lhs == lhs * cert.p && cert.q * lhs == lhs * cert.q;
}

bool image_kernel_direct(const Certificate& cert) {
  Matrix joint = column_space_basis(cert.p).hstack(kernel_basis(cert.q));
  return joint.cols() == cert.p.rows() && rank(joint) == cert.p.rows();
}

// ---------------------------------------------------------------------------
// builders

std::pair<Matrix, Matrix> checkerboard_pair(const Field& field, std::size_t k,
                                            const Scalar& alpha) {
  if (alpha.is_zero()) throw InputError("checkerboard pair needs alpha != 0");
  Scalar inv = alpha.inverse();
  Matrix p(field, k, k), q(field, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i % 2 == 0) {
      p.set(i, i, Scalar::one(field));
      q.set(i, i, Scalar::one(field));
    }
    if (i + 1 < k) {
      if (i % 2 == 0) {
        p.set(i, i + 1, inv);
      } else {
        q.set(i, i + 1, -inv);
      }
    }
  }
  return {p, q};
}

Certificate build_nilpotent_diff(const Matrix& nilpotent, const Scalar& alpha) {
  Scalar beta = -alpha;
  check_scalars(nilpotent, alpha, alpha);
  const Field& field = nilpotent.field();
  std::size_t n = nilpotent.rows();
  if (!matrix_power(nilpotent, n).is_zero()) {
    throw InputError("build_nilpotent_diff expects a nilpotent matrix");
  }

  JordanType jt = jordan_type(nilpotent, Scalar::zero(field));
  Matrix basis(field, n, 0);
  std::vector<Matrix> p_blocks, q_blocks;
  for (std::size_t i = 0; i < jt.chains.size(); ++i) {
    basis = basis.hstack(jt.chains[i]);
    auto [pb, qb] = checkerboard_pair(field, jt.sizes[i], alpha);
    p_blocks.push_back(pb);
    q_blocks.push_back(qb);
  }
  Certificate cert{conjugate(basis, block_diag(field, p_blocks)),
                   conjugate(basis, block_diag(field, q_blocks)), alpha, beta};
  if (!verify(nilpotent, cert)) {
    throw InternalError("nilpotent checkerboard certificate failed to verify");
  }
  return cert;
}

namespace {

// phi-block idempotents: alpha [[I,0],[a^{-1}I,0]] + beta [[0,b^{-1}C],[0,I]]
// = [[alpha I, C],[I, beta I]]
std::pair<Matrix, Matrix> phi_idempotents(const Scalar& alpha, const Scalar& beta,
                                          const Matrix& c) {
  const Field& field = c.field();
  std::size_t m = c.rows();
  Matrix p(field, 2 * m, 2 * m), q(field, 2 * m, 2 * m);
  Scalar ia = alpha.inverse(), ib = beta.inverse();
  for (std::size_t i = 0; i < m; ++i) {
    p.set(i, i, Scalar::one(field));
    p.set(m + i, i, ia);
    q.set(m + i, m + i, Scalar::one(field));
    for (std::size_t j = 0; j < m; ++j) q.set(i, m + j, ib * c.at(i, j));
  }
  return {p, q};
}

// Conjugates the canonical phi(alpha, beta, companion(g)) idempotents into
// the coordinates of companion(g(Y)); the phi block is cyclic with minimal
// polynomial g(Y), which is verified rather than assumed.
std::pair<Matrix, Matrix> companion_block_idempotents(const Polynomial& g,
                                                      const Scalar& alpha,
                                                      const Scalar& beta) {
  const Field& field = g.field();
  Matrix cg = companion(g);
  Matrix m_phi = phi(alpha, beta, cg);
  std::size_t dim = m_phi.rows();

  Matrix v = maximal_vector(m_phi);
  Polynomial ann = vector_annihilator(m_phi, v);
  if (ann != compose_in_y(g, alpha, beta)) {
    throw InternalError("phi block minimal polynomial is not g(Y)");
  }
  Matrix krylov = krylov_matrix(m_phi, v, dim);
  Matrix krylov_inv = inverse(krylov);

  auto [p_hat, q_hat] = phi_idempotents(alpha, beta, cg);
  return {krylov_inv * p_hat * krylov, krylov_inv * q_hat * krylov};
}

}  // namespace

Certificate build_pair_equal(std::size_t n, const Scalar& alpha, const Scalar& beta) {
  if (n == 0) throw InputError("build_pair_equal needs n >= 1");
  if (alpha == beta) throw InputError("build_pair_equal requires alpha != beta");
  if (alpha.is_zero() || beta.is_zero()) throw InputError("alpha, beta must be nonzero");
  const Field& field = alpha.field();

  Matrix target = block_diag(
      field, {jordan_block(alpha, n), jordan_block(beta, n)});

  // (X-alpha)^n (X-beta)^n = Y^n, so the pair block is similar to
  // phi(alpha, beta, companion(Z^n)); transport through the two Krylov bases.
  Polynomial g = Polynomial::monomial(Scalar::one(field), n);
  auto [p_c, q_c] = companion_block_idempotents(g, alpha, beta);

  Matrix v = maximal_vector(target);
  Polynomial ann = vector_annihilator(target, v);
  if (ann.degree() != 2 * n) {
    throw InternalError("jordan pair block is not cyclic");
  }
  Matrix krylov = krylov_matrix(target, v, 2 * n);

  Certificate cert{conjugate(krylov, p_c), conjugate(krylov, q_c), alpha, beta};
  if (!verify(target, cert) || !image_kernel_direct(cert)) {
    throw InternalError("equal-pair certificate failed to verify");
  }
  return cert;
}

Certificate build_pair_offset(std::size_t a, BiggerSide side, const Scalar& alpha,
                              const Scalar& beta) {
  if (a == 0) throw InputError("build_pair_offset needs the smaller size >= 1");
  if (alpha == beta) throw InputError("build_pair_offset requires alpha != beta");

  const Field& field = alpha.field();
  if (side == BiggerSide::Alpha) {
    // swap roles, build the beta-bigger shape, then relist the blocks
    Certificate swapped = build_pair_offset(a, BiggerSide::Beta, beta, alpha);
    std::size_t dim = 2 * a + 1;
    std::vector<std::size_t> sigma;
    for (std::size_t i = a; i < dim; ++i) sigma.push_back(i);
    for (std::size_t i = 0; i < a; ++i) sigma.push_back(i);
    Certificate cert{permute_indices(swapped.q, sigma),
                     permute_indices(swapped.p, sigma), alpha, beta};
    Matrix target = block_diag(
        field, {jordan_block(alpha, a + 1), jordan_block(beta, a)});
    if (!verify(target, cert)) {
      throw InternalError("offset certificate (alpha side) failed to verify");
    }
    return cert;
  }

  Certificate base = build_pair_equal(a, alpha, beta);
  std::size_t dim = 2 * a;

  Matrix im_p = column_space_basis(base.p);
  Matrix ker_q = kernel_basis(base.q);
  if (rank(im_p.hstack(ker_q)) != dim) {
    throw InternalError("im P and ker Q are not complementary");
  }

  // split the connecting column e_{2a} as alpha C1 + beta C2 with
  // C1 in im P, C2 in ker Q (unique by directness)
  Matrix c(field, dim, 1);
  c.set(dim - 1, 0, Scalar::one(field));
  Matrix system = (im_p * alpha).hstack(ker_q * beta);
  auto z = solve(system, c);
  if (!z) throw InternalError("connecting column has no direct-sum split");
  Matrix z1 = z->submatrix(0, 0, im_p.cols(), 1);
  Matrix z2 = z->submatrix(im_p.cols(), 0, ker_q.cols(), 1);
  Matrix c1 = im_p * z1;
  Matrix c2 = ker_q * z2;

  Matrix p1(field, dim + 1, dim + 1), q1(field, dim + 1, dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      p1.set(i, j, base.p.at(i, j));
      q1.set(i, j, base.q.at(i, j));
    }
    p1.set(i, dim, c1.at(i, 0));
    q1.set(i, dim, c2.at(i, 0));
  }
  q1.set(dim, dim, Scalar::one(field));

  Certificate cert{p1, q1, alpha, beta};
  Matrix target = block_diag(
      field, {jordan_block(alpha, a), jordan_block(beta, a + 1)});
  if (!verify(target, cert)) {
    throw InternalError("offset certificate (beta side) failed to verify");
  }
  return cert;
}

namespace {

// Certificate for a matrix whose eigenvalues all lie in {alpha, beta},
// alpha != beta: sort both Jordan size lists descending, pair them
// index-wise (the intertwinement condition caps the gap at 1 and caps
// leftovers at size 1), and transport the block certificates through the
// chain bases.
Certificate alphabeta_pair_certificate(const Matrix& m, const Scalar& alpha,
                                       const Scalar& beta) {
  check_scalars(m, alpha, beta);
  if (alpha == beta) throw InternalError("pairing machinery needs alpha != beta");
  const Field& field = m.field();
  std::size_t n = m.rows();

  JordanType ja = jordan_type(m, alpha);
  JordanType jb = jordan_type(m, beta);
  std::size_t covered = 0;
  for (std::size_t s : ja.sizes) covered += s;
  for (std::size_t s : jb.sizes) covered += s;
  if (covered != n) {
    throw InputError("matrix has eigenvalues outside {alpha, beta}");
  }

  Matrix basis(field, n, 0);
  std::vector<Matrix> p_blocks, q_blocks;
  std::size_t pairs = std::min(ja.sizes.size(), jb.sizes.size());
  for (std::size_t i = 0; i < pairs; ++i) {
    std::size_t sa = ja.sizes[i], sb = jb.sizes[i];
    basis = basis.hstack(ja.chains[i]).hstack(jb.chains[i]);
    Certificate block = sa == sb ? build_pair_equal(sa, alpha, beta)
                       : sb == sa + 1
                           ? build_pair_offset(sa, BiggerSide::Beta, alpha, beta)
                       : sa == sb + 1
                           ? build_pair_offset(sb, BiggerSide::Alpha, alpha, beta)
                           : throw InternalError("paired Jordan sizes differ by 2+");
    p_blocks.push_back(block.p);
    q_blocks.push_back(block.q);
  }
  for (std::size_t i = pairs; i < ja.sizes.size(); ++i) {
    if (ja.sizes[i] != 1) throw InternalError("unpaired alpha block of size >= 2");
    basis = basis.hstack(ja.chains[i]);
    p_blocks.push_back(Matrix::identity(field, 1));
    q_blocks.push_back(Matrix::zero(field, 1, 1));
  }
  for (std::size_t i = pairs; i < jb.sizes.size(); ++i) {
    if (jb.sizes[i] != 1) throw InternalError("unpaired beta block of size >= 2");
    basis = basis.hstack(jb.chains[i]);
    p_blocks.push_back(Matrix::zero(field, 1, 1));
    q_blocks.push_back(Matrix::identity(field, 1));
  }

  Certificate cert{conjugate(basis, block_diag(field, p_blocks)),
                   conjugate(basis, block_diag(field, q_blocks)), alpha, beta};
  if (!verify(m, cert)) {
    throw InternalError("alpha/beta pairing certificate failed to verify");
  }
  return cert;
}

}  // namespace

Certificate build_shifted(const Matrix& m0, const Scalar& alpha, const Scalar& beta) {
  check_scalars(m0, alpha, beta);
  Scalar t = alpha + beta;
  if (t.is_zero()) throw InputError("build_shifted requires alpha + beta != 0");
  const Field& field = m0.field();
  std::size_t n = m0.rows();

  Polynomial mu = minimal_polynomial(m0);
  if (!strip_roots(mu, {Scalar::zero(field), t}).stripped.is_constant()) {
    throw InputError("build_shifted expects eigenvalues inside {0, alpha+beta}");
  }
  if (!intertwined(weyr_sequence(m0, Scalar::zero(field)), weyr_sequence(m0, t))) {
    throw InputError("Weyr sequences at 0 and alpha+beta are not intertwined");
  }

  // m0 - alpha I has its eigenvalues in {-alpha, beta}, and -alpha != beta
  Matrix shifted = m0 - scaled_identity(field, n, alpha);
  Certificate inner = alphabeta_pair_certificate(shifted, -alpha, beta);
  Certificate cert{Matrix::identity(field, n) - inner.p, inner.q, alpha, beta};
  if (!verify(m0, cert)) {
    throw InternalError("shifted certificate failed to verify");
  }
  return cert;
}

Certificate build_coprime_part(const Matrix& a, const Scalar& alpha,
                               const Scalar& beta) {
  check_scalars(a, alpha, beta);
  const Field& field = a.field();

  Polynomial mu = minimal_polynomial(a);
  for (const Scalar& s : special_points(alpha, beta)) {
    if (eval(mu, s).is_zero()) {
      throw InputError("matrix has an eigenvalue in {0, alpha, beta, alpha+beta}");
    }
  }

  FrobeniusForm fr = frobenius_form(a);
  std::vector<Matrix> p_blocks, q_blocks;
  for (const Polynomial& f : fr.factors) {
    YMembership ym = is_poly_in_y(f, alpha, beta);
    if (!ym.yes) {
      throw InputError("invariant factor " + f.to_string() +
                       " is not a polynomial in (X-alpha)(X-beta)");
    }
    if (!ym.witness.is_monic()) {
      throw InternalError("Y-witness of a monic factor is not monic");
    }
    auto [pb, qb] = companion_block_idempotents(ym.witness, alpha, beta);
    p_blocks.push_back(pb);
    q_blocks.push_back(qb);
  }

  Certificate cert{conjugate(fr.transform, block_diag(field, p_blocks)),
                   conjugate(fr.transform, block_diag(field, q_blocks)), alpha, beta};
  if (!verify(a, cert) || !image_kernel_direct(cert)) {
    throw InternalError("coprime-part certificate failed to verify");
  }
  return cert;
}

ConstructResult construct(const Matrix& a, const Scalar& alpha, const Scalar& beta) {
  Decision d = decide(a, alpha, beta);
  if (!d.verdict) return {d, std::nullopt};

  const Field& field = a.field();
  Scalar t = alpha + beta;
  SpectralSplit split = spectral_split(a, alpha, beta);

  std::vector<Matrix> p_blocks, q_blocks;

  // eigenvalues alpha / beta
  const SpectralPart* part_alpha = split.find(SpectralPartId::Alpha);
  const SpectralPart* part_beta = split.find(SpectralPartId::Beta);
  if (alpha != beta) {
    std::size_t dim = part_alpha->dim() + (part_beta ? part_beta->dim() : 0);
    if (dim > 0) {
      std::vector<Matrix> restrictions{part_alpha->restriction};
      if (part_beta) restrictions.push_back(part_beta->restriction);
      Certificate c =
          alphabeta_pair_certificate(block_diag(field, restrictions), alpha, beta);
      p_blocks.push_back(c.p);
      q_blocks.push_back(c.q);
    }
  } else if (part_alpha->dim() > 0) {
    // restriction is alpha I + N; from N = alpha(P - Q) return (P, I - Q)
    std::size_t dim = part_alpha->dim();
    Matrix n_part = part_alpha->restriction - scaled_identity(field, dim, alpha);
    Certificate c = build_nilpotent_diff(n_part, alpha);
    p_blocks.push_back(c.p);
    q_blocks.push_back(Matrix::identity(field, dim) - c.q);
  }

  // eigenvalues 0 / alpha+beta
  const SpectralPart* part_zero = split.find(SpectralPartId::Zero);
  const SpectralPart* part_t = split.find(SpectralPartId::AlphaPlusBeta);
  if (t.is_zero()) {
    if (part_zero->dim() > 0) {
      Certificate c = build_nilpotent_diff(part_zero->restriction, alpha);
      p_blocks.push_back(c.p);
      q_blocks.push_back(c.q);
    }
  } else {
    std::size_t dim = part_zero->dim() + (part_t ? part_t->dim() : 0);
    if (dim > 0) {
      std::vector<Matrix> restrictions{part_zero->restriction};
      if (part_t) restrictions.push_back(part_t->restriction);
      Certificate c = build_shifted(block_diag(field, restrictions), alpha, beta);
      p_blocks.push_back(c.p);
      q_blocks.push_back(c.q);
    }
  }

  // everything away from {0, alpha, beta, alpha+beta}
  const SpectralPart* part_coprime = split.find(SpectralPartId::Coprime);
  if (part_coprime->dim() > 0) {
    Certificate c = build_coprime_part(part_coprime->restriction, alpha, beta);
    p_blocks.push_back(c.p);
    q_blocks.push_back(c.q);
  }

  Certificate cert{conjugate(split.global_basis, block_diag(field, p_blocks)),
                   conjugate(split.global_basis, block_diag(field, q_blocks)),
                   alpha, beta};
  if (!verify(a, cert)) {
    throw InternalError("assembled certificate failed to verify");
  }
  return {d, cert};
}

}  // namespace iforge
