#include "iforge/canonical.hpp"

#include <algorithm>
#include <sstream>

#include "iforge/errors.hpp"

namespace iforge {

std::size_t WeyrSequence::sum() const {
  std::size_t s = 0;
  for (std::size_t v : values) s += v;
  return s;
}

std::vector<std::size_t> WeyrSequence::block_sizes() const {
  // conjugate partition: the j-th block (1-indexed) has size #{k : n_k >= j}
  std::vector<std::size_t> sizes;
  std::size_t blocks = values.empty() ? 0 : values[0];
  for (std::size_t j = 1; j <= blocks; ++j) {
    std::size_t size = 0;
    for (std::size_t v : values) {
      if (v >= j) ++size;
    }
    sizes.push_back(size);
  }
  return sizes;
}

std::string WeyrSequence::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << values[i] << (i + 1 < values.size() ? "," : "");
  }
  os << ")";
  return os.str();
}

std::size_t JordanType::count_of_size(std::size_t k) const {
  return static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), k));
}

const char* to_string(SpectralPartId id) {
  switch (id) {
    case SpectralPartId::Alpha: return "alpha";
    case SpectralPartId::Beta: return "beta";
    case SpectralPartId::Zero: return "zero";
    case SpectralPartId::AlphaPlusBeta: return "alpha_plus_beta";
    case SpectralPartId::Coprime: return "coprime";
  }
  return "?";
}

const SpectralPart* SpectralSplit::find(SpectralPartId id) const {
  for (const SpectralPart& p : parts) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

Polynomial vector_annihilator(const Matrix& a, const Matrix& v) {
  if (!a.is_square() || v.rows() != a.rows() || v.cols() != 1) {
    throw InputError("annihilator expects a square matrix and a column vector");
  }
  const Field& field = a.field();
  std::size_t n = a.rows();
  if (v.is_zero()) return Polynomial::constant(Scalar::one(field));
  Matrix krylov = v;
  Matrix power = v;
  for (std::size_t k = 1; k <= n; ++k) {
    power = a * power;
    if (auto x = solve(krylov, power)) {
      // a^k v = sum x_j a^j v  =>  annihilator X^k - sum x_j X^j
      std::vector<Scalar> coeffs;
      coeffs.reserve(k + 1);
      for (std::size_t j = 0; j < k; ++j) coeffs.push_back(-x->at(j, 0));
      coeffs.push_back(Scalar::one(field));
      return Polynomial(field, std::move(coeffs));
    }
    krylov = krylov.hstack(power);
  }
  throw InternalError("Krylov sequence failed to close");
}

Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw InputError("minimal polynomial of a non-square matrix");
  const Field& field = a.field();
  std::size_t n = a.rows();
  if (n == 0) return Polynomial::constant(Scalar::one(field));
  Polynomial mu = Polynomial::constant(Scalar::one(field));
  Matrix e(field, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    e.set(i, 0, Scalar::one(field));
    mu = lcm_monic(mu, vector_annihilator(a, e));
    e.set(i, 0, Scalar::zero(field));
    if (!mu.is_zero() && mu.degree() == n) break;
  }
  return mu;
}

Matrix krylov_matrix(const Matrix& a, const Matrix& v, std::size_t k) {
  Matrix out = v;
  Matrix power = v;
  for (std::size_t i = 1; i < k; ++i) {
    power = a * power;
    out = out.hstack(power);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form of XI - A over K[X]

namespace {

class PolyMatrix {
 public:
  PolyMatrix(const Field& field, std::size_t n)
      : field_(field), n_(n), entries_(n * n, Polynomial(field)) {}

  Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  std::size_t size() const { return n_; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < n_; ++r) std::swap(at(r, i), at(r, j));
  }
  // row_i -= q * row_k, columns >= from
  void row_axpy(std::size_t i, std::size_t k, const Polynomial& q, std::size_t from) {
    for (std::size_t c = from; c < n_; ++c) at(i, c) = at(i, c) - q * at(k, c);
  }
  void col_axpy(std::size_t j, std::size_t k, const Polynomial& q, std::size_t from) {
    for (std::size_t r = from; r < n_; ++r) at(r, j) = at(r, j) - q * at(r, k);
  }
  void row_add(std::size_t i, std::size_t k, std::size_t from) {
    for (std::size_t c = from; c < n_; ++c) at(i, c) = at(i, c) + at(k, c);
  }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Polynomial> entries_;
};

// smallest-degree nonzero entry in the trailing submatrix, ties broken
// lexicographically for reproducibility
bool find_pivot(const PolyMatrix& m, std::size_t k, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  std::size_t best = 0;
  for (std::size_t i = k; i < m.size(); ++i) {
    for (std::size_t j = k; j < m.size(); ++j) {
      const Polynomial& e = m.at(i, j);
      if (e.is_zero()) continue;
      if (!found || e.degree() < best) {
        found = true;
        best = e.degree();
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Polynomial> invariant_factors(const Matrix& a) {
  if (!a.is_square()) throw InputError("invariant factors of a non-square matrix");
  const Field& field = a.field();
  std::size_t n = a.rows();
  PolyMatrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = i == j ? Polynomial::linear_root(a.at(i, i))
                          : Polynomial::constant(-a.at(i, j));
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      std::size_t pi = k, pj = k;
      if (!find_pivot(m, k, pi, pj)) {
        throw InternalError("XI - A degenerated to zero block");
      }
      m.swap_rows(k, pi);
      m.swap_cols(k, pj);

      bool disturbed = false;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m.at(i, k).is_zero()) continue;
        auto [q, r] = divmod(m.at(i, k), m.at(k, k));
        m.row_axpy(i, k, q, k);
        if (!r.is_zero()) disturbed = true;  // smaller-degree entry appeared
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m.at(k, j).is_zero()) continue;
        auto [q, r] = divmod(m.at(k, j), m.at(k, k));
        m.col_axpy(j, k, q, k);
        if (!r.is_zero()) disturbed = true;
      }
      if (disturbed) continue;

      // pivot divides everything below-right, or gets another round
      bool fixed = false;
      for (std::size_t i = k + 1; i < n && !fixed; ++i) {
        for (std::size_t j = k + 1; j < n && !fixed; ++j) {
          if (!divmod(m.at(i, j), m.at(k, k)).second.is_zero()) {
            m.row_add(k, i, k);
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
  }

  std::vector<Polynomial> factors;
  std::size_t total_degree = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial d = m.at(k, k).monic();
    total_degree += d.degree();
    if (!d.is_constant()) factors.push_back(d);
  }
  if (total_degree != n) {
    throw InternalError("Smith diagonal degrees do not sum to n");
  }
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (!divmod(factors[i + 1], factors[i]).second.is_zero()) {
      throw InternalError("Smith diagonal is not a divisibility chain");
    }
  }
  return factors;
}

// ---------------------------------------------------------------------------
// maximal vectors and the Frobenius form

namespace {

// Deterministic candidate generator for maximal-annihilator searches:
// standard vectors, pairwise sums, a moment curve, then (over tiny prime
// fields) full enumeration.
class CandidatePool {
 public:
  CandidatePool(const Field& field, std::size_t dim) : field_(field), dim_(dim) {}

  std::optional<Matrix> next() {
    ++index_;
    std::size_t i = index_ - 1;
    // stage 1: standard basis
    if (i < dim_) {
      Matrix v(field_, dim_, 1);
      v.set(i, 0, Scalar::one(field_));
      return v;
    }
    i -= dim_;
    // stage 2: e_a + e_b, a < b
    std::size_t pairs = dim_ * (dim_ - 1) / 2;
    if (i < pairs) {
      Matrix v(field_, dim_, 1);
      std::size_t a = 0, b = 1;
      for (std::size_t left = i;; ++a) {
        std::size_t row = dim_ - 1 - a;
        if (left < row) {
          b = a + 1 + left;
          break;
        }
        left -= row;
      }
      v.set(a, 0, Scalar::one(field_));
      v.set(b, 0, Scalar::one(field_));
      return v;
    }
    i -= pairs;
    // stage 3: moment curve (1, t, t^2, ...); n(m-1)+1 points escape every
    // union of <= n proper subspaces, and a proper subspace contains at
    // most m-1 curve points
    std::size_t curve_budget = dim_ * dim_ + 2;
    if (field_.is_prime_field()) {
      curve_budget = std::min<std::size_t>(curve_budget, field_.modulus());
    }
    if (i < curve_budget) {
      Scalar t = Scalar::of(field_, static_cast<long>(i));
      Matrix v(field_, dim_, 1);
      Scalar acc = Scalar::one(field_);
      for (std::size_t r = 0; r < dim_; ++r) {
        v.set(r, 0, acc);
        acc *= t;
      }
      return v;
    }
    i -= curve_budget;
    // stage 4: exhaustive odometer over GF(p)^dim when affordable
    if (field_.is_prime_field()) {
      double p = static_cast<double>(field_.modulus());
      double count = 1;
      for (std::size_t r = 0; r < dim_; ++r) count *= p;
      if (count <= double{1 << 24} && i < static_cast<std::size_t>(count)) {
        Matrix v(field_, dim_, 1);
        std::size_t rem = i;
        for (std::size_t r = 0; r < dim_; ++r) {
          v.set(r, 0, Scalar::of(field_, static_cast<long>(rem % field_.modulus())));
          rem /= field_.modulus();
        }
        return v;
      }
    }
    return std::nullopt;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::size_t index_ = 0;
};

Matrix maximal_vector_for(const Matrix& a, const Polynomial& mu) {
  std::size_t target = mu.is_constant() ? 0 : mu.degree();
  CandidatePool pool(a.field(), a.rows());
  while (auto v = pool.next()) {
    if (v->is_zero()) continue;
    // annihilators divide mu, so a degree match is equality
    if (vector_annihilator(a, *v).degree() == target) return *v;
  }
  throw InternalError("maximal-vector candidate pool exhausted");
}

}  // namespace

Matrix maximal_vector(const Matrix& a) {
  return maximal_vector_for(a, minimal_polynomial(a));
}

FrobeniusForm frobenius_form(const Matrix& a) {
  if (!a.is_square()) throw InputError("Frobenius form of a non-square matrix");
  const Field& field = a.field();
  std::size_t n = a.rows();

  struct Component {
    Matrix generator;
    Polynomial conductor;
    Matrix krylov;
  };
  std::vector<Component> components;
  Matrix w(field, n, 0);  // column basis of the invariant subspace built so far

  while (w.cols() < n) {
    // complete w to a full basis with standard vectors
    Matrix extended = w;
    for (std::size_t i = 0; i < n && extended.cols() < n; ++i) {
      Matrix e(field, n, 1);
      e.set(i, 0, Scalar::one(field));
      Matrix trial = extended.hstack(e);
      if (rank(trial) > extended.cols()) extended = trial;
    }
    if (extended.cols() < n) throw InternalError("basis completion failed");

    // induced action on the quotient: bottom-right block of E^{-1} A E
    Matrix induced = inverse(extended) * a * extended;
    std::size_t m = n - w.cols();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < w.cols(); ++j) {
        if (!induced.at(w.cols() + i, j).is_zero()) {
          throw InternalError("subspace is not invariant");
        }
      }
    }
    Matrix quotient = induced.submatrix(w.cols(), w.cols(), m, m);

    // maximal vector of the quotient = maximal conductor into w
    Polynomial mu_bar = minimal_polynomial(quotient);
    Matrix ubar = maximal_vector_for(quotient, mu_bar);
    Matrix u(field, n, 1);
    {
      Matrix lifted(field, n, 1);
      for (std::size_t i = 0; i < m; ++i) {
        // complement coordinates live in the trailing block of `extended`
        lifted = lifted + extended.column_at(w.cols() + i) * ubar.at(i, 0);
      }
      u = lifted;
    }
    const Polynomial& s = mu_bar;

    // s(a)u lies in w; peel its Krylov coordinates and divide them by s
    // to correct u into a generator with s(a)u = 0 (cyclic decomposition).
    Matrix corrected = u;
    if (w.cols() > 0) {
      Matrix target = eval(s, a) * u;
      auto coords = solve(w, target);
      if (!coords) throw InternalError("conductor image escaped the subspace");
      std::size_t off = 0;
      for (const Component& comp : components) {
        std::size_t width = comp.krylov.cols();
        std::vector<Scalar> cs;
        cs.reserve(width);
        for (std::size_t i = 0; i < width; ++i) cs.push_back(coords->at(off + i, 0));
        off += width;
        Polynomial g(field, std::move(cs));
        auto [h, r] = divmod(g, s);
        if (!r.is_zero()) {
          throw InternalError("conductor does not divide the component coordinates");
        }
        corrected = corrected - eval(h, a) * comp.generator;
      }
    }

    std::size_t deg = s.degree();
    Matrix krylov = krylov_matrix(a, corrected, deg);
    Matrix grown = w.hstack(krylov);
    if (rank(grown) != w.cols() + deg) {
      throw InternalError("cyclic component does not extend the subspace freely");
    }
    components.push_back({corrected, s, krylov});
    w = grown;
  }

  // conductors come out in descending divisibility order
  for (std::size_t i = 0; i + 1 < components.size(); ++i) {
    if (!divmod(components[i].conductor, components[i + 1].conductor).second.is_zero()) {
      throw InternalError("conductors violate the divisibility chain");
    }
  }

  FrobeniusForm out{Matrix(field, 0, 0), Matrix(field, n, 0), {}};
  std::vector<Matrix> blocks;
  for (std::size_t i = components.size(); i-- > 0;) {
    out.factors.push_back(components[i].conductor);
    blocks.push_back(companion(components[i].conductor));
    out.transform = out.transform.hstack(components[i].krylov);
  }
  out.form = block_diag(field, blocks);

  if (a * out.transform != out.transform * out.form) {
    throw InternalError("Frobenius transform does not intertwine the form");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weyr sequences, Jordan chains, spectral splitting

WeyrSequence weyr_sequence(const Matrix& a, const Scalar& lambda) {
  if (!a.is_square()) throw InputError("Weyr sequence of a non-square matrix");
  std::size_t n = a.rows();
  Matrix shifted = a - Matrix::identity(a.field(), n) * lambda;
  WeyrSequence out;
  Matrix power = Matrix::identity(a.field(), n);
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * shifted;
    std::size_t dim = n - rank(power);
    if (dim == prev) break;
    out.values.push_back(dim - prev);
    prev = dim;
  }
  return out;
}

JordanType jordan_type(const Matrix& a, const Scalar& lambda) {
  if (!a.is_square()) throw InputError("Jordan type of a non-square matrix");
  const Field& field = a.field();
  std::size_t n = a.rows();
  Matrix shifted = a - Matrix::identity(field, n) * lambda;

  // ascending kernel filtration of (A - lambda I)^k
  std::vector<Matrix> kernels;  // kernels[k] = basis of ker shifted^{k+1}
  Matrix power = shifted;
  std::size_t prev = 0;
  while (true) {
    Matrix ker = kernel_basis(power);
    if (ker.cols() == prev) break;
    kernels.push_back(ker);
    prev = ker.cols();
    power = power * shifted;
  }

  JordanType out{lambda, {}, {}};
  if (kernels.empty()) return out;

  std::size_t levels = kernels.size();
  std::vector<Matrix> tops_per_level(levels, Matrix(field, n, 0));
  Matrix carried(field, n, 0);  // images of higher chains at the current level

  for (std::size_t k = levels; k-- > 0;) {
    Matrix base = k > 0 ? kernels[k - 1] : Matrix(field, n, 0);
    base = base.hstack(carried);
    std::size_t base_rank = rank(base);
    Matrix tops(field, n, 0);
    const Matrix& candidates = kernels[k];
    for (std::size_t j = 0; j < candidates.cols(); ++j) {
      Matrix trial = base.hstack(candidates.column_at(j));
      if (rank(trial) > base_rank) {
        base = trial;
        ++base_rank;
        tops = tops.hstack(candidates.column_at(j));
      }
    }
    tops_per_level[k] = tops;
    carried = shifted * carried.hstack(tops);
  }

  for (std::size_t k = levels; k-- > 0;) {
    for (std::size_t j = 0; j < tops_per_level[k].cols(); ++j) {
      Matrix top = tops_per_level[k].column_at(j);
      Matrix chain(field, n, k + 1);
      Matrix cur = top;
      for (std::size_t pos = k + 1; pos-- > 0;) {
        for (std::size_t i = 0; i < n; ++i) chain.set(i, pos, cur.at(i, 0));
        cur = shifted * cur;
      }
      out.sizes.push_back(k + 1);
      out.chains.push_back(chain);
    }
  }

  // sanity: chains span the generalized eigenspace and match the Weyr data
  Matrix all(field, n, 0);
  for (const Matrix& c : out.chains) all = all.hstack(c);
  if (all.cols() != kernels.back().cols() || rank(all) != all.cols()) {
    throw InternalError("Jordan chains do not form a basis");
  }
  WeyrSequence weyr = weyr_sequence(a, lambda);
  if (weyr.block_sizes() != out.sizes) {
    throw InternalError("Jordan sizes disagree with the Weyr sequence");
  }
  return out;
}

std::vector<Scalar> special_points(const Scalar& alpha, const Scalar& beta) {
  std::vector<Scalar> points{Scalar::zero(alpha.field()), alpha, beta, alpha + beta};
  std::vector<Scalar> dedup;
  for (const Scalar& s : points) {
    bool seen = false;
    for (const Scalar& t : dedup) seen = seen || t == s;
    if (!seen) dedup.push_back(s);
  }
  return dedup;
}

SpectralSplit spectral_split(const Matrix& a, const Scalar& alpha,
                             const Scalar& beta) {
  if (!a.is_square()) throw InputError("spectral split of a non-square matrix");
  if (alpha.is_zero() || beta.is_zero()) {
    throw InputError("spectral split requires nonzero alpha and beta");
  }
  if (alpha.field() != a.field() || beta.field() != a.field()) {
    throw InputError("spectral split field mismatch");
  }
  const Field& field = a.field();
  std::size_t n = a.rows();
  Polynomial mu = minimal_polynomial(a);
  Scalar t = alpha + beta;
  Scalar zero = Scalar::zero(field);

  // label -> point, with duplicates merged into the earlier label
  std::vector<std::pair<SpectralPartId, Scalar>> labels;
  labels.emplace_back(SpectralPartId::Alpha, alpha);
  if (beta != alpha) labels.emplace_back(SpectralPartId::Beta, beta);
  labels.emplace_back(SpectralPartId::Zero, zero);
  if (!t.is_zero()) labels.emplace_back(SpectralPartId::AlphaPlusBeta, t);

  SpectralSplit split{{}, Matrix(field, n, 0)};
  for (const auto& [id, point] : labels) {
    auto [mult, cof] = root_multiplicity(mu, point);
    Matrix basis = mult == 0
                       ? Matrix(field, n, 0)
                       : kernel_basis(eval(Polynomial::monomial(Scalar::one(field), mult),
                                           a - Matrix::identity(field, n) * point));
    split.parts.push_back({id, basis, Matrix(field, 0, 0)});
  }
  Polynomial stripped = strip_roots(mu, special_points(alpha, beta)).stripped;
  Matrix coprime_basis = stripped.is_constant() ? Matrix(field, n, 0)
                                                : kernel_basis(eval(stripped, a));
  split.parts.push_back({SpectralPartId::Coprime, coprime_basis, Matrix(field, 0, 0)});

  for (SpectralPart& part : split.parts) {
    split.global_basis = split.global_basis.hstack(part.basis);
    if (part.dim() == 0) continue;
    auto restriction = solve_columns(part.basis, a * part.basis);
    if (!restriction) throw InternalError("spectral part is not invariant");
    part.restriction = *restriction;
  }

  if (split.global_basis.cols() != n || !is_invertible(split.global_basis)) {
    throw InternalError("spectral parts do not sum to the whole space");
  }
  return split;
}

}  // namespace iforge
