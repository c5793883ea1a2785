#ifndef IFORGE_POLYNOMIAL_HPP
#define IFORGE_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "iforge/scalar.hpp"

namespace iforge {

/// Dense univariate polynomial over Q or GF(p), kept canonical: the empty
/// coefficient sequence is 0, otherwise the last coefficient is nonzero.
class Polynomial {
 public:
  explicit Polynomial(const Field& field) : field_(field) {}  // zero
  Polynomial(const Field& field, std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  static Polynomial x(const Field& field);                   // X
  static Polynomial monomial(const Scalar& c, std::size_t k);  // c*X^k
  /// X - s
  static Polynomial linear_root(const Scalar& s);

  const Field& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree of a nonzero polynomial; throws on 0.
  std::size_t degree() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Coefficient of X^k, 0 beyond the degree.
  Scalar coeff(std::size_t k) const;
  const Scalar& leading_coeff() const;
  bool is_monic() const;
  Polynomial monic() const;  // divide by the leading coefficient

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial operator*(const Scalar& c) const;
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> coeffs_;  // coeffs_[i] multiplies X^i
};

/// Euclidean division: f = q*g + r with deg r < deg g. Throws on g = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);

/// Monic gcd by the Euclidean algorithm. Throws when both inputs are zero.
Polynomial gcd_monic(const Polynomial& f, const Polynomial& g);

/// Monic lcm, f*g / gcd up to normalization. Zero if either input is zero.
Polynomial lcm_monic(const Polynomial& f, const Polynomial& g);

/// Horner evaluation.
Scalar eval(const Polynomial& f, const Scalar& s);

/// Splits f = (X-s)^m * cofactor with cofactor(s) != 0, by repeated exact
/// division (valid in every characteristic). Throws on f = 0.
std::pair<std::size_t, Polynomial> root_multiplicity(const Polynomial& f,
                                                     const Scalar& s);

struct StripResult {
  Polynomial stripped;
  std::vector<std::pair<Scalar, std::size_t>> multiplicities;  // aligned with input order
};

/// Removes all roots in `points` from f: f = stripped * prod (X-s)^m_s with
/// stripped having no root in `points`. Duplicates in `points` are ignored.
StripResult strip_roots(const Polynomial& f, const std::vector<Scalar>& points);

struct YDecomposition {
  Polynomial f1;  // in the abstract variable Z standing for Y = (X-alpha)(X-beta)
  Polynomial f2;
};

/// Unique rewriting f = f1(Y) + (X-alpha)*f2(Y) along the basis
/// 1, (X-alpha), Y, (X-alpha)Y, Y^2, ... where Y = (X-alpha)(X-beta).
/// Works in every characteristic, including alpha = beta.
YDecomposition y_decompose(const Polynomial& f, const Scalar& alpha,
                           const Scalar& beta);

struct YMembership {
  bool yes;
  Polynomial witness;  // g with f = g(Y), meaningful only when yes
};

/// Tests membership in the subring K[Y]; the witness round-trips through
/// compose_in_y.
YMembership is_poly_in_y(const Polynomial& f, const Scalar& alpha,
                         const Scalar& beta);

/// Expands g((X-alpha)(X-beta)).
Polynomial compose_in_y(const Polynomial& g, const Scalar& alpha,
                        const Scalar& beta);

/// Round-trip parser for the display syntax produced by to_string().
Polynomial parse_polynomial(const std::string& text, const Field& field);

}  // namespace iforge

#endif
