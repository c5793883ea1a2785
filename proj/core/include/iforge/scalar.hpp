#ifndef IFORGE_SCALAR_HPP
#define IFORGE_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "iforge/field.hpp"

namespace iforge {

/// Exact field element in canonical form: a reduced fraction with positive
/// denominator over Q, or a residue in [0, p) over GF(p). Immutable value
/// type; all operations are pure and safe to share across threads.
class Scalar {
 public:
  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar of(const Field& field, long value);
  static Scalar rational(long num, long den);  // over Q, reduced

  /// Parses "n", "n/d" (Q) or a decimal residue with optional sign (GF(p)).
  static Scalar parse(const std::string& text, const Field& field);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws InputError on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }
  /// Total order within one field (rational order / residue order); used
  /// for deterministic containers, no algebraic meaning over GF(p).
  bool operator<(const Scalar& other) const;

  std::string to_string() const;

  /// Rational value; only valid over Q.
  const mpq_class& rational_value() const;
  /// Residue in [0, p); only valid over GF(p).
  std::uint64_t residue() const;

 private:
  Scalar(Field field, mpq_class q) : field_(field), value_(std::move(q)) {}
  Scalar(Field field, std::uint64_t r) : field_(field), value_(r) {}
  static void check_same_field(const Scalar& a, const Scalar& b);

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace iforge

#endif
