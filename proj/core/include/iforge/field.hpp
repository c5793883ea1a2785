#ifndef IFORGE_FIELD_HPP
#define IFORGE_FIELD_HPP

#include <cstdint>
#include <string>

namespace iforge {

/// Descriptor of the coefficient field: the rationals, or a prime field
/// GF(p) with a word-sized prime modulus.
class Field {
 public:
  static Field rationals();
  /// Builds GF(p). Primality is checked by trial division up to sqrt(p),
  /// so construction cost grows with p; intended for desk-scale moduli.
  static Field prime_field(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }

  /// Modulus of a prime field; throws for the rationals.
  std::uint64_t modulus() const;

  /// 0 for the rationals, p for GF(p).
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

  std::string to_string() const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 encodes the rationals
};

bool is_prime(std::uint64_t n);

}  // namespace iforge

#endif
