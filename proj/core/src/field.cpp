#include "iforge/field.hpp"

#include "iforge/errors.hpp"

namespace iforge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::rationals() { return Field(0); }

Field Field::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62)) {
    throw InputError("prime field modulus exceeds the supported word size");
  }
  if (!is_prime(p)) {
    throw InputError("prime field modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::uint64_t Field::modulus() const {
  if (!is_prime_field()) throw InputError("modulus() called on the rationals");
  return p_;
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

}  // namespace iforge
