#include "iforge/scalar.hpp"

#include <cctype>
#include <utility>

#include "iforge/errors.hpp"

namespace iforge {

namespace {

using u128 = unsigned __int128;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;  // p < 2^62, no overflow
  return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((u128)a * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 128-bit to dodge sign juggling
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InternalError("inverse of non-unit residue");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// digits -> residue mod p, works for arbitrarily long digit strings
std::uint64_t digits_mod(const std::string& digits, std::uint64_t p) {
  std::uint64_t r = 0;
  for (char c : digits) r = add_mod(mul_mod(r, 10, p), (c - '0') % p, p);
  return r;
}

}  // namespace

Scalar Scalar::zero(const Field& field) { return of(field, 0); }
Scalar Scalar::one(const Field& field) { return of(field, 1); }

Scalar Scalar::of(const Field& field, long value) {
  if (field.is_rationals()) return Scalar(field, mpq_class(value));
  std::uint64_t p = field.modulus();
  long r = value % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return Scalar(field, static_cast<std::uint64_t>(r));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(Field::rationals(), q);
}

Scalar Scalar::parse(const std::string& text, const Field& field) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw InputError("empty scalar literal");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }

  if (field.is_prime_field()) {
    if (!all_digits(s)) throw InputError("malformed residue: '" + text + "'");
    std::uint64_t p = field.modulus();
    std::uint64_t r = digits_mod(s, p);
    if (neg) r = sub_mod(0, r, p);
    return Scalar(field, r);
  }

  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational: '" + text + "'");
  }
  mpz_class n(num), d(den);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  mpq_class q(neg ? mpz_class(-n) : n, d);
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  if (field_.is_rationals()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rationals()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator-() const {
  if (field_.is_rationals()) {
    return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  }
  return Scalar(field_, sub_mod(0, std::get<std::uint64_t>(value_), field_.modulus()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (field_.is_rationals()) {
    return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  }
  return Scalar(field_, inv_mod(std::get<std::uint64_t>(value_), field_.modulus()));
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) {
    throw InputError("field mismatch: " + a.field_.to_string() + " vs " +
                     b.field_.to_string());
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  if (a.field_.is_rationals()) {
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) +
                                      std::get<mpq_class>(b.value_)));
  }
  return Scalar(a.field_, add_mod(std::get<std::uint64_t>(a.value_),
                                  std::get<std::uint64_t>(b.value_),
                                  a.field_.modulus()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  if (a.field_.is_rationals()) {
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) -
                                      std::get<mpq_class>(b.value_)));
  }
  return Scalar(a.field_, sub_mod(std::get<std::uint64_t>(a.value_),
                                  std::get<std::uint64_t>(b.value_),
                                  a.field_.modulus()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  if (a.field_.is_rationals()) {
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) *
                                      std::get<mpq_class>(b.value_)));
  }
  return Scalar(a.field_, mul_mod(std::get<std::uint64_t>(a.value_),
                                  std::get<std::uint64_t>(b.value_),
                                  a.field_.modulus()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& other) const {
  check_same_field(*this, other);
  return value_ == other.value_;
}

bool Scalar::operator<(const Scalar& other) const {
  check_same_field(*this, other);
  if (field_.is_rationals()) {
    return std::get<mpq_class>(value_) < std::get<mpq_class>(other.value_);
  }
  return std::get<std::uint64_t>(value_) < std::get<std::uint64_t>(other.value_);
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

const mpq_class& Scalar::rational_value() const {
  if (!field_.is_rationals()) throw InputError("rational_value() over GF(p)");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw InputError("residue() over Q");
  return std::get<std::uint64_t>(value_);
}

}  // namespace iforge
