#include "iforge/polynomial.hpp"

#include <cctype>

#include "iforge/errors.hpp"

namespace iforge {

Polynomial::Polynomial(const Field& field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_) {
    if (c.field() != field_) throw InputError("coefficient field mismatch");
  }
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) {
  return Polynomial(c.field(), {c});
}

Polynomial Polynomial::x(const Field& field) {
  return Polynomial(field, {Scalar::zero(field), Scalar::one(field)});
}

Polynomial Polynomial::monomial(const Scalar& c, std::size_t k) {
  std::vector<Scalar> coeffs(k, Scalar::zero(c.field()));
  coeffs.push_back(c);
  return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::linear_root(const Scalar& s) {
  return Polynomial(s.field(), {-s, Scalar::one(s.field())});
}

std::size_t Polynomial::degree() const {
  if (is_zero()) throw InputError("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Scalar Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

const Scalar& Polynomial::leading_coeff() const {
  if (is_zero()) throw InputError("leading coefficient of zero");
  return coeffs_.back();
}

bool Polynomial::is_monic() const { return !is_zero() && leading_coeff().is_one(); }

Polynomial Polynomial::monic() const {
  if (is_zero()) throw InputError("cannot normalize the zero polynomial");
  return *this * leading_coeff().inverse();
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  if (f.field_ != g.field_) throw InputError("polynomial field mismatch");
  std::vector<Scalar> out;
  std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f.coeff(i) + g.coeff(i));
  return Polynomial(f.field_, std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) out.push_back(-c);
  return Polynomial(field_, std::move(out));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.field_ != g.field_) throw InputError("polynomial field mismatch");
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field_);
  std::vector<Scalar> out(f.coeffs_.size() + g.coeffs_.size() - 1,
                          Scalar::zero(f.field_));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return Polynomial(f.field_, std::move(out));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const Scalar& a : coeffs_) out.push_back(a * c);
  return Polynomial(field_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (field_ != other.field_) throw InputError("polynomial field mismatch");
  return coeffs_ == other.coeffs_;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
  if (f.field() != g.field()) throw InputError("polynomial field mismatch");
  if (g.is_zero()) throw InputError("polynomial division by zero");
  const Field& field = f.field();
  if (f.is_zero() || f.degree() < g.degree()) {
    return {Polynomial(field), f};
  }
  Scalar lead_inv = g.leading_coeff().inverse();
  std::vector<Scalar> rem = f.coeffs();
  std::vector<Scalar> quot(f.degree() - g.degree() + 1, Scalar::zero(field));
  for (std::size_t k = f.degree() + 1; k-- > g.degree();) {
    if (rem[k].is_zero()) continue;
    Scalar c = rem[k] * lead_inv;
    quot[k - g.degree()] = c;
    for (std::size_t i = 0; i <= g.degree(); ++i) {
      rem[k - g.degree() + i] -= c * g.coeff(i);
    }
  }
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial gcd_monic(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw InputError("gcd(0, 0) is undefined");
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

Polynomial lcm_monic(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field());
  Polynomial prod = f * g;
  Polynomial q = divmod(prod, gcd_monic(f, g)).first;
  return q.monic();
}

Scalar eval(const Polynomial& f, const Scalar& s) {
  Scalar acc = Scalar::zero(f.field());
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    acc = acc * s + f.coeff(k);
  }
  return acc;
}

std::pair<std::size_t, Polynomial> root_multiplicity(const Polynomial& f,
                                                     const Scalar& s) {
  if (f.is_zero()) throw InputError("root multiplicity in the zero polynomial");
  Polynomial lin = Polynomial::linear_root(s);
  Polynomial cof = f;
  std::size_t m = 0;
  while (true) {
    auto [q, r] = divmod(cof, lin);
    if (!r.is_zero()) break;
    cof = q;
    ++m;
  }
  return {m, cof};
}

StripResult strip_roots(const Polynomial& f, const std::vector<Scalar>& points) {
  if (f.is_zero()) throw InputError("strip_roots on the zero polynomial");
  StripResult out{f, {}};
  for (const Scalar& s : points) {
    bool seen = false;
    for (const auto& [t, m] : out.multiplicities) seen = seen || t == s;
    if (seen) continue;
    auto [m, cof] = root_multiplicity(out.stripped, s);
    out.stripped = cof;
    out.multiplicities.emplace_back(s, m);
  }
  return out;
}

YDecomposition y_decompose(const Polynomial& f, const Scalar& alpha,
                           const Scalar& beta) {
  const Field& field = f.field();
  // Y = (X-alpha)(X-beta); peel one Y-digit per division. The degree <= 1
  // remainder c0 + c1*X rewrites as (c0 + c1*alpha) + (X-alpha)*c1.
  Polynomial y = Polynomial::linear_root(alpha) * Polynomial::linear_root(beta);
  std::vector<Scalar> f1, f2;
  Polynomial cur = f;
  while (!cur.is_zero()) {
    auto [q, r] = divmod(cur, y);
    f1.push_back(r.coeff(0) + r.coeff(1) * alpha);
    f2.push_back(r.coeff(1));
    cur = q;
  }
  return {Polynomial(field, std::move(f1)), Polynomial(field, std::move(f2))};
}

YMembership is_poly_in_y(const Polynomial& f, const Scalar& alpha,
                         const Scalar& beta) {
  YDecomposition d = y_decompose(f, alpha, beta);
  return {d.f2.is_zero(), d.f1};
}

Polynomial compose_in_y(const Polynomial& g, const Scalar& alpha,
                        const Scalar& beta) {
  const Field& field = g.field();
  Polynomial y = Polynomial::linear_root(alpha) * Polynomial::linear_root(beta);
  Polynomial acc(field);
  for (std::size_t k = g.coeffs().size(); k-- > 0;) {
    acc = acc * y + Polynomial::constant(g.coeff(k));
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool rationals = field_.is_rationals();
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    Scalar c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = rationals && cs[0] == '-';
    if (out.empty()) {
      if (neg) {
        out += "-";
        cs = cs.substr(1);
      }
    } else {
      out += neg ? " - " : " + ";
      if (neg) cs = cs.substr(1);
    }
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += k == 1 ? "X" : "X^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

struct TermText {
  bool negative;
  std::string body;
};

std::vector<TermText> split_terms(const std::string& text) {
  std::vector<TermText> terms;
  std::string cur;
  bool neg = false;
  bool at_term_start = true;
  for (char raw : text) {
    if (std::isspace(static_cast<unsigned char>(raw))) continue;
    if ((raw == '+' || raw == '-') && !at_term_start) {
      terms.push_back({neg, cur});
      cur.clear();
      neg = raw == '-';
      at_term_start = true;
      continue;
    }
    if (raw == '+' || raw == '-') {
      if (raw == '-') neg = !neg;
      continue;
    }
    cur += raw;
    at_term_start = false;
  }
  if (cur.empty()) throw InputError("malformed polynomial: '" + text + "'");
  terms.push_back({neg, cur});
  return terms;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Field& field) {
  std::string stripped;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  }
  if (stripped == "0") return Polynomial(field);

  Polynomial result(field);
  for (const TermText& term : split_terms(text)) {
    std::string body = term.body;
    std::size_t k = 0;
    std::string coeff_text;
    if (auto xpos = body.find('X'); xpos != std::string::npos) {
      coeff_text = body.substr(0, xpos);
      if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
      if (coeff_text.empty()) coeff_text = "1";
      std::string expo = body.substr(xpos + 1);
      if (expo.empty()) {
        k = 1;
      } else if (expo[0] == '^') {
        k = std::stoul(expo.substr(1));
      } else {
        throw InputError("malformed polynomial term: '" + body + "'");
      }
    } else {
      coeff_text = body;
    }
    Scalar c = Scalar::parse(coeff_text, field);
    if (term.negative) c = -c;
    result = result + Polynomial::monomial(c, k);
  }
  return result;
}

}  // namespace iforge
