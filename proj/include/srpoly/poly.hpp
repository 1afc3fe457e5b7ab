#ifndef SRPOLY_POLY_HPP
#define SRPOLY_POLY_HPP

// Dense univariate polynomials over a Field.  Coefficients are ascending
// (index = degree) and trimmed, so the zero polynomial is the empty sequence.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srpoly/error.hpp"
#include "srpoly/field.hpp"

namespace srpoly {

class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(std::move(field)) {}

  Polynomial(Field field, std::vector<Code> codes) : field_(std::move(field)), c_(std::move(codes)) {
    for (Code c : c_) {
      if (c >= field_.q()) throw DomainError("coefficient code out of range");
    }
    trim();
  }

  static Polynomial from_elements(const Field& field, std::span<const FieldElement> coeffs) {
    std::vector<Code> codes;
    codes.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      if (!(c.field() == field)) throw FieldMismatch("coefficient from a different field");
      codes.push_back(c.code());
    }
    return {field, std::move(codes)};
  }

  /// Ascending integer coefficients mapped into the prime subfield.
  static Polynomial from_integers(const Field& field, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Code> codes;
    codes.reserve(coeffs.size());
    for (auto v : coeffs) codes.push_back(field.from_int(v));
    return {field, std::move(codes)};
  }

  static Polynomial constant(const FieldElement& c) { return {c.field(), {c.code()}}; }

  /// c * x^k
  static Polynomial monomial(const FieldElement& c, std::size_t k) {
    std::vector<Code> codes(k + 1, 0);
    codes[k] = c.code();
    return {c.field(), std::move(codes)};
  }

  static Polynomial x(const Field& field) { return monomial(field.one(), 1); }

  const Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const std::vector<Code>& codes() const { return c_; }
  Code code(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  FieldElement coeff(std::size_t i) const { return field_.element(code(i)); }
  FieldElement leading() const { return field_.element(c_.empty() ? 0 : c_.back()); }
  FieldElement constant_term() const { return coeff(0); }

  FieldElement eval(const FieldElement& x) const {
    check(x.field());
    Code acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x.code()), c_[i]);
    return field_.element(acc);
  }

  Polynomial monic() const {
    if (is_zero()) throw DomainError("zero polynomial has no monic associate");
    return *this * leading().inv();
  }

  /// this * x^k
  Polynomial shift(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Code> out(k, 0);
    out.insert(out.end(), c_.begin(), c_.end());
    return {field_, std::move(out)};
  }

  Polynomial operator+(const Polynomial& o) const {
    check(o.field_);
    std::vector<Code> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(code(i), o.code(i));
    return {field_, std::move(out)};
  }

  Polynomial operator-(const Polynomial& o) const {
    check(o.field_);
    std::vector<Code> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(code(i), o.code(i));
    return {field_, std::move(out)};
  }

  Polynomial operator-() const {
    std::vector<Code> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_.neg(c_[i]);
    return {field_, std::move(out)};
  }

  Polynomial operator*(const Polynomial& o) const {
    check(o.field_);
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    std::vector<Code> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
      }
    }
    return {field_, std::move(out)};
  }

  Polynomial operator*(const FieldElement& s) const {
    check(s.field());
    std::vector<Code> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_.mul(c_[i], s.code());
    return {field_, std::move(out)};
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }

  /// Degree first, then coefficients constant term first.
  std::strong_ordering operator<=>(const Polynomial& o) const {
    check(o.field_);
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (auto c = field_.compare(c_[i], o.c_[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  void check(const Field& other) const {
    if (!(field_ == other)) throw FieldMismatch("polynomial operands belong to different fields");
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Field field_;
  std::vector<Code> c_;
};

inline Polynomial operator*(const FieldElement& s, const Polynomial& f) { return f * s; }

/// Euclidean division: returns (quotient, remainder) with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  a.check(b.field());
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  const auto& bc = b.codes();
  const std::size_t db = bc.size() - 1;
  const Code inv_lead = f.inv(bc.back());
  std::vector<Code> r = a.codes();
  std::vector<Code> quo(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const Code c = f.mul(r[k], inv_lead);
    quo[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = f.sub(r[k - db + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(r))};
}

inline Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divrem(a, b).first; }
inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divrem(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  a.check(b.field());
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

inline Polynomial derivative(const Polynomial& f) {
  const Field& fd = f.field();
  const auto& c = f.codes();
  if (c.size() <= 1) return Polynomial(fd);
  std::vector<Code> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    out[i - 1] = fd.mul(fd.from_int(static_cast<std::int64_t>(i % fd.p())), c[i]);
  }
  return {fd, std::move(out)};
}

inline Polynomial pow(Polynomial base, std::uint64_t k) {
  Polynomial r = Polynomial::constant(base.field().one());
  while (k != 0) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return r;
}

/// base^k mod m by square-and-multiply.
inline Polynomial pow_mod(const Polynomial& base, std::uint64_t k, const Polynomial& m) {
  if (m.is_constant()) throw DomainError("pow_mod modulus must be nonconstant");
  Polynomial r = Polynomial::constant(base.field().one()) % m;
  Polynomial b = base % m;
  while (k != 0) {
    if (k & 1U) r = (r * b) % m;
    k >>= 1U;
    if (k != 0) b = (b * b) % m;
  }
  return r;
}

/// x^(q^k) mod m, via k successive q-th powers; stays within 64-bit exponents.
inline Polynomial x_pow_q_pow_mod(std::uint64_t k, const Polynomial& m) {
  Polynomial r = Polynomial::x(m.field()) % m;
  for (std::uint64_t i = 0; i < k; ++i) r = pow_mod(r, m.field().q(), m);
  return r;
}

/// Resultant R(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots of f.
/// Computed by the remainder recursion
///   R(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * R(g, r),  r = f mod g,
/// with R(f, c) = c^deg(f) for a nonzero constant c.
inline FieldElement resultant(Polynomial f, Polynomial g) {
  f.check(g.field());
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  const Field& fd = f.field();
  FieldElement acc = fd.one();
  while (true) {
    const int n = f.degree();
    const int m = g.degree();
    if (m == 0) return acc * g.leading().pow(n);
    if (n == 0) return acc * f.leading().pow(m);
    Polynomial r = f % g;
    if (r.is_zero()) return fd.zero();
    if ((static_cast<long>(n) * m) % 2 == 1) acc = -acc;
    acc *= g.leading().pow(n - r.degree());
    f = std::move(g);
    g = std::move(r);
  }
}

/// D(f) = (-1)^(N(N-1)/2) R(f, f') for monic f of degree N >= 1.
inline FieldElement discriminant(const Polynomial& f) {
  if (f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
  if (!f.is_monic()) throw DomainError("discriminant is defined for monic polynomials only");
  const Polynomial df = derivative(f);
  if (df.is_zero()) return f.field().zero();
  const long n = f.degree();
  FieldElement r = resultant(f, df);
  return ((n * (n - 1) / 2) % 2 == 1) ? -r : r;
}

/// gcd(f, f') constant; a polynomial of degree >= 1 with f' = 0 is a p-th power.
inline bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("is_squarefree of the zero polynomial");
  if (f.degree() == 0) return true;
  const Polynomial df = derivative(f);
  if (df.is_zero()) return false;
  return gcd(f, df).degree() == 0;
}

// ---- text format ---------------------------------------------------------

/// Comma-separated ascending coefficients, e.g. "4,1,2,4,3,1,1".
/// The zero polynomial prints as "0".
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.codes().size(); ++i) {
    if (i != 0) out += ',';
    out += to_string(f.coeff(i));
  }
  return out;
}

/// Descending human-readable form, e.g. "x^6+x^5+3x^4+4x^3+2x^2+x+4".
inline std::string to_pretty(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const bool prime = f.field().e() == 1;
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const auto c = f.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string cs = to_string(c);
    if (!prime && cs.find('+') != std::string::npos && i > 0) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += cs;
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

inline Polynomial parse_polynomial(const Field& field, std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw DomainError("empty polynomial string");
  std::vector<Code> codes;
  std::size_t pos = 0;
  while (true) {
    const auto comma = s.find(',', pos);
    const std::string_view item(s.data() + pos, (comma == std::string::npos ? s.size() : comma) - pos);
    if (item.empty()) throw DomainError("malformed polynomial '" + s + "': empty coefficient");
    codes.push_back(parse_element(field, item).code());
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return {field, std::move(codes)};
}

}  // namespace srpoly

#endif  // SRPOLY_POLY_HPP
