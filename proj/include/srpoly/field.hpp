#ifndef SRPOLY_FIELD_HPP
#define SRPOLY_FIELD_HPP

// Finite fields F_q, q = p^e with p an odd prime.
//
// Elements are stored as a single integer code c0 + c1*p + ... + c_{e-1}*p^{e-1}
// where (c0, ..., c_{e-1}) are the coordinates with respect to the power basis
// 1, t, ..., t^{e-1} of F_p[t]/(modulus).  The code is canonical, so equality of
// elements is equality of codes.
//
// The modulus chosen by Field::make is the lexicographically smallest monic
// irreducible polynomial of degree e over F_p, where coefficient sequences are
// compared constant term first.  For e = 1 the modulus is x.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srpoly/error.hpp"

namespace srpoly {

using Code = std::uint64_t;

/// Fields up to this order use exhaustive search for square roots; larger
/// fields switch to Tonelli-Shanks with a deterministic non-residue.
inline constexpr std::uint64_t kExhaustiveSqrtLimit = 10000;

/// Extension fields up to this order get discrete log tables for
/// multiplication.
inline constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20;

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (k != 0) {
    if (k & 1U) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    k >>= 1U;
  }
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Returns p^e, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, p, &r)) return std::nullopt;
  }
  return r;
}

// Minimal dense arithmetic over F_p used only to pick the field modulus.
// The general polynomial layer sits on top of Field and cannot be used here.
namespace primepoly {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly rem(Poly a, const Poly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lead = pow_mod(m.back(), p - 2, p);
  trim(a);
  while (a.size() > dm) {
    const std::uint64_t c = mul_mod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + p - mul_mod(c, m[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

inline Poly mul_rem(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return rem(std::move(prod), m, p);
}

inline Poly pow_rem(Poly base, std::uint64_t k, const Poly& m, std::uint64_t p) {
  Poly r{1};
  r = rem(r, m, p);
  base = rem(std::move(base), m, p);
  while (k != 0) {
    if (k & 1U) r = mul_rem(r, base, m, p);
    base = mul_rem(base, base, m, p);
    k >>= 1U;
  }
  return r;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test for a monic f of degree n >= 1 over F_p.
inline bool irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // frob[k] = x^(p^k) mod f
  std::vector<Poly> frob(n + 1);
  frob[0] = rem(Poly{0, 1}, f, p);
  for (std::size_t k = 1; k <= n; ++k) frob[k] = pow_rem(frob[k - 1], p, f, p);
  if (frob[n] != frob[0]) return false;
  for (std::uint64_t l : prime_divisors(n)) {
    Poly h = frob[n / l];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace primepoly
}  // namespace detail

/// Immutable description of F_{p^e}.
struct FieldDesc {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;
  /// Monic, ascending, size e + 1.
  std::vector<std::uint64_t> modulus;
  /// p^i for i = 0..e
  std::vector<std::uint64_t> pow_p;
  /// Discrete log tables (extension fields with q <= kLogTableLimit only).
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;
};

class FieldElement;

/// Shared handle to an immutable FieldDesc.  Copies are cheap and all copies
/// compare equal.  Arithmetic on raw codes is exposed for the polynomial layer.
class Field {
 public:
  /// Builds F_{p^e} with the lexicographically smallest monic irreducible modulus.
  static Field make(std::uint64_t p, unsigned e) {
    validate_characteristic(p, e);
    std::vector<std::uint64_t> modulus;
    if (e == 1) {
      modulus = {0, 1};
    } else {
      const std::uint64_t count = *detail::checked_pow(p, e);
      detail::primepoly::Poly cand(e + 1, 0);
      cand[e] = 1;
      for (std::uint64_t rank = 0; rank < count; ++rank) {
        // c0 is the most significant digit of the rank.
        std::uint64_t r = rank;
        for (unsigned i = e; i-- > 0;) {
          cand[i] = r % p;
          r /= p;
        }
        if (cand[0] != 0 && detail::primepoly::irreducible(cand, p)) {
          modulus = cand;
          break;
        }
      }
      if (modulus.empty()) throw InternalError("no irreducible polynomial of degree " + std::to_string(e));
    }
    return Field(build(p, e, std::move(modulus)));
  }

  /// Builds F_{p^e} from an explicit monic irreducible modulus over F_p
  /// (ascending coefficients, degree e >= 1).
  static Field with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (modulus.size() < 2) throw DomainError("modulus must have degree >= 1");
    const auto e = static_cast<unsigned>(modulus.size() - 1);
    validate_characteristic(p, e);
    for (auto& c : modulus) {
      if (c >= p) throw DomainError("modulus coefficient out of range [0, p)");
    }
    if (modulus.back() != 1) throw DomainError("modulus must be monic");
    if (!detail::primepoly::irreducible(modulus, p)) throw DomainError("modulus is reducible over F_p");
    if (e == 1 && modulus[0] != 0) {
      // Any linear modulus gives the same field; keep the canonical form.
      modulus = {0, 1};
    }
    return Field(build(p, e, std::move(modulus)));
  }

  std::uint64_t p() const { return d_->p; }
  unsigned e() const { return d_->e; }
  std::uint64_t q() const { return d_->q; }
  const std::vector<std::uint64_t>& modulus() const { return d_->modulus; }
  const FieldDesc& desc() const { return *d_; }

  bool operator==(const Field& o) const {
    return d_ == o.d_ || (d_->p == o.d_->p && d_->e == o.d_->e && d_->modulus == o.d_->modulus);
  }

  // ---- raw code arithmetic ----------------------------------------------

  Code zero_code() const { return 0; }
  Code one_code() const { return 1; }

  Code add(Code a, Code b) const {
    const std::uint64_t p = d_->p;
    if (d_->e == 1) {
      const Code s = a + b;
      return s >= p ? s - p : s;
    }
    Code out = 0;
    for (unsigned i = 0; i < d_->e; ++i) {
      const std::uint64_t da = a % p;
      const std::uint64_t db = b % p;
      a /= p;
      b /= p;
      std::uint64_t s = da + db;
      if (s >= p) s -= p;
      out += s * d_->pow_p[i];
    }
    return out;
  }

  Code neg(Code a) const {
    const std::uint64_t p = d_->p;
    if (d_->e == 1) return a == 0 ? 0 : p - a;
    Code out = 0;
    for (unsigned i = 0; i < d_->e; ++i) {
      const std::uint64_t da = a % p;
      a /= p;
      out += (da == 0 ? 0 : p - da) * d_->pow_p[i];
    }
    return out;
  }

  Code sub(Code a, Code b) const { return add(a, neg(b)); }

  Code mul(Code a, Code b) const {
    if (d_->e == 1) return detail::mul_mod(a, b, d_->p);
    if (a == 0 || b == 0) return 0;
    if (!d_->log.empty()) {
      const std::uint64_t order = d_->q - 1;
      std::uint64_t k = std::uint64_t{d_->log[a]} + d_->log[b];
      if (k >= order) k -= order;
      return d_->exp[k];
    }
    return slow_mul(*d_, a, b);
  }

  Code inv(Code a) const {
    if (a == 0) throw DivisionByZero("inverse of zero field element");
    if (d_->e == 1) return detail::pow_mod(a, d_->p - 2, d_->p);
    if (!d_->log.empty()) {
      const std::uint64_t order = d_->q - 1;
      const std::uint64_t l = d_->log[a];
      return d_->exp[l == 0 ? 0 : order - l];
    }
    return pow(a, d_->q - 2);
  }

  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  Code pow(Code a, std::uint64_t k) const {
    Code r = 1;
    while (k != 0) {
      if (k & 1U) r = mul(r, a);
      a = mul(a, a);
      k >>= 1U;
    }
    return r;
  }

  /// Image of an integer in the prime subfield.
  Code from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(d_->p);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Code>(r);
  }

  std::vector<std::uint64_t> coords(Code c) const {
    std::vector<std::uint64_t> out(d_->e);
    for (unsigned i = 0; i < d_->e; ++i) {
      out[i] = c % d_->p;
      c /= d_->p;
    }
    return out;
  }

  Code from_coords(std::span<const std::uint64_t> coords) const {
    if (coords.size() != d_->e) throw DomainError("coordinate vector has wrong length");
    Code out = 0;
    for (unsigned i = 0; i < d_->e; ++i) {
      if (coords[i] >= d_->p) throw DomainError("coordinate out of range [0, p)");
      out += coords[i] * d_->pow_p[i];
    }
    return out;
  }

  /// Lexicographic order on coordinate sequences, constant coordinate first.
  std::strong_ordering compare(Code a, Code b) const {
    if (d_->e == 1) return a <=> b;
    for (unsigned i = 0; i < d_->e; ++i) {
      const auto c = (a % d_->p) <=> (b % d_->p);
      if (c != 0) return c;
      a /= d_->p;
      b /= d_->p;
    }
    return std::strong_ordering::equal;
  }

  /// The k-th element (0 <= k < q) in the order given by compare().
  Code code_at_rank(std::uint64_t rank) const {
    if (d_->e == 1) return rank;
    Code out = 0;
    for (unsigned i = d_->e; i-- > 0;) {
      out += (rank % d_->p) * d_->pow_p[i];
      rank /= d_->p;
    }
    return out;
  }

  /// Code of the generator t (coordinates (0, 1, 0, ...)); requires e >= 2.
  Code generator_code() const {
    if (d_->e < 2) throw DomainError("prime field has no generator symbol t");
    return d_->p;
  }

  // ---- element-level helpers --------------------------------------------

  FieldElement element(Code c) const;
  FieldElement from_integer(std::int64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// All q elements in increasing order.
  std::vector<FieldElement> elements() const;
  /// The q - 1 nonzero elements in increasing order.
  std::vector<FieldElement> nonzero_elements() const;

 private:
  explicit Field(std::shared_ptr<const FieldDesc> d) : d_(std::move(d)) {}

  static void validate_characteristic(std::uint64_t p, unsigned e) {
    if (e < 1) throw DomainError("extension degree must be >= 1");
    if (p == 2) throw DomainError("characteristic 2 is not supported");
    if (p > 0xFFFFFFFFULL) throw ResourceError("characteristic too large");
    if (!detail::is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
    const auto q = detail::checked_pow(p, e);
    if (!q || *q > (std::uint64_t{1} << 62)) throw ResourceError("field order exceeds 2^62");
  }

  static Code slow_mul(const FieldDesc& d, Code a, Code b) {
    const std::uint64_t p = d.p;
    const unsigned e = d.e;
    std::vector<std::uint64_t> da(e), db(e), prod(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
      da[i] = a % p;
      a /= p;
      db[i] = b % p;
      b /= p;
    }
    for (unsigned i = 0; i < e; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < e; ++j) {
        prod[i + j] = (prod[i + j] + detail::mul_mod(da[i], db[j], p)) % p;
      }
    }
    for (unsigned k = 2 * e - 1; k-- > e;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (unsigned j = 0; j < e; ++j) {
        prod[k - e + j] = (prod[k - e + j] + p - detail::mul_mod(c, d.modulus[j], p)) % p;
      }
    }
    Code out = 0;
    for (unsigned i = 0; i < e; ++i) out += prod[i] * d.pow_p[i];
    return out;
  }

  static Code slow_pow(const FieldDesc& d, Code a, std::uint64_t k) {
    Code r = 1;
    while (k != 0) {
      if (k & 1U) r = slow_mul(d, r, a);
      a = slow_mul(d, a, a);
      k >>= 1U;
    }
    return r;
  }

  static std::shared_ptr<const FieldDesc> build(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus) {
    auto d = std::make_shared<FieldDesc>();
    d->p = p;
    d->e = e;
    d->q = *detail::checked_pow(p, e);
    d->modulus = std::move(modulus);
    d->pow_p.resize(e + 1);
    for (unsigned i = 0; i <= e; ++i) d->pow_p[i] = *detail::checked_pow(p, i);
    if (e > 1 && d->q <= kLogTableLimit) {
      const std::uint64_t order = d->q - 1;
      const auto primes = detail::prime_divisors(order);
      Code g = 0;
      for (Code c = 2; c < d->q; ++c) {
        bool primitive = true;
        for (std::uint64_t l : primes) {
          if (slow_pow(*d, c, order / l) == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) {
          g = c;
          break;
        }
      }
      if (g == 0) throw InternalError("no primitive element found");
      d->exp.resize(order);
      d->log.assign(d->q, 0);
      Code x = 1;
      for (std::uint64_t i = 0; i < order; ++i) {
        d->exp[i] = static_cast<std::uint32_t>(x);
        d->log[x] = static_cast<std::uint32_t>(i);
        x = slow_mul(*d, x, g);
      }
    }
    return d;
  }

  std::shared_ptr<const FieldDesc> d_;
};

inline Field make_field(std::uint64_t p, unsigned e) { return Field::make(p, e); }

/// Element of a Field.  Value type; carries its field so mixed-field
/// arithmetic is detected.
class FieldElement {
 public:
  FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_.q()) throw DomainError("element code out of range");
  }

  const Field& field() const { return field_; }
  Code code() const { return code_; }
  std::vector<std::uint64_t> coords() const { return field_.coords(code_); }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FieldElement operator+(const FieldElement& o) const { return {field_, field_.add(code_, checked(o))}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, field_.sub(code_, checked(o))}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, field_.mul(code_, checked(o))}; }
  FieldElement operator/(const FieldElement& o) const { return {field_, field_.div(code_, checked(o))}; }
  FieldElement operator-() const { return {field_, field_.neg(code_)}; }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inv() const { return {field_, field_.inv(code_)}; }

  /// Integer power; negative exponents go through the inverse.
  FieldElement pow(std::int64_t k) const {
    if (k >= 0) return {field_, field_.pow(code_, static_cast<std::uint64_t>(k))};
    const auto m = static_cast<std::uint64_t>(-(k + 1)) + 1;
    return {field_, field_.pow(field_.inv(code_), m)};
  }

  bool operator==(const FieldElement& o) const { return code_ == o.code_ && field_ == o.field_; }

  std::strong_ordering operator<=>(const FieldElement& o) const { return field_.compare(code_, checked(o)); }

 private:
  Code checked(const FieldElement& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("operands belong to different fields");
    return o.code_;
  }

  Field field_;
  Code code_;
};

inline FieldElement Field::element(Code c) const { return {*this, c}; }
inline FieldElement Field::from_integer(std::int64_t v) const { return {*this, from_int(v)}; }
inline FieldElement Field::zero() const { return {*this, 0}; }
inline FieldElement Field::one() const { return {*this, 1}; }

inline std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q());
  for (std::uint64_t k = 0; k < q(); ++k) out.emplace_back(*this, code_at_rank(k));
  return out;
}

inline std::vector<FieldElement> Field::nonzero_elements() const {
  auto all = elements();
  all.erase(all.begin());
  return all;
}

/// Euler's criterion.  Throws DomainError on zero.
inline bool is_square(const FieldElement& a) {
  if (a.is_zero()) throw DomainError("quadratic character of zero is undefined");
  const Field& f = a.field();
  return f.pow(a.code(), (f.q() - 1) / 2) == 1;
}

namespace detail {

inline std::optional<Code> tonelli_shanks(const Field& f, Code a) {
  const std::uint64_t q = f.q();
  if (f.pow(a, (q - 1) / 2) != 1) return std::nullopt;
  std::uint64_t t = q - 1;
  unsigned s = 0;
  while ((t & 1U) == 0) {
    t >>= 1U;
    ++s;
  }
  Code z = 0;
  for (std::uint64_t k = 1; k < q; ++k) {
    const Code c = f.code_at_rank(k);
    if (f.pow(c, (q - 1) / 2) != 1) {
      z = c;
      break;
    }
  }
  Code c = f.pow(z, t);
  Code x = f.pow(a, (t + 1) / 2);
  Code b = f.pow(a, t);
  unsigned m = s;
  while (b != 1) {
    unsigned i = 0;
    Code bb = b;
    while (bb != 1) {
      bb = f.mul(bb, bb);
      ++i;
    }
    Code w = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) w = f.mul(w, w);
    x = f.mul(x, w);
    c = f.mul(w, w);
    b = f.mul(b, c);
    m = i;
  }
  return x;
}

}  // namespace detail

/// Canonical square root: of the two roots r and -r, the one with the
/// lexicographically smaller coordinate sequence.  Empty for non-squares.
inline std::optional<FieldElement> sqrt(const FieldElement& a) {
  const Field& f = a.field();
  if (a.is_zero()) return f.zero();
  if (f.q() <= kExhaustiveSqrtLimit) {
    for (std::uint64_t k = 1; k < f.q(); ++k) {
      const Code c = f.code_at_rank(k);
      if (f.mul(c, c) == a.code()) return f.element(c);
    }
    return std::nullopt;
  }
  const auto r = detail::tonelli_shanks(f, a.code());
  if (!r) return std::nullopt;
  const Code other = f.neg(*r);
  return f.element(f.compare(*r, other) < 0 ? *r : other);
}

/// x^(p^k).
inline FieldElement frobenius(const FieldElement& x, std::uint64_t k) {
  const Field& f = x.field();
  Code c = x.code();
  for (std::uint64_t i = 0; i < k % f.e(); ++i) c = f.pow(c, f.p());
  return f.element(c);
}

// ---- text format ---------------------------------------------------------

/// Prime fields: decimal.  Extension fields: "c0+c1*t+...+c_{e-1}*t^{e-1}"
/// with zero terms omitted; zero prints as "0".
inline std::string to_string(const FieldElement& x) {
  const Field& f = x.field();
  if (f.e() == 1) return std::to_string(x.code());
  if (x.is_zero()) return "0";
  const auto c = x.coords();
  std::string out;
  for (unsigned i = 0; i < f.e(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(c[i]);
    if (i == 1) {
      out += "*t";
    } else if (i > 1) {
      out += "*t^" + std::to_string(i);
    }
  }
  return out;
}

namespace detail {

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw DomainError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

}  // namespace detail

/// Parses an element.  Accepts the output of to_string, plain (possibly
/// negative) integers, and signed sums of terms "c", "c*t^k", "c*t", "t^k", "t".
inline FieldElement parse_element(const Field& f, std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw DomainError("empty field element");
  Code acc = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw DomainError("malformed field element: '" + s + "'");
    const auto tpos = term.find('t');
    Code value = 0;
    if (tpos == std::string_view::npos) {
      value = f.from_int(detail::parse_int(term, "field element"));
    } else {
      std::string_view coef = term.substr(0, tpos);
      if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
      const Code c = coef.empty() ? 1 : f.from_int(detail::parse_int(coef, "field element"));
      std::string_view rest = term.substr(tpos + 1);
      std::uint64_t k = 1;
      if (!rest.empty()) {
        if (rest.front() != '^') throw DomainError("malformed field element: '" + s + "'");
        const auto kk = detail::parse_int(rest.substr(1), "exponent");
        if (kk < 0) throw DomainError("negative exponent in field element");
        k = static_cast<std::uint64_t>(kk);
      }
      value = f.mul(c, f.pow(f.generator_code(), k));
    }
    acc = negative ? f.sub(acc, value) : f.add(acc, value);
    pos = end;
  }
  return f.element(acc);
}

/// Field spec "p", "p^e", or a prime power written as a plain integer ("9").
inline Field parse_field_spec(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  const auto caret = s.find('^');
  if (caret != std::string::npos) {
    const auto p = detail::parse_int(std::string_view(s).substr(0, caret), "field spec");
    const auto e = detail::parse_int(std::string_view(s).substr(caret + 1), "field spec");
    if (p < 2 || e < 1 || e > 64) throw DomainError("invalid field spec '" + s + "'");
    return make_field(static_cast<std::uint64_t>(p), static_cast<unsigned>(e));
  }
  const auto q = detail::parse_int(s, "field spec");
  if (q < 2) throw DomainError("invalid field spec '" + s + "'");
  const auto primes = detail::prime_divisors(static_cast<std::uint64_t>(q));
  if (primes.size() != 1) throw DomainError("field order " + s + " is not a prime power");
  unsigned e = 0;
  for (auto r = static_cast<std::uint64_t>(q); r > 1; r /= primes[0]) ++e;
  return make_field(primes[0], e);
}

/// Inverse of parse_field_spec: "p" or "p^e".
inline std::string field_spec(const Field& f) {
  return f.e() == 1 ? std::to_string(f.p()) : std::to_string(f.p()) + "^" + std::to_string(f.e());
}

}  // namespace srpoly

#endif  // SRPOLY_FIELD_HPP
