#ifndef SRPOLY_RECIP_HPP
#define SRPOLY_RECIP_HPP

// a-reciprocal polynomials over F_q.
//
// For monic f = sum b_i x^i of degree n with b_0 != 0 and a != 0, the
// a-reciprocal is
//
//     f^_a(x) = x^n f(a/x) / b_0 = (1/b_0) sum b_{n-i} a^{n-i} x^i,
//
// a monic polynomial whose roots are a/alpha for the roots alpha of f.  f is
// a-self-reciprocal (a-srm) when f^_a = f, i.e. b_{n-i} b_0 = b_i a^i for all i.
// An a-srm of even degree 2m has b_0 = a^m (nontrivial) or b_0 = -a^m
// (trivial).  An odd-degree a-srm exists only for square a, with
// b_0 = +-(sqrt a)^n.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "srpoly/error.hpp"
#include "srpoly/field.hpp"
#include "srpoly/poly.hpp"

namespace srpoly {

enum class SrmVerdict { NotSelfReciprocal, OddSrmPlus, OddSrmMinus, Trivial, Nontrivial };

inline const char* to_string(SrmVerdict v) {
  switch (v) {
    case SrmVerdict::NotSelfReciprocal: return "NotSelfReciprocal";
    case SrmVerdict::OddSrmPlus: return "OddSrmPlus";
    case SrmVerdict::OddSrmMinus: return "OddSrmMinus";
    case SrmVerdict::Trivial: return "Trivial";
    case SrmVerdict::Nontrivial: return "Nontrivial";
  }
  return "?";
}

struct SrmClassification {
  SrmVerdict verdict = SrmVerdict::NotSelfReciprocal;
  /// m when the degree is 2m.
  std::optional<int> half_degree;
};

enum class Parity { Even, Odd, NotApplicable };

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "Even";
    case Parity::Odd: return "Odd";
    case Parity::NotApplicable: return "NotApplicable";
  }
  return "?";
}

/// Parity of the number of irreducible factors (counted with multiplicity)
/// of a nontrivial a-srm, read off from the quadratic character of
/// indicator = (-1)^n a^(n(n-2)) (A^2 - a B^2).
struct ParityVerdict {
  Parity verdict;
  FieldElement indicator;
  std::string reason;
};

/// f = factor^k * g
struct Stripped {
  int k = 0;
  Polynomial g;
};

/// f(sqrt a) f(-sqrt a) = A^2 - a B^2 with A = sum b_{2i} a^i, B = sum b_{2i+1} a^i.
struct SqrtPairValue {
  FieldElement value;
  FieldElement A;
  FieldElement B;
};

namespace detail {

inline void require_reciprocable(const Polynomial& f, const FieldElement& a) {
  f.check(a.field());
  if (a.is_zero()) throw DomainError("parameter a must be nonzero");
  if (!f.is_monic()) throw DomainError("a-reciprocal is defined for monic polynomials only");
  if (f.constant_term().is_zero()) throw DomainError("a-reciprocal needs f(0) != 0");
}

/// x^2 - a
inline Polynomial x2_minus_a(const FieldElement& a) {
  return Polynomial::monomial(a.field().one(), 2) - Polynomial::constant(a);
}

}  // namespace detail

inline Polynomial a_reciprocal(const Polynomial& f, const FieldElement& a) {
  detail::require_reciprocable(f, a);
  const Field& fd = f.field();
  const auto n = static_cast<std::size_t>(f.degree());
  const Code inv_b0 = fd.inv(f.code(0));
  std::vector<Code> out(n + 1);
  Code a_pow = 1;  // a^j, j = n - i
  for (std::size_t j = 0; j <= n; ++j) {
    out[n - j] = fd.mul(fd.mul(f.code(j), a_pow), inv_b0);
    a_pow = fd.mul(a_pow, a.code());
  }
  return {fd, std::move(out)};
}

inline bool is_a_self_reciprocal(const Polynomial& f, const FieldElement& a) {
  detail::require_reciprocable(f, a);
  const Field& fd = f.field();
  const auto n = static_cast<std::size_t>(f.degree());
  const Code b0 = f.code(0);
  Code a_pow = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (fd.mul(f.code(n - i), b0) != fd.mul(f.code(i), a_pow)) return false;
    a_pow = fd.mul(a_pow, a.code());
  }
  return true;
}

inline SrmClassification classify(const Polynomial& f, const FieldElement& a) {
  const bool srm = is_a_self_reciprocal(f, a);
  const int n = f.degree();
  SrmClassification out;
  if (n % 2 == 0) out.half_degree = n / 2;
  if (!srm) return out;
  const FieldElement b0 = f.constant_term();
  if (n % 2 == 0) {
    const FieldElement am = a.pow(n / 2);
    if (b0 == am) {
      out.verdict = SrmVerdict::Nontrivial;
    } else if (b0 == -am) {
      out.verdict = SrmVerdict::Trivial;
    } else {
      throw InternalError("even-degree a-srm with b_0 != +-a^m");
    }
    return out;
  }
  const auto root = sqrt(a);
  if (!root) throw InternalError("odd-degree a-srm found for a non-square a");
  const FieldElement rn = root->pow(n);
  if (b0 == rn) {
    out.verdict = SrmVerdict::OddSrmPlus;
  } else if (b0 == -rn) {
    out.verdict = SrmVerdict::OddSrmMinus;
  } else {
    throw InternalError("odd-degree a-srm with b_0 != +-(sqrt a)^n");
  }
  return out;
}

/// Writes an even-degree a-srm as (x^2 - a)^k g with g a nontrivial a-srm
/// not divisible by x^2 - a; k is odd iff f is trivial.
inline Stripped strip_x2_minus_a(const Polynomial& f, const FieldElement& a) {
  const auto cls = classify(f, a);
  if (cls.verdict != SrmVerdict::Trivial && cls.verdict != SrmVerdict::Nontrivial) {
    throw DomainError("strip_x2_minus_a needs an even-degree a-srm polynomial");
  }
  const Polynomial d = detail::x2_minus_a(a);
  Stripped out{0, f};
  while (out.g.degree() >= 2) {
    auto [quo, rem] = divrem(out.g, d);
    if (!rem.is_zero()) break;
    out.g = std::move(quo);
    ++out.k;
  }
  const bool odd_k = out.k % 2 == 1;
  if (odd_k != (cls.verdict == SrmVerdict::Trivial) || classify(out.g, a).verdict != SrmVerdict::Nontrivial) {
    throw InternalError("x^2 - a stripping produced an inconsistent cofactor");
  }
  return out;
}

/// For square a and a nontrivial a-srm f with x^2 - a not dividing f, writes
/// f = (x - r)^k g with r = sign * sqrt(a), k even, g(r) != 0.
inline Stripped strip_linear_sqrt(const Polynomial& f, const FieldElement& a, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (classify(f, a).verdict != SrmVerdict::Nontrivial) {
    throw DomainError("strip_linear_sqrt needs a nontrivial a-srm polynomial");
  }
  const auto root = sqrt(a);
  if (!root) throw DomainError("strip_linear_sqrt needs a square a");
  if ((f % detail::x2_minus_a(a)).is_zero()) throw DomainError("input is divisible by x^2 - a");
  const FieldElement r = sign == 1 ? *root : -*root;
  const Polynomial lin = Polynomial::x(f.field()) - Polynomial::constant(r);
  Stripped out{0, f};
  while (out.g.degree() >= 1 && out.g.eval(r).is_zero()) {
    out.g = out.g / lin;
    ++out.k;
  }
  if (out.k % 2 != 0 || classify(out.g, a).verdict != SrmVerdict::Nontrivial) {
    throw InternalError("linear stripping produced an odd power or a non-srm cofactor");
  }
  return out;
}

/// Dickson polynomial of the first kind: D_0 = 2, D_1 = x,
/// D_k = x D_{k-1} - a D_{k-2}.  Satisfies D_k(y + a/y) = y^k + (a/y)^k.
inline Polynomial dickson(int k, const FieldElement& a) {
  if (k < 0) throw DomainError("Dickson polynomial degree must be >= 0");
  const Field& fd = a.field();
  Polynomial prev = Polynomial::constant(fd.from_integer(2));
  if (k == 0) return prev;
  Polynomial cur = Polynomial::x(fd);
  const Polynomial xx = cur;
  for (int i = 2; i <= k; ++i) {
    Polynomial next = xx * cur - prev * a;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// x^n f(x + a/x) = sum b_i x^(n-i) (x^2 + a)^i for monic f of degree n.
inline Polynomial quadratic_transform(const Polynomial& f, const FieldElement& a) {
  f.check(a.field());
  if (a.is_zero()) throw DomainError("parameter a must be nonzero");
  if (!f.is_monic()) throw DomainError("quadratic_transform needs a monic polynomial");
  const Field& fd = f.field();
  const auto n = static_cast<std::size_t>(f.degree());
  const Polynomial x2a = Polynomial::monomial(fd.one(), 2) + Polynomial::constant(a);
  Polynomial out(fd);
  Polynomial power = Polynomial::constant(fd.one());
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.code(i) != 0) out += (power * f.coeff(i)).shift(n - i);
    if (i < n) power *= x2a;
  }
  return out;
}

/// Inverse of quadratic_transform: for a nontrivial a-srm f of degree 2n,
/// g = b_n + sum_{j=1..n} b_{n+j} D_{j,a}(x), so that x^n g(x + a/x) = f.
inline Polynomial g_from_srm(const Polynomial& f, const FieldElement& a) {
  if (classify(f, a).verdict != SrmVerdict::Nontrivial) {
    throw DomainError("g_from_srm needs a nontrivial a-srm polynomial");
  }
  const Field& fd = f.field();
  const int n = f.degree() / 2;
  Polynomial g = Polynomial::constant(f.coeff(static_cast<std::size_t>(n)));
  // Build D_j incrementally rather than calling dickson() n times.
  const Polynomial xx = Polynomial::x(fd);
  Polynomial prev = Polynomial::constant(fd.from_integer(2));
  Polynomial cur = xx;
  for (int j = 1; j <= n; ++j) {
    g += cur * f.coeff(static_cast<std::size_t>(n + j));
    Polynomial next = xx * cur - prev * a;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (quadratic_transform(g, a) != f) throw InternalError("Dickson-basis inversion failed to round trip");
  return g;
}

/// A, B and A^2 - a B^2, computed in F_q without adjoining sqrt(a).
inline SqrtPairValue eval_at_sqrt_pair(const Polynomial& f, const FieldElement& a) {
  f.check(a.field());
  if (a.is_zero()) throw DomainError("parameter a must be nonzero");
  const Field& fd = f.field();
  Code A = 0;
  Code B = 0;
  Code a_pow = 1;
  for (std::size_t i = 0; 2 * i < f.codes().size(); ++i) {
    A = fd.add(A, fd.mul(f.code(2 * i), a_pow));
    B = fd.add(B, fd.mul(f.code(2 * i + 1), a_pow));
    a_pow = fd.mul(a_pow, a.code());
  }
  const Code value = fd.sub(fd.mul(A, A), fd.mul(a.code(), fd.mul(B, B)));
  return {fd.element(value), fd.element(A), fd.element(B)};
}

inline ParityVerdict parity_indicator(const Polynomial& f, const FieldElement& a) {
  if (classify(f, a).verdict != SrmVerdict::Nontrivial) {
    throw DomainError("parity_indicator needs a nontrivial a-srm polynomial");
  }
  const std::int64_t n = f.degree() / 2;
  FieldElement ind = a.pow(n * (n - 2)) * eval_at_sqrt_pair(f, a).value;
  if (n % 2 == 1) ind = -ind;
  if (ind.is_zero()) {
    return {Parity::NotApplicable, ind, "f vanishes at sqrt(a) or -sqrt(a)"};
  }
  return {is_square(ind) ? Parity::Even : Parity::Odd, ind, ""};
}

/// Both sides of D(f) = (-1)^n a^(n(n-2)) (A^2 - a B^2) D(g)^2.
inline std::pair<FieldElement, FieldElement> discriminant_identity_sides(const Polynomial& f,
                                                                         const FieldElement& a) {
  const Polynomial g = g_from_srm(f, a);
  const FieldElement lhs = discriminant(f);
  const FieldElement dg = discriminant(g);
  const std::int64_t n = g.degree();
  FieldElement rhs = a.pow(n * (n - 2)) * eval_at_sqrt_pair(f, a).value * dg * dg;
  if (n % 2 == 1) rhs = -rhs;
  return {lhs, rhs};
}

inline bool discriminant_identity_check(const Polynomial& f, const FieldElement& a) {
  const auto [lhs, rhs] = discriminant_identity_sides(f, a);
  return lhs == rhs;
}

}  // namespace srpoly

#endif  // SRPOLY_RECIP_HPP
