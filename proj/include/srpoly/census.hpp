#ifndef SRPOLY_CENSUS_HPP
#define SRPOLY_CENSUS_HPP

// Counting a-self-reciprocal irreducible monic polynomials (a-srim).
//
//   H_{n,q}(x) = x^(q^n + 1) - a
//   delta      = -1 if a is a square, or a is a non-square and n is even; +1 otherwise
//   M_{n,q}(x) = H_{n,q}(x) / (x^2 - a) when delta = -1, else H_{n,q}(x)
//   si(n, q)   = number of nontrivial a-srim polynomials of degree 2n
//
// M_{n,q} is the product of SI_{d,q} over d | n with n/d odd, which inverts
// (odd-divisor Moebius inversion) to SI_{n,q} = prod_{d | n, d odd} M_{n/d,q}^mu(d)
// and si(n, q) = (1/2n) sum_{d | n, d odd} mu(d) (q^(n/d) + delta).

#include <cstdint>
#include <string>
#include <vector>

#include "srpoly/error.hpp"
#include "srpoly/factor.hpp"
#include "srpoly/field.hpp"
#include "srpoly/poly.hpp"
#include "srpoly/recip.hpp"

namespace srpoly {

/// Largest number of coefficients h_poly / m_poly will materialise.
inline constexpr std::size_t kDefaultDegreeBudget = 100000;

enum class SrmKind { Trivial, Nontrivial };

namespace detail {

inline std::int64_t checked_ipow(std::int64_t base, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw ResourceError("integer overflow in q^n");
  }
  return r;
}

inline void require_same_field(const Field& f, const FieldElement& a) {
  if (!(a.field() == f)) throw FieldMismatch("a does not belong to the given field");
  if (a.is_zero()) throw DomainError("parameter a must be nonzero");
}

inline bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace detail

inline int mobius(std::int64_t d) {
  if (d < 1) throw DomainError("mobius needs d >= 1");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

/// Odd divisors of n in increasing order.
inline std::vector<std::int64_t> odd_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; d += 2) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline int delta(const Field& field, const FieldElement& a, int n) {
  detail::require_same_field(field, a);
  if (n < 1) throw DomainError("n must be >= 1");
  return (is_square(a) || n % 2 == 0) ? -1 : 1;
}

/// x^(q^n + 1) - a
inline Polynomial h_poly(const Field& field, const FieldElement& a, int n,
                         std::size_t budget = kDefaultDegreeBudget) {
  detail::require_same_field(field, a);
  if (n < 1) throw DomainError("n must be >= 1");
  const auto qn = detail::checked_ipow(static_cast<std::int64_t>(field.q()), n);
  if (static_cast<std::uint64_t>(qn) + 2 > budget) {
    throw ResourceError("H_{n,q} has degree " + std::to_string(qn + 1) + ", over the budget of " +
                        std::to_string(budget) + " coefficients");
  }
  std::vector<Code> c(static_cast<std::size_t>(qn) + 2, 0);
  c.back() = 1;
  c[0] = field.neg(a.code());
  return {field, std::move(c)};
}

/// Decides x^2 - a | H_{n,q} by computing x^(q^n + 1) mod (x^2 - a); no
/// degree budget applies.
inline bool x2_minus_a_divides_h(const Field& field, const FieldElement& a, int n) {
  detail::require_same_field(field, a);
  const Polynomial m = detail::x2_minus_a(a);
  const Polynomial r = (x_pow_q_pow_mod(static_cast<std::uint64_t>(n), m) * Polynomial::x(field)) % m;
  return r == Polynomial::constant(a);
}

inline Polynomial m_poly(const Field& field, const FieldElement& a, int n,
                         std::size_t budget = kDefaultDegreeBudget) {
  Polynomial h = h_poly(field, a, n, budget);
  if (delta(field, a, n) == 1) return h;
  auto [quo, rem] = divrem(h, detail::x2_minus_a(a));
  if (!rem.is_zero()) throw InternalError("x^2 - a does not divide H_{n,q} although delta = -1");
  return quo;
}

/// Closed forms: n = 1 gives (q -+ 1)/2 by squareness of a; n > 1 gives
/// (q^n - 1)/(2n) for n a power of two and (1/2n) sum_{d|n odd} mu(d) q^(n/d)
/// otherwise.
inline std::int64_t si_formula(std::uint64_t q, bool a_is_square, int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  const auto qq = static_cast<std::int64_t>(q);
  if (n == 1) return a_is_square ? (qq - 1) / 2 : (qq + 1) / 2;
  std::int64_t num = 0;
  if (detail::is_power_of_two(n)) {
    num = detail::checked_ipow(qq, n) - 1;
  } else {
    for (auto d : odd_divisors(n)) num += mobius(d) * detail::checked_ipow(qq, n / d);
  }
  if (num < 0 || num % (2 * n) != 0) throw InternalError("si formula is not a nonnegative integer");
  return num / (2 * n);
}

inline std::int64_t si_formula(const Field& field, bool a_is_square, int n) {
  return si_formula(field.q(), a_is_square, n);
}

/// The unsimplified Moebius sum (1/2n) sum_{d|n odd} mu(d) (q^(n/d) + delta).
inline std::int64_t si_mobius_sum(std::uint64_t q, int delta_value, int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  std::int64_t num = 0;
  for (auto d : odd_divisors(n)) {
    num += mobius(d) * (detail::checked_ipow(static_cast<std::int64_t>(q), n / d) + delta_value);
  }
  if (num < 0 || num % (2 * n) != 0) throw InternalError("Moebius sum is not a nonnegative integer");
  return num / (2 * n);
}

/// Classical count S_q(n) of self-reciprocal irreducible monic polynomials of
/// degree 2n over F_q, q odd.
inline std::int64_t carlitz_count(std::uint64_t q, int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  const auto qq = static_cast<std::int64_t>(q);
  std::int64_t num = 0;
  if (detail::is_power_of_two(n)) {
    num = detail::checked_ipow(qq, n) - 1;
  } else {
    for (auto d : odd_divisors(n)) num += mobius(d) * detail::checked_ipow(qq, n / d);
  }
  return num / (2 * n);
}

/// Visits every monic a-srm of the given degree with constant term b0, in
/// lexicographic order of the free upper coefficients (lowest index most
/// significant, element order per Field::compare).  Visits nothing when
/// b0^2 != a^degree.
template <class Visit>
void for_each_srm_with_constant(const FieldElement& a, int degree, const FieldElement& b0, Visit&& visit) {
  const Field& fd = a.field();
  if (a.is_zero() || b0.is_zero() || degree < 1) throw DomainError("invalid a-srm enumeration request");
  if (b0 * b0 != a.pow(degree)) return;
  const auto N = static_cast<std::size_t>(degree);
  const std::size_t half = N / 2;
  const bool middle_free = N % 2 == 0 && b0 == a.pow(static_cast<std::int64_t>(half));
  std::vector<std::size_t> free_idx;
  if (middle_free) free_idx.push_back(half);
  for (std::size_t i = half + 1; i < N; ++i) free_idx.push_back(i);

  std::vector<Code> inv_apow(N + 1);
  const Code inv_a = fd.inv(a.code());
  inv_apow[0] = 1;
  for (std::size_t i = 1; i <= N; ++i) inv_apow[i] = fd.mul(inv_apow[i - 1], inv_a);

  std::vector<std::uint64_t> rank(free_idx.size(), 0);
  std::vector<Code> c(N + 1, 0);
  c[N] = 1;
  while (true) {
    for (std::size_t k = 0; k < free_idx.size(); ++k) c[free_idx[k]] = fd.code_at_rank(rank[k]);
    // b_i = b_{N-i} b_0 / a^i for i < N - i
    for (std::size_t i = 0; 2 * i < N; ++i) c[i] = fd.mul(fd.mul(c[N - i], b0.code()), inv_apow[i]);
    visit(Polynomial(fd, c));
    std::size_t k = free_idx.size();
    while (k > 0) {
      --k;
      if (++rank[k] < fd.q()) break;
      rank[k] = 0;
      if (k == 0) return;
    }
    if (free_idx.empty()) return;
  }
}

/// Monic a-srm polynomials of degree 2n of the requested kind: q^n nontrivial,
/// q^(n-1) trivial.
template <class Visit>
void for_each_srm(const Field& field, const FieldElement& a, int n, SrmKind kind, Visit&& visit) {
  detail::require_same_field(field, a);
  if (n < 1) throw DomainError("n must be >= 1");
  const FieldElement an = a.pow(n);
  for_each_srm_with_constant(a, 2 * n, kind == SrmKind::Nontrivial ? an : -an, std::forward<Visit>(visit));
}

inline std::vector<Polynomial> enumerate_srm(const Field& field, const FieldElement& a, int n, SrmKind kind) {
  std::vector<Polynomial> out;
  for_each_srm(field, a, n, kind, [&](const Polynomial& f) { out.push_back(f); });
  return out;
}

/// Nontrivial a-srim polynomials of degree 2n, in enumeration order.
inline std::vector<Polynomial> enumerate_srim(const Field& field, const FieldElement& a, int n) {
  std::vector<Polynomial> out;
  for_each_srm(field, a, n, SrmKind::Nontrivial, [&](const Polynomial& f) {
    if (is_irreducible(f)) out.push_back(f);
  });
  return out;
}

inline std::int64_t si_enumerated(const Field& field, const FieldElement& a, int n) {
  std::int64_t count = 0;
  for_each_srm(field, a, n, SrmKind::Nontrivial, [&](const Polynomial& f) {
    if (is_irreducible(f)) ++count;
  });
  return count;
}

/// SI_{n,q}: product of all nontrivial a-srim of degree 2n.  Also evaluates
/// prod_{d | n, d odd} M_{n/d,q}^mu(d) with exact division and throws
/// InternalError if the two disagree.
inline Polynomial si_product(const Field& field, const FieldElement& a, int n,
                             std::size_t budget = kDefaultDegreeBudget) {
  Polynomial direct = Polynomial::constant(field.one());
  for (const auto& f : enumerate_srim(field, a, n)) direct *= f;

  Polynomial num = Polynomial::constant(field.one());
  Polynomial den = Polynomial::constant(field.one());
  for (auto d : odd_divisors(n)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const Polynomial m = m_poly(field, a, static_cast<int>(n / d), budget);
    (mu == 1 ? num : den) *= m;
  }
  auto [quo, rem] = divrem(num, den);
  if (!rem.is_zero()) throw InternalError("Moebius product of M polynomials is not a polynomial");
  if (quo != direct) throw InternalError("Moebius product of M polynomials differs from the enumerated SI product");
  return direct;
}

struct Corollary2Report {
  std::int64_t lhs = 0;       ///< q^n + delta
  std::int64_t rhs = 0;       ///< sum_{d | n, n/d odd} 2d si(d, q), si by enumeration
  std::int64_t m_degree = 0;  ///< deg M_{n,q}
  bool ok = false;
};

inline Corollary2Report corollary2_report(const Field& field, const FieldElement& a, int n) {
  Corollary2Report r;
  const auto qn = detail::checked_ipow(static_cast<std::int64_t>(field.q()), n);
  const int dl = delta(field, a, n);
  r.lhs = qn + dl;
  r.m_degree = qn + 1 - (dl == -1 ? 2 : 0);
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0 || (n / d) % 2 == 0) continue;
    r.rhs += 2 * d * si_enumerated(field, a, static_cast<int>(d));
  }
  r.ok = r.lhs == r.rhs && r.m_degree == r.rhs;
  return r;
}

inline bool verify_corollary2(const Field& field, const FieldElement& a, int n) {
  return corollary2_report(field, a, n).ok;
}

/// Every factor of M_{n,q} of degree >= 2 is a nontrivial a-srim of degree 2d
/// with d | n and n/d odd, and every nontrivial a-srim of degree 2n divides
/// H_{n,q}.  Violations are appended to `failures` when given.
inline bool verify_theorem6(const Field& field, const FieldElement& a, int n,
                            std::vector<std::string>* failures = nullptr,
                            std::size_t budget = kDefaultDegreeBudget, std::uint64_t seed = kDefaultSeed) {
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    if (failures) failures->push_back(msg);
  };
  const Factorization fac = factorize(m_poly(field, a, n, budget), seed);
  for (const auto& [g, mult] : fac.factors) {
    if (g.degree() < 2) continue;
    const int deg = g.degree();
    const int d = deg / 2;
    if (deg % 2 != 0 || n % d != 0 || (n / d) % 2 == 0) {
      fail("factor " + to_string(g) + " has degree " + std::to_string(deg));
      continue;
    }
    if (classify(g, a).verdict != SrmVerdict::Nontrivial || !is_irreducible(g)) {
      fail("factor " + to_string(g) + " is not a nontrivial a-srim");
    }
  }
  const Polynomial xx = Polynomial::x(field);
  for (const auto& f : enumerate_srim(field, a, n)) {
    const Polynomial r = (x_pow_q_pow_mod(static_cast<std::uint64_t>(n), f) * xx) % f;
    if (r != Polynomial::constant(a) % f) fail("a-srim " + to_string(f) + " does not divide H_{n,q}");
  }
  return ok;
}

struct CensusRow {
  std::uint64_t q = 0;
  FieldElement a;
  int n = 0;
  int delta = 0;
  std::int64_t si_formula = 0;
  std::int64_t si_enumerated = 0;
  bool agreement = false;
};

inline CensusRow census_row(const Field& field, const FieldElement& a, int n, bool enumerate = true) {
  const std::int64_t formula = si_formula(field, is_square(a), n);
  const std::int64_t counted = enumerate ? si_enumerated(field, a, n) : -1;
  return {field.q(), a, n, delta(field, a, n), formula, counted, enumerate && formula == counted};
}

inline constexpr const char* kCensusCsvHeader = "q,a,n,delta,si_formula,si_enumerated,agreement";

inline std::string to_csv_line(const CensusRow& r) {
  return std::to_string(r.q) + "," + to_string(r.a) + "," + std::to_string(r.n) + "," + std::to_string(r.delta) +
         "," + std::to_string(r.si_formula) + "," + std::to_string(r.si_enumerated) + "," +
         (r.agreement ? "true" : "false");
}

}  // namespace srpoly

#endif  // SRPOLY_CENSUS_HPP
