#ifndef SRPOLY_FACTOR_HPP
#define SRPOLY_FACTOR_HPP

// Irreducibility testing and complete factorization over F_q, q odd.
//
// factorize() runs square-free decomposition (including the p-th root step
// for polynomials with vanishing derivative), distinct-degree factorization
// and Cantor-Zassenhaus equal-degree splitting.  Splitting draws random
// polynomials from a generator seeded per call, so results are reproducible.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "srpoly/error.hpp"
#include "srpoly/field.hpp"
#include "srpoly/poly.hpp"

namespace srpoly {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;

struct Factor {
  Polynomial poly;  ///< monic irreducible
  int multiplicity = 1;
};

struct Factorization {
  FieldElement unit;
  /// Sorted by (degree, coefficients constant term first).
  std::vector<Factor> factors;
  std::uint64_t seed = kDefaultSeed;

  Polynomial expand() const {
    Polynomial out = Polynomial::constant(unit);
    for (const auto& f : factors) out *= pow(f.poly, static_cast<std::uint64_t>(f.multiplicity));
    return out;
  }

  int count(bool with_multiplicity) const {
    int n = 0;
    for (const auto& f : factors) n += with_multiplicity ? f.multiplicity : 1;
    return n;
  }
};

/// Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/l)) - x, f) = 1 for every
/// prime l | n.
inline bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) throw DomainError("irreducibility of a constant is undefined");
  const Polynomial g = f.monic();
  const auto n = static_cast<std::uint64_t>(g.degree());
  if (n == 1) return true;
  const Polynomial x = Polynomial::x(g.field()) % g;
  if (x_pow_q_pow_mod(n, g) != x) return false;
  for (std::uint64_t l : detail::prime_divisors(n)) {
    if (gcd(x_pow_q_pow_mod(n / l, g) - x, g).degree() != 0) return false;
  }
  return true;
}

namespace detail {

/// f(x) = h(x^p) with f' = 0; returns the polynomial whose p-th power is f.
inline Polynomial pth_root(const Polynomial& f) {
  const Field& fd = f.field();
  const auto p = static_cast<std::size_t>(fd.p());
  std::vector<Code> out(f.codes().size() / p + 1, 0);
  for (std::size_t i = 0; i < f.codes().size(); ++i) {
    const Code c = f.codes()[i];
    if (c == 0) continue;
    if (i % p != 0) throw InternalError("pth_root on a polynomial with nonzero derivative");
    out[i / p] = frobenius(fd.element(c), fd.e() - 1).code();
  }
  return {fd, std::move(out)};
}

/// Square-free decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
inline std::vector<Factor> squarefree_parts(const Polynomial& f) {
  std::vector<Factor> out;
  if (f.degree() < 1) return out;
  const Field& fd = f.field();
  Polynomial c = gcd(f, derivative(f));
  Polynomial w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial fac = w / y;
    if (fac.degree() > 0) out.push_back({fac, i});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) {
    const int p = static_cast<int>(fd.p());
    for (auto& part : squarefree_parts(pth_root(c))) {
      out.push_back({std::move(part.poly), part.multiplicity * p});
    }
  }
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<Polynomial, int>> distinct_degree(Polynomial f) {
  std::vector<std::pair<Polynomial, int>> out;
  const Polynomial xx = Polynomial::x(f.field());
  Polynomial h = xx % f;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = pow_mod(h, f.field().q(), f);
    Polynomial g = gcd(f, h - xx);
    if (g.degree() > 0) {
      f = f / g;
      h = h % f;
      out.emplace_back(std::move(g), d);
    }
  }
  if (f.degree() > 0) {
    const int d = f.degree();
    out.emplace_back(std::move(f), d);
  }
  return out;
}

/// Splits a monic squarefree product of irreducibles of common degree d.
inline std::vector<Polynomial> equal_degree(const Polynomial& f, int d, std::mt19937_64& rng) {
  std::vector<Polynomial> parts{f};
  const std::size_t target = static_cast<std::size_t>(f.degree() / d);
  const Field& fd = f.field();
  const std::uint64_t half = (fd.q() - 1) / 2;
  while (parts.size() < target) {
    std::vector<Code> rc(static_cast<std::size_t>(f.degree()));
    for (auto& c : rc) c = rng() % fd.q();
    const Polynomial h(fd, std::move(rc));
    if (h.degree() < 1) continue;
    // h^((q^d - 1)/2) = prod_{i<d} (h^((q-1)/2))^(q^i)
    Polynomial s = pow_mod(h, half, f);
    Polynomial acc = s;
    for (int i = 1; i < d; ++i) {
      s = pow_mod(s, fd.q(), f);
      acc = (acc * s) % f;
    }
    const Polynomial g = acc - Polynomial::constant(fd.one());
    std::vector<Polynomial> next;
    for (auto& u : parts) {
      if (u.degree() == d) {
        next.push_back(std::move(u));
        continue;
      }
      Polynomial k = gcd(g, u);
      if (k.degree() > 0 && k.degree() < u.degree()) {
        next.push_back(u / k);
        next.push_back(std::move(k));
      } else {
        next.push_back(std::move(u));
      }
    }
    parts = std::move(next);
  }
  return parts;
}

}  // namespace detail

inline Factorization factorize(const Polynomial& f, std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization out{f.leading(), {}, seed};
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(seed);
  for (const auto& part : detail::squarefree_parts(f.monic())) {
    for (const auto& [block, d] : detail::distinct_degree(part.poly)) {
      for (auto& irr : detail::equal_degree(block, d, rng)) {
        out.factors.push_back({std::move(irr), part.multiplicity});
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  std::vector<Factor> merged;
  for (auto& fac : out.factors) {
    if (!merged.empty() && merged.back().poly == fac.poly) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  out.factors = std::move(merged);
  return out;
}

inline int factor_count(const Polynomial& f, bool with_multiplicity, std::uint64_t seed = kDefaultSeed) {
  if (f.degree() < 1) throw DomainError("factor_count needs a nonconstant polynomial");
  return factorize(f, seed).count(with_multiplicity);
}

}  // namespace srpoly

#endif  // SRPOLY_FACTOR_HPP
