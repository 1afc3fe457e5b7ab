#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "srpoly/srpoly.hpp"

using namespace srpoly;

namespace {

Polynomial P(const Field& f, std::initializer_list<std::int64_t> c) { return Polynomial::from_integers(f, c); }

Polynomial random_monic(const Field& f, int degree, std::mt19937_64& rng, bool unit_constant = true) {
  std::vector<Code> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rng() % f.q();
  c.back() = 1;
  if (unit_constant && c[0] == 0) c[0] = 1 + rng() % (f.q() - 1);
  return {f, c};
}

// x^6+x^5+3x^4+4x^3+2x^2+x+4 over F_5
Polynomial sample_srm(const Field& f5) { return P(f5, {4, 1, 2, 4, 3, 1, 1}); }

const std::vector<unsigned> kOrders{3, 5, 7, 9};

}  // namespace

TEST(Recip, ReciprocalExamples) {
  const Field f5 = make_field(5, 1);
  const Polynomial g = P(f5, {1, 0, 1});
  EXPECT_EQ(a_reciprocal(g, f5.element(2)), P(f5, {4, 0, 1}));
  EXPECT_EQ(a_reciprocal(g, f5.element(3)), P(f5, {4, 0, 1}));
  EXPECT_EQ(a_reciprocal(P(f5, {3, 1}), f5.element(4)), P(f5, {3, 1}));
  const Field f3 = make_field(3, 1);
  EXPECT_EQ(a_reciprocal(P(f3, {1, 2, 2, 1}), f3.one()), P(f3, {1, 2, 2, 1}));
}

TEST(Recip, ReciprocalPreconditions) {
  const Field f5 = make_field(5, 1);
  EXPECT_THROW(a_reciprocal(P(f5, {1, 0, 2}), f5.one()), DomainError);
  EXPECT_THROW(a_reciprocal(P(f5, {0, 1, 1}), f5.one()), DomainError);
  EXPECT_THROW(a_reciprocal(P(f5, {1, 1}), f5.zero()), DomainError);
  EXPECT_THROW(a_reciprocal(P(make_field(7, 1), {1, 1}), f5.one()), FieldMismatch);
}

TEST(Recip, SelfReciprocalExamples) {
  const Field f5 = make_field(5, 1);
  const FieldElement a = f5.element(4);
  EXPECT_TRUE(is_a_self_reciprocal(sample_srm(f5), a));
  EXPECT_FALSE(is_a_self_reciprocal(P(f5, {3, 1, 1}), a));
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& b : f.nonzero_elements()) {
      EXPECT_TRUE(is_a_self_reciprocal(detail::x2_minus_a(b), b));
      EXPECT_EQ(classify(detail::x2_minus_a(b), b).verdict, SrmVerdict::Trivial);
    }
  }
}

TEST(Recip, ClassifyExamples) {
  const Field f5 = make_field(5, 1);
  const FieldElement a = f5.element(4);
  const Polynomial d = P(f5, {-4, 0, 1});
  EXPECT_EQ(classify(d, a).verdict, SrmVerdict::Trivial);
  EXPECT_EQ(classify(d * d, a).verdict, SrmVerdict::Nontrivial);
  EXPECT_EQ(classify(d * d, a).half_degree, 2);
  EXPECT_EQ(classify(P(f5, {3, 1}), a).verdict, SrmVerdict::OddSrmMinus);
  EXPECT_EQ(classify(P(f5, {2, 1}), a).verdict, SrmVerdict::OddSrmPlus);
  EXPECT_EQ(classify(sample_srm(f5), a).verdict, SrmVerdict::Nontrivial);
  EXPECT_EQ(classify(P(f5, {3, 1, 1}), a).verdict, SrmVerdict::NotSelfReciprocal);
}

TEST(Recip, OddDegreeNeedsSquareParameter) {
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      if (is_square(a)) continue;
      for (int n : {1, 3}) {
        for_each_monic(f, n, true, [&](const Polynomial& g) {
          EXPECT_EQ(classify(g, a).verdict, SrmVerdict::NotSelfReciprocal) << to_pretty(g);
        });
      }
    }
  }
}

TEST(Recip, StripExamples) {
  const Field f5 = make_field(5, 1);
  const FieldElement a = f5.element(4);
  const Polynomial d = P(f5, {-4, 0, 1});
  auto s = strip_x2_minus_a(d, a);
  EXPECT_EQ(s.k, 1);
  EXPECT_EQ(s.g, P(f5, {1}));
  s = strip_x2_minus_a(d * d, a);
  EXPECT_EQ(s.k, 2);
  EXPECT_EQ(s.g, P(f5, {1}));
  s = strip_x2_minus_a(sample_srm(f5), a);
  EXPECT_EQ(s.k, 0);
  EXPECT_EQ(s.g, sample_srm(f5));

  s = strip_linear_sqrt(sample_srm(f5), a, 1);
  EXPECT_EQ(s.k, 2);
  EXPECT_FALSE(s.g.eval(f5.element(2)).is_zero());
  EXPECT_EQ(s.g, P(f5, {1, 0, 4, 0, 1}));

  const Polynomial g2 = P(f5, {4, 0, 2, 3, 3, 0, 1});
  s = strip_linear_sqrt(g2, a, -1);
  EXPECT_EQ(s.k, 2);
  EXPECT_FALSE(s.g.eval(f5.element(3)).is_zero());
  EXPECT_EQ(s.g, P(f5, {1, 4, 0, 1, 1}));

  s = strip_linear_sqrt(P(f5, {1, 1, 1}), f5.one(), 1);
  EXPECT_EQ(s.k, 0);
  EXPECT_EQ(s.g, P(f5, {1, 1, 1}));

  EXPECT_THROW(strip_linear_sqrt(sample_srm(f5), a, 0), DomainError);
  EXPECT_THROW(strip_linear_sqrt(P(f5, {2, 0, 1}), f5.element(2), 1), DomainError);
}

TEST(Recip, DicksonExamples) {
  const Field f5 = make_field(5, 1);
  for (const auto& a : f5.nonzero_elements()) {
    EXPECT_EQ(dickson(0, a), P(f5, {2}));
    EXPECT_EQ(dickson(1, a), P(f5, {0, 1}));
    EXPECT_EQ(dickson(2, a), Polynomial::monomial(f5.one(), 2) - Polynomial::constant(a * f5.from_integer(2)));
  }
  EXPECT_EQ(dickson(3, f5.one()), P(f5, {0, 2, 0, 1}));
  EXPECT_THROW(dickson(-1, f5.one()), DomainError);
}

TEST(Recip, DicksonFunctionalIdentity) {
  // x^k D_k(x + a/x) = x^(2k) + a^k, expanded term by term
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    const Polynomial xx = Polynomial::x(f);
    for (const auto& a : f.nonzero_elements()) {
      const Polynomial x2a = xx * xx + Polynomial::constant(a);
      for (int k = 0; k <= 12; ++k) {
        const Polynomial d = dickson(k, a);
        Polynomial lhs(f);
        for (int i = 0; i <= d.degree(); ++i) {
          lhs += (pow(x2a, static_cast<std::uint64_t>(i)) * d.coeff(static_cast<std::size_t>(i)))
                     .shift(static_cast<std::size_t>(k - i));
        }
        EXPECT_EQ(lhs, Polynomial::monomial(f.one(), 2 * static_cast<std::size_t>(k)) + Polynomial::constant(a.pow(k)))
            << "q=" << q << " k=" << k;
      }
    }
  }
}

TEST(Recip, DicksonPointwise) {
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      for (int k = 0; k <= 8; ++k) {
        const Polynomial d = dickson(k, a);
        for (const auto& y : f.nonzero_elements()) EXPECT_EQ(d.eval(y + a / y), y.pow(k) + (a / y).pow(k));
      }
    }
  }
}

TEST(Recip, TransformExamples) {
  const Field f5 = make_field(5, 1);
  EXPECT_EQ(quadratic_transform(P(f5, {1, 1}), f5.element(2)), P(f5, {2, 1, 1}));
  EXPECT_EQ(quadratic_transform(P(f5, {1, 1, 1}), f5.one()), P(f5, {1, 1, 3, 1, 1}));
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      EXPECT_EQ(quadratic_transform(Polynomial::x(f), a), Polynomial::monomial(f.one(), 2) + Polynomial::constant(a));
      EXPECT_EQ(g_from_srm(Polynomial::monomial(f.one(), 2) + Polynomial::constant(a), a), Polynomial::x(f));
    }
  }
  EXPECT_THROW(quadratic_transform(P(f5, {1, 2}), f5.one()), DomainError);
}

TEST(Recip, InverseTransformExample) {
  const Field f5 = make_field(5, 1);
  const FieldElement a = f5.element(4);
  const Polynomial g = g_from_srm(sample_srm(f5), a);
  EXPECT_EQ(g, P(f5, {1, 1, 1, 1}));
  // x^3 g(y + 4/y) = f(y) at every nonzero point
  for (const auto& y : f5.nonzero_elements()) EXPECT_EQ(y.pow(3) * g.eval(y + a / y), sample_srm(f5).eval(y));
  EXPECT_THROW(g_from_srm(P(f5, {-4, 0, 1}), a), DomainError);
}

TEST(Recip, TransformRoundTrip) {
  std::mt19937_64 rng(31);
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      for (int it = 0; it < 40; ++it) {
        const Polynomial h = random_monic(f, static_cast<int>(rng() % 7), rng, false);
        const Polynomial t = quadratic_transform(h, a);
        EXPECT_EQ(t.degree(), 2 * h.degree());
        if (h.degree() >= 1) {
          EXPECT_EQ(classify(t, a).verdict, SrmVerdict::Nontrivial);
          EXPECT_EQ(g_from_srm(t, a), h);
        }
      }
      for (int n = 1; n <= 3; ++n) {
        for_each_srm(f, a, n, SrmKind::Nontrivial, [&](const Polynomial& s) {
          EXPECT_EQ(quadratic_transform(g_from_srm(s, a), a), s);
        });
      }
    }
  }
}

TEST(Recip, SqrtPairExamples) {
  const Field f5 = make_field(5, 1);
  EXPECT_TRUE(eval_at_sqrt_pair(sample_srm(f5), f5.element(4)).value.is_zero());
  const auto v = eval_at_sqrt_pair(P(f5, {1, 0, 1}), f5.element(2));
  EXPECT_EQ(v.A, f5.element(3));
  EXPECT_EQ(v.B, f5.zero());
  EXPECT_EQ(v.value, f5.element(4));
  for (const auto& a : f5.nonzero_elements()) {
    const auto z = eval_at_sqrt_pair(detail::x2_minus_a(a), a);
    EXPECT_TRUE(z.value.is_zero());
    EXPECT_TRUE(z.A.is_zero());
    EXPECT_TRUE(z.B.is_zero());
  }
}

TEST(Recip, SqrtPairAgreesWithQuadraticRing) {
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      for (int deg = 0; deg <= 6; ++deg) {
        for_each_monic(f, deg, false, [&](const Polynomial& g) {
          const auto [u, v] = oracle::eval_pair_in_quadratic_ring(g, a);
          ASSERT_TRUE(v.is_zero());
          ASSERT_EQ(eval_at_sqrt_pair(g, a).value, u) << to_pretty(g);
        });
      }
    }
  }
}

TEST(Recip, SqrtPairAgreesWithDirectEvaluation) {
  // square a: evaluate at both roots inside F_q
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      const auto r = sqrt(a);
      if (!r) continue;
      for (int deg = 0; deg <= 4; ++deg) {
        for_each_monic(f, deg, false, [&](const Polynomial& g) {
          ASSERT_EQ(eval_at_sqrt_pair(g, a).value, g.eval(*r) * g.eval(-*r));
        });
      }
    }
  }
}

TEST(Recip, SqrtPairInExtensionField) {
  // non-square a in F_5 becomes a square in F_25
  const Field f5 = make_field(5, 1);
  const Field f25 = make_field(5, 2);
  std::mt19937_64 rng(32);
  for (std::int64_t av : {2, 3}) {
    const FieldElement a = f5.from_integer(av);
    const auto r = sqrt(f25.from_integer(av));
    ASSERT_TRUE(r.has_value());
    for (int it = 0; it < 200; ++it) {
      const Polynomial g = random_monic(f5, static_cast<int>(rng() % 7), rng, false);
      std::vector<Code> lifted;
      for (std::size_t i = 0; i < g.codes().size(); ++i) lifted.push_back(f25.from_int(static_cast<std::int64_t>(g.code(i))));
      const Polynomial G(f25, lifted);
      const FieldElement want = G.eval(*r) * G.eval(-*r);
      EXPECT_EQ(f25.from_integer(static_cast<std::int64_t>(eval_at_sqrt_pair(g, a).value.code())), want);
    }
  }
}

TEST(Recip, ParityExamples) {
  const Field f5 = make_field(5, 1);
  auto pv = parity_indicator(P(f5, {1, 1, 1}), f5.one());
  EXPECT_EQ(pv.verdict, Parity::Odd);
  EXPECT_EQ(pv.indicator, f5.element(2));
  EXPECT_EQ(oracle::trial_count(P(f5, {1, 1, 1}), true), 1);

  pv = parity_indicator(sample_srm(f5), f5.element(4));
  EXPECT_EQ(pv.verdict, Parity::NotApplicable);
}

TEST(Recip, ParityOfRepeatedLinearSquare) {
  // x^2+3x+1 = (x+4)^2 over F_5: A = 2, B = 3, A^2 - B^2 = 0, so the criterion does not apply
  const Field f5 = make_field(5, 1);
  const Polynomial g = P(f5, {1, 3, 1});
  EXPECT_EQ(g, P(f5, {4, 1}) * P(f5, {4, 1}));
  const auto sp = eval_at_sqrt_pair(g, f5.one());
  EXPECT_EQ(sp.A, f5.element(2));
  EXPECT_EQ(sp.B, f5.element(3));
  EXPECT_TRUE(sp.value.is_zero());
  EXPECT_EQ(parity_indicator(g, f5.one()).verdict, Parity::NotApplicable);
}

TEST(Recip, ParityMatchesTrialFactorCount) {
  for (auto q : {3U, 5U, 7U}) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      for (int n = 1; n <= 2; ++n) {
        for_each_srm(f, a, n, SrmKind::Nontrivial, [&](const Polynomial& s) {
          const auto pv = parity_indicator(s, a);
          if (pv.verdict == Parity::NotApplicable) return;
          const int r = oracle::trial_count(s, true);
          EXPECT_EQ(pv.verdict == Parity::Even, r % 2 == 0) << to_pretty(s);
        });
      }
    }
  }
}

TEST(Recip, DiscriminantIdentityExamples) {
  std::mt19937_64 rng(33);
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      EXPECT_TRUE(discriminant_identity_check(Polynomial::monomial(f.one(), 2) + Polynomial::constant(a), a));
      const Polynomial d = detail::x2_minus_a(a);
      const auto [lhs, rhs] = discriminant_identity_sides(d * d, a);
      EXPECT_TRUE(lhs.is_zero());
      EXPECT_TRUE(rhs.is_zero());
      int found = 0;
      while (found < 3) {
        const Polynomial c = random_monic(f, 3, rng);
        if (!is_irreducible(c)) continue;
        EXPECT_TRUE(discriminant_identity_check(quadratic_transform(c, a), a));
        ++found;
      }
    }
  }
}

TEST(Recip, InvolutionAndHomomorphism) {
  for (auto q : {3U, 5U}) {
    const Field f = parse_field_spec(std::to_string(q));
    std::vector<Polynomial> small;
    for (int d = 1; d <= 2; ++d) for_each_monic(f, d, true, [&](const Polynomial& g) { small.push_back(g); });
    for (const auto& a : f.nonzero_elements()) {
      for (const auto& g : small) {
        EXPECT_EQ(a_reciprocal(a_reciprocal(g, a), a), g);
        for (const auto& h : small) EXPECT_EQ(a_reciprocal(g * h, a), a_reciprocal(g, a) * a_reciprocal(h, a));
      }
    }
  }
}

TEST(Recip, RootCorrespondence) {
  std::mt19937_64 rng(34);
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    const auto units = f.nonzero_elements();
    for (const auto& a : units) {
      for (int it = 0; it < 20; ++it) {
        Polynomial split = Polynomial::constant(f.one());
        Polynomial want = Polynomial::constant(f.one());
        const int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
          const FieldElement r = units[rng() % units.size()];
          split *= Polynomial::x(f) - Polynomial::constant(r);
          want *= Polynomial::x(f) - Polynomial::constant(a / r);
        }
        EXPECT_EQ(a_reciprocal(split, a), want);
      }
    }
  }
}

TEST(Recip, ProductTable) {
  // trivial*trivial = nontrivial, trivial*nontrivial = trivial, nontrivial*nontrivial = nontrivial
  for (auto q : {3U, 5U}) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      std::vector<Polynomial> triv;
      std::vector<Polynomial> nontriv;
      for (int n = 1; n <= 2; ++n) {
        for_each_srm(f, a, n, SrmKind::Trivial, [&](const Polynomial& s) { triv.push_back(s); });
        for_each_srm(f, a, n, SrmKind::Nontrivial, [&](const Polynomial& s) { nontriv.push_back(s); });
      }
      for (const auto& s : triv) {
        for (const auto& t : triv) EXPECT_EQ(classify(s * t, a).verdict, SrmVerdict::Nontrivial);
        for (const auto& t : nontriv) EXPECT_EQ(classify(s * t, a).verdict, SrmVerdict::Trivial);
      }
      for (const auto& s : nontriv) {
        for (const auto& t : nontriv) EXPECT_EQ(classify(s * t, a).verdict, SrmVerdict::Nontrivial);
      }
    }
  }
}

TEST(Recip, TransformHypothesisIsOnTheTransformedPolynomial) {
  // f = x + 3 over F_5 with a = 1: f(1) f(-1) = 4 * 2 = 3 is nonzero, yet
  // x f(x + 1/x) = x^2 + 3x + 1 = (x + 4)^2 is neither irreducible nor a
  // product of two distinct reciprocal factors.  The condition that rules
  // this out is A^2 - a B^2 != 0 for the transformed polynomial.
  const Field f5 = make_field(5, 1);
  const FieldElement a = f5.one();
  const Polynomial g = P(f5, {3, 1});
  EXPECT_FALSE((g.eval(a) * g.eval(-a)).is_zero());
  const Polynomial t = quadratic_transform(g, a);
  EXPECT_EQ(t, P(f5, {4, 1}) * P(f5, {4, 1}));
  EXPECT_TRUE(eval_at_sqrt_pair(t, a).value.is_zero());
}

TEST(Recip, TransformOfIrreducible) {
  for (auto q : kOrders) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      for (int n = 1; n <= 3; ++n) {
        for_each_monic(f, n, false, [&](const Polynomial& g) {
          if (oracle::trial_count(g, true) != 1) return;
          const Polynomial t = quadratic_transform(g, a);
          if (eval_at_sqrt_pair(t, a).value.is_zero()) return;
          const auto parts = oracle::trial_factor(t);
          if (parts.size() == 1) {
            EXPECT_EQ(parts[0].second, 1);
            EXPECT_TRUE(is_a_self_reciprocal(t, a));
          } else {
            ASSERT_EQ(parts.size(), 2U) << to_pretty(t);
            EXPECT_EQ(parts[0].first.degree(), n);
            EXPECT_EQ(parts[1].first.degree(), n);
            EXPECT_EQ(a_reciprocal(parts[0].first, a), parts[1].first);
            EXPECT_FALSE(is_a_self_reciprocal(parts[0].first, a));
          }
        });
      }
    }
  }
}

TEST(Recip, StatementChecksPass) {
  for (auto q : {3U, 5U}) {
    const Field f = parse_field_spec(std::to_string(q));
    for (const auto& a : f.nonzero_elements()) {
      for (const std::string id : {"1", "2", "3", "4", "8", "9", "10"}) {
        const auto rep = check_theorem(id, f, a, 2);
        EXPECT_TRUE(rep.passed) << "theorem " << id << " q=" << q << " a=" << to_string(a)
                                << (rep.failures.empty() ? "" : ": " + rep.failures.front());
        EXPECT_TRUE(rep.checks > 0 || !rep.note.empty());
      }
    }
  }
}
