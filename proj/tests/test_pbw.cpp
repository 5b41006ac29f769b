#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "weylkit/weylkit.hpp"

using namespace weylkit;

namespace {

AlgebraElement nf(const std::string& text, std::size_t n, AlgebraKind kind = AlgebraKind::B) {
  return normal_form(parse(text, n, kind), kind, n);
}

std::vector<std::pair<Rational, Word>> free_terms(const FreeExpression& e) {
  std::vector<std::pair<Rational, Word>> out;
  for (const auto& t : e.terms) out.emplace_back(t.coeff, t.word);
  return out;
}

}  // namespace

TEST(NormalForm, WeylRelationInB) { EXPECT_EQ(nf("d1*x1", 1), nf("x1*d1 + z^2", 1)); }

TEST(NormalForm, SecondOrderIdentity) { EXPECT_EQ(render(nf("d1*x1*x1", 1)), "x1^2*d1 + 2*z^2*x1"); }

TEST(NormalForm, WeylRelationInA) {
  EXPECT_EQ(render(nf("d1*x1", 1, AlgebraKind::A)), "1 + x1*d1");
}

TEST(NormalForm, CommutingGenerators) {
  EXPECT_EQ(nf("x2*x1", 2), nf("x1*x2", 2));
  EXPECT_EQ(nf("d2*x1", 2), nf("x1*d2", 2));
  EXPECT_EQ(render(nf("d1*x1", 1, AlgebraKind::C)), "x1*d1");
}

TEST(NormalForm, AgreesWithOperatorModelOnRandomWords) {
  auto rng = make_rng(3, "operator-model");
  for (AlgebraKind kind : {AlgebraKind::A, AlgebraKind::B}) {
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto gens = generators_of(kind, n);
      for (int i = 0; i < 150; ++i) {
        const auto w = random_word(rng, gens, 6);
        const auto e = normal_form(w, kind, n);
        EXPECT_TRUE(oracle::same_action({{Rational(1), w}}, oracle::terms_of(e), kind, n)) << word_text(w);
      }
    }
  }
}

TEST(NormalForm, RandomizedOrderAgrees) {
  auto rng = make_rng(5, "randomized-order");
  const auto gens = generators_of(AlgebraKind::B, 2);
  for (int i = 0; i < 300; ++i) {
    const FreeExpression e{{FreeTerm{Rational(1), random_word(rng, gens, 7)}}};
    EXPECT_EQ(normal_form(e, AlgebraKind::B, 2), normal_form_randomized(e, AlgebraKind::B, 2, rng));
  }
}

TEST(RewritingSystem, CriticalPairsResolve) {
  for (AlgebraKind kind : {AlgebraKind::A, AlgebraKind::B, AlgebraKind::C})
    for (std::size_t n = 1; n <= 3; ++n)
      EXPECT_FALSE(unresolved_overlap(PBWRewritingSystem(kind, n), generators_of(kind, n)).has_value());
}

TEST(Multiply, LeibnizFormulaForPowers) {
  for (std::uint32_t a = 1; a <= 20; ++a) {
    PBWMonomial lead = PBWMonomial::one(1), tail = PBWMonomial::one(1), xa = PBWMonomial::one(1);
    xa.x[0] = a;
    lead.x[0] = a;
    lead.d[0] = 1;
    tail.x[0] = a - 1;
    tail.z = 2;
    const auto expected = AlgebraElement::monomial(AlgebraKind::B, lead) +
                          AlgebraElement::monomial(AlgebraKind::B, tail, Rational(a));
    EXPECT_EQ(multiply(AlgebraElement::generator(AlgebraKind::B, 1, Generator::d(1)),
                       AlgebraElement::monomial(AlgebraKind::B, xa)),
              expected);
  }
}

TEST(Multiply, UnitAndCentralZ) {
  const auto e = nf("x1^2*d1 + 3*z", 1);
  EXPECT_EQ(e * AlgebraElement::one(AlgebraKind::B, 1), e);
  EXPECT_EQ(render(nf("z", 1) * nf("x1*d1", 1)), "z*x1*d1");
}

TEST(Multiply, MatchesOperatorModel) {
  auto rng = make_rng(8, "multiply-operator");
  for (AlgebraKind kind : {AlgebraKind::A, AlgebraKind::B}) {
    for (int i = 0; i < 100; ++i) {
      const auto a = random_element(rng, kind, 2, 3, 3);
      const auto b = random_element(rng, kind, 2, 3, 3);
      auto concat = free_terms(detail::product(to_free_expression(a), to_free_expression(b)));
      EXPECT_TRUE(oracle::same_action(concat, oracle::terms_of(a * b), kind, 2, 6));
    }
  }
}

TEST(Arithmetic, AddAndScale) {
  EXPECT_TRUE(add(nf("x1", 1), nf("-x1", 1)).is_zero());
  EXPECT_TRUE(scale(0, nf("x1*d1", 1)).is_zero());
  EXPECT_EQ(render(add(nf("x1*d1", 1), nf("z^2", 1))), "x1*d1 + z^2");
}

TEST(Arithmetic, KindMismatchIsRejected) {
  EXPECT_THROW(nf("x1", 1) + nf("x1", 1, AlgebraKind::A), KindMismatch);
  EXPECT_THROW(nf("x1", 1) * nf("x1", 2), KindMismatch);
}

TEST(Commutator, Examples) {
  EXPECT_EQ(render(commutator(nf("d1", 1), nf("x1", 1))), "z^2");
  EXPECT_TRUE(commutator(nf("z", 1), nf("x1", 1)).is_zero());
  const auto a = nf("x1*d1^2 + z*x1", 1);
  EXPECT_TRUE(commutator(a, a).is_zero());
}

TEST(Degrees, PartialAndGraded) {
  EXPECT_EQ(partial_degree(nf("z^5", 1)), 0u);
  EXPECT_EQ(partial_degree(nf("x1^2*d1 + 2*z^2*x1", 1)), 3u);
  EXPECT_EQ(graded_component(nf("x1*d1 + z^2", 1), 2), nf("x1*d1 + z^2", 1));
  EXPECT_TRUE(graded_component(nf("x1*d1 + z", 1), 3).is_zero());
  EXPECT_THROW(partial_degree(AlgebraElement::zero(AlgebraKind::B, 1)), ZeroElement);
  EXPECT_TRUE(is_homogeneous(nf("x1*d1 + z^2", 1)));
  EXPECT_FALSE(is_homogeneous(nf("x1*d1 + z", 1)));
}

TEST(Basis, SmallDegrees) {
  const auto b1 = basis_of_degree(AlgebraKind::B, 1, 1);
  ASSERT_EQ(b1.size(), 3u);
  std::set<std::string> names;
  for (const auto& m : b1) names.insert(monomial_text(m));
  EXPECT_EQ(names, (std::set<std::string>{"z", "x1", "d1"}));
  EXPECT_EQ(basis_of_degree(AlgebraKind::B, 1, 0).size(), 1u);
  EXPECT_EQ(basis_of_degree(AlgebraKind::B, 2, 2).size(), 15u);
}

TEST(Basis, CountsMatchEnumeration) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint32_t d = 0; d <= 8; ++d) {
      EXPECT_EQ(basis_of_degree(AlgebraKind::B, n, d).size(), oracle::count_compositions(2 * n + 1, d));
      EXPECT_EQ(basis_of_degree(AlgebraKind::A, n, d).size(), oracle::count_compositions(2 * n, d));
    }
}

TEST(Basis, MonomialsAreDistinctAndOfCorrectDegree) {
  const auto basis = basis_of_degree(AlgebraKind::B, 2, 4);
  std::set<std::string> seen;
  for (const auto& m : basis) {
    EXPECT_EQ(m.graded_degree(), 4u);
    EXPECT_TRUE(seen.insert(monomial_text(m)).second);
  }
}

TEST(Center, OnlyPowersOfZ) {
  for (std::uint32_t d : {0u, 3u, 4u}) {
    const auto basis = centralizer_in_degree(AlgebraKind::B, 1, d);
    ASSERT_EQ(basis.size(), 1u);
    PBWMonomial zd = PBWMonomial::one(1);
    zd.z = d;
    EXPECT_EQ(basis.front(), AlgebraElement::monomial(AlgebraKind::B, zd));
  }
  const auto b = centralizer_in_degree(AlgebraKind::B, 2, 0);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.front(), AlgebraElement::one(AlgebraKind::B, 2));
}

TEST(ZDivision, Examples) {
  EXPECT_TRUE(z_divides(nf("z^2*x1 + z", 1)));
  EXPECT_EQ(divide_by_z(nf("z^2*x1 + z", 1)), nf("z*x1 + 1", 1));
  EXPECT_FALSE(z_divides(nf("x1 + z", 1)));
  EXPECT_EQ(divide_by_z(nf("z", 1)), AlgebraElement::one(AlgebraKind::B, 1));
  EXPECT_THROW(divide_by_z(nf("x1 + z", 1)), NotDivisible);
}
