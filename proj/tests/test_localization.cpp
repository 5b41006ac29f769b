#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weylkit/weylkit.hpp"

using namespace weylkit;

namespace {

AlgebraElement b(const std::string& text, std::size_t n = 1) { return normal_form(parse(text, n, AlgebraKind::B), AlgebraKind::B, n); }
AlgebraElement a(const std::string& text, std::size_t n = 1) { return normal_form(parse(text, n, AlgebraKind::A), AlgebraKind::A, n); }

}  // namespace

TEST(Make, StripsCommonZ) {
  const auto e = LocalizedElement::make(b("z^2*x1"), 1);
  EXPECT_EQ(e.numerator(), b("z*x1"));
  EXPECT_EQ(e.z_power(), 0u);
  const auto zero = LocalizedElement::make(b("0"), 5);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.z_power(), 0u);
  const auto kept = LocalizedElement::make(b("x1 + z"), 2);
  EXPECT_EQ(kept.numerator(), b("x1 + z"));
  EXPECT_EQ(kept.z_power(), 2u);
}

TEST(Fractions, Examples) {
  EXPECT_TRUE(loc_equals(LocalizedElement::make(b("z*x1"), 1), LocalizedElement::make(b("x1"), 0)));
  const auto p = loc_multiply(LocalizedElement::make(b("x1"), 1), LocalizedElement::make(b("d1"), 1));
  EXPECT_EQ(p.numerator(), b("x1*d1"));
  EXPECT_EQ(p.z_power(), 2u);
  EXPECT_TRUE(loc_add(LocalizedElement::make(b("x1"), 1), LocalizedElement::make(b("-x1"), 1)).is_zero());
  EXPECT_THROW(loc_add(LocalizedElement::make(b("x1"), 1), LocalizedElement::make(b("x1", 2), 1)), SizeMismatch);
}

TEST(Fractions, DegreeOfHomogeneousFraction) {
  EXPECT_EQ(LocalizedElement::make(b("x1*d1 + z^2"), 3).degree(), -1);
  EXPECT_THROW(LocalizedElement::make(b("x1 + z^2"), 1).degree(), NotDegreeZero);
}

TEST(Dehomogenize, Examples) {
  EXPECT_EQ(dehomogenize(b("x1*d1 + z^2")), a("x1*d1 + 1"));
  EXPECT_EQ(dehomogenize(b("z^4")), a("1"));
  EXPECT_EQ(dehomogenize(b("z^3*x1^2*d1")), a("x1^2*d1"));
}

TEST(Dehomogenize, MatchesOperatorModelAtTEqualsOne) {
  // Setting z = 1 in the operator model of B_n gives the operator model of A_n.
  auto rng = make_rng(23, "dehomogenize-operator");
  for (int i = 0; i < 100; ++i) {
    const auto e = random_element(rng, AlgebraKind::B, 2);
    const auto lhs = oracle::terms_of(e);
    const auto rhs = oracle::terms_of(dehomogenize(e));
    for (const auto& p : oracle::probe_polynomials(2, 4))
      EXPECT_EQ(oracle::act(lhs, p, Rational(1)), oracle::act(rhs, p, Rational(1)));
  }
}

TEST(KernelWitness, Examples) {
  EXPECT_EQ(kernel_witness(b("z - 1")), b("1"));
  EXPECT_EQ(kernel_witness(b("z^2*x1 - x1")), b("(z + 1)*x1"));
  EXPECT_FALSE(kernel_witness(b("x1")).has_value());
  const auto w = *kernel_witness(b("z^2*x1 - x1"));
  EXPECT_EQ(b("z - 1") * w, b("z^2*x1 - x1"));
}

TEST(Homogenize, Examples) {
  const auto [h, k] = homogenize(a("x1*d1 + 1"));
  EXPECT_EQ(h, b("x1*d1 + z^2"));
  EXPECT_EQ(k, 2u);
  const auto [h0, k0] = homogenize(a("0"));
  EXPECT_TRUE(h0.is_zero());
  EXPECT_EQ(k0, 0u);
  const auto [h1, k1] = homogenize(a("x1"));
  EXPECT_EQ(h1, b("x1"));
  EXPECT_EQ(k1, 1u);
}

TEST(Homogenize, IsASectionOfDehomogenize) {
  auto rng = make_rng(29, "homogenize-section");
  for (int i = 0; i < 300; ++i) {
    const auto e = random_element(rng, AlgebraKind::A, 2, 6);
    const auto [h, k] = homogenize(e);
    EXPECT_EQ(dehomogenize(h), e);
    EXPECT_TRUE(is_homogeneous(h));
    EXPECT_EQ(graded_degree(h), k);
  }
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(LocalizedElement::make(b("x1*d1 + z^2"), 2)), a("x1*d1 + 1"));
  EXPECT_EQ(theta(LocalizedElement::make(b("1"), 0)), a("1"));
  EXPECT_THROW(theta(LocalizedElement::make(b("x1"), 0)), NotDegreeZero);
}

TEST(Theta, RoundTripAndMultiplicative) {
  auto rng = make_rng(31, "theta");
  for (std::size_t n = 1; n <= 2; ++n)
    for (int i = 0; i < 200; ++i) {
      const auto x = random_element(rng, AlgebraKind::A, n, 6);
      const auto y = random_element(rng, AlgebraKind::A, n, 3);
      EXPECT_EQ(theta(theta_inverse(x)), x);
      EXPECT_EQ(theta(loc_multiply(theta_inverse(x), theta_inverse(y))), x * y);
    }
}

TEST(Mu, Examples) {
  const auto one = mu(a("1"), 0);
  EXPECT_EQ(one.numerator(), b("1"));
  EXPECT_EQ(one.z_power(), 0u);
  const auto e = mu(a("x1*d1 + 1"), 0);
  EXPECT_EQ(e.numerator(), b("x1*d1 + z^2"));
  EXPECT_EQ(e.z_power(), 2u);
  EXPECT_EQ(mu(a("x1"), 3).degree(), 3);
  EXPECT_EQ(mu(a("x1"), -2).degree(), -2);
}

TEST(Mu, GradedMultiplicative) {
  auto rng = make_rng(37, "mu");
  for (int i = 0; i < 300; ++i) {
    const auto x = random_element(rng, AlgebraKind::A, 2), y = random_element(rng, AlgebraKind::A, 2);
    const auto s = static_cast<std::int64_t>(uniform(rng, 0, 8)) - 4;
    const auto t = static_cast<std::int64_t>(uniform(rng, 0, 8)) - 4;
    EXPECT_EQ(loc_multiply(mu(x, s), mu(y, t)), mu(x * y, s + t));
  }
}
