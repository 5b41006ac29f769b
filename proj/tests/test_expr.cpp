#include <gtest/gtest.h>

#include "weylkit/weylkit.hpp"

using namespace weylkit;

namespace {

FreeExpression expr(std::initializer_list<std::pair<Rational, Word>> terms) {
  FreeExpression out;
  for (const auto& [c, w] : terms) out.terms.push_back({c, w});
  return out;
}

const Generator X1 = Generator::x(1), X2 = Generator::x(2), D1 = Generator::d(1), Z = Generator::z();

}  // namespace

TEST(Parse, WeylRelationTranscribesWordByWord) {
  const auto e = parse("d1*x1 - x1*d1 - z^2", 1, AlgebraKind::B);
  EXPECT_EQ(e.to_combination(), expr({{1, {D1, X1}}, {-1, {X1, D1}}, {-1, {Z, Z}}}).to_combination());
}

TEST(Parse, RepeatedFactorStaysAWord) {
  EXPECT_EQ(parse("x1*x1", 1, AlgebraKind::B).to_combination(), expr({{1, {X1, X1}}}).to_combination());
}

TEST(Parse, RationalCoefficient) {
  EXPECT_EQ(parse("3/2 * z * x2", 2, AlgebraKind::B).to_combination(),
            expr({{make_rational(3, 2), {Z, X2}}}).to_combination());
}

TEST(Parse, ParenthesesAndPowersExpand) {
  const auto e = parse("(x1 + d1)^2", 1, AlgebraKind::B);
  EXPECT_EQ(e.to_combination(),
            expr({{1, {X1, X1}}, {1, {X1, D1}}, {1, {D1, X1}}, {1, {D1, D1}}}).to_combination());
}

TEST(Parse, CaseInsensitiveNames) {
  EXPECT_EQ(parse("X1*D1*Z", 1, AlgebraKind::B).to_combination(), parse("x1*d1*z", 1, AlgebraKind::B).to_combination());
}

TEST(Parse, UnaryMinusAndZeroPower) {
  EXPECT_EQ(parse("-x1^0", 1, AlgebraKind::A).to_combination(), expr({{-1, {}}}).to_combination());
}

TEST(Parse, CancellingTermsGiveEmptyCombination) {
  EXPECT_TRUE(parse("x1 - x1", 1, AlgebraKind::B).to_combination().empty());
}

TEST(ParseErrors, IndexOutOfRange) {
  EXPECT_THROW(parse("x2", 1, AlgebraKind::B), IndexOutOfRange);
  EXPECT_THROW(parse("d0", 1, AlgebraKind::B), IndexOutOfRange);
}

TEST(ParseErrors, ZIsIllegalInWeylAlgebra) {
  EXPECT_THROW(parse("z*x1", 1, AlgebraKind::A), IllegalGenerator);
  EXPECT_NO_THROW(parse("z*x1", 1, AlgebraKind::C));
}

TEST(ParseErrors, SyntaxErrorsReportPosition) {
  try {
    parse("x1 + * d1", 1, AlgebraKind::B);
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 5u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse("", 1, AlgebraKind::B), SyntaxError);
  EXPECT_THROW(parse("x1)", 1, AlgebraKind::B), SyntaxError);
  EXPECT_THROW(parse("(x1", 1, AlgebraKind::B), SyntaxError);
  EXPECT_THROW(parse("1/0", 1, AlgebraKind::B), SyntaxError);
  EXPECT_THROW(parse("y1", 1, AlgebraKind::B), SyntaxError);
  EXPECT_THROW(parse("x1^", 1, AlgebraKind::B), SyntaxError);
}

TEST(Render, CanonicalTextOrder) {
  const auto e = normal_form(parse("z^2 + x1*d1", 1, AlgebraKind::B), AlgebraKind::B, 1);
  EXPECT_EQ(render(e), "x1*d1 + z^2");
}

TEST(Render, ZeroElement) { EXPECT_EQ(render(AlgebraElement::zero(AlgebraKind::B, 1)), "0"); }

TEST(Render, NegativeAndFractionalCoefficients) {
  const auto e = normal_form(parse("-1/2*x1 + 3 - d1", 1, AlgebraKind::A), AlgebraKind::A, 1);
  EXPECT_EQ(render(e), "3 - 1/2*x1 - d1");
}

TEST(Render, JsonFormat) {
  const auto e = normal_form(parse("x1*d1 + z^2", 1, AlgebraKind::B), AlgebraKind::B, 1);
  EXPECT_EQ(render(e, Format::Json),
            R"({"algebra":"B","n":1,"terms":[{"coeff":"1/1","z":0,"x":[1],"d":[1]},)"
            R"({"coeff":"1/1","z":2,"x":[0],"d":[0]}]})");
}

TEST(Render, ShriekJsonUsesMasks) {
  const auto e = reduce_shriek(parse("z*x1", 1, AlgebraKind::BShriek), 1);
  EXPECT_EQ(render(e), "-x1*z");
  EXPECT_EQ(render(e, Format::Json),
            R"({"algebra":"B!","n":1,"terms":[{"coeff":"-1/1","z":1,"x":[1],"d":[0]}]})");
}

TEST(Render, LocalizedJson) {
  const auto e = LocalizedElement::make(normal_form(parse("x1", 1, AlgebraKind::B), AlgebraKind::B, 1), 1);
  EXPECT_EQ(render(e), "(x1)/z");
  EXPECT_EQ(render(e, Format::Json),
            R"({"num":{"algebra":"B","n":1,"terms":[{"coeff":"1/1","z":0,"x":[1],"d":[0]}]},"zpow":1})");
}

TEST(RoundTrip, RandomElementsSurviveRenderAndParse) {
  auto rng = make_rng(11, "expr-roundtrip");
  for (AlgebraKind kind : {AlgebraKind::A, AlgebraKind::B, AlgebraKind::C})
    for (std::size_t n = 1; n <= 3; ++n)
      for (int i = 0; i < 200; ++i) {
        const auto e = random_element(rng, kind, n);
        EXPECT_EQ(normal_form(parse(render(e), n, kind), kind, n), e) << render(e);
      }
}
