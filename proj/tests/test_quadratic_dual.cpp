#include <gtest/gtest.h>

#include "weylkit/weylkit.hpp"

using namespace weylkit;

namespace {

/// Dense pairing oracle: <u(x)v, a*(x)b*> = [u = b][v = a] by explicit double loop.
Rational dense_pairing(const QuadraticRelation& r, const QuadraticRelation& s, std::size_t m) {
  Rational out = 0;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          if (u != b || v != a) continue;
          const auto ri = r.find({u, v});
          const auto si = s.find({a, b});
          if (ri != r.end() && si != s.end()) out += ri->second * si->second;
        }
  return out;
}

QuadraticRelation rel(std::initializer_list<std::pair<GeneratorPair, int>> terms) {
  QuadraticRelation r;
  for (const auto& [p, c] : terms) r[p] = c;
  return r;
}

// Generator positions for n = 1: x1 = 0, d1 = 1, z = 2.
constexpr std::size_t X = 0, D = 1, Z = 2;

}  // namespace

TEST(Relations, B1) {
  const auto p = relations_of(AlgebraKind::B, 1);
  ASSERT_EQ(p.relations.size(), 3u);
  const std::vector<QuadraticRelation> expected{
      rel({{{D, X}, 1}, {{X, D}, -1}, {{Z, Z}, -1}}),
      rel({{{X, Z}, 1}, {{Z, X}, -1}}),
      rel({{{D, Z}, 1}, {{Z, D}, -1}}),
  };
  EXPECT_TRUE(spans_equal(p.relations, expected, 3));
}

TEST(Relations, CountAndIndependence) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto p = relations_of(AlgebraKind::B, n);
    EXPECT_EQ(p.relations.size(), 2 * n * n + n);
    EXPECT_NO_THROW(validate(p));
    EXPECT_EQ(relations_of(AlgebraKind::C, n).relations.size(), (2 * n + 1) * (2 * n) / 2);
  }
}

TEST(Relations, DependentInputRejected) {
  auto p = relations_of(AlgebraKind::B, 1);
  p.relations.push_back(p.relations.front());
  EXPECT_THROW(orthogonal_complement(p), RankDeficientInput);
}

TEST(Pairing, Examples) {
  const auto weyl = rel({{{D, X}, 1}, {{X, D}, -1}, {{Z, Z}, -1}});
  EXPECT_EQ(pairing(weyl, rel({{{X, X}, 1}})), 0);
  EXPECT_EQ(pairing(weyl, rel({{{Z, Z}, 1}})), -1);
  EXPECT_EQ(pairing(weyl, rel({{{X, D}, 1}, {{D, X}, 1}})), 0);
  EXPECT_EQ(pairing(weyl, rel({{{X, D}, 1}, {{Z, Z}, 1}})), 0);
}

TEST(Pairing, AgreesWithDenseOracle) {
  const auto p = relations_of(AlgebraKind::B, 1);
  const auto q = dual_presentation(AlgebraKind::B, 1);
  for (const auto& r : p.relations)
    for (const auto& s : q.relations) EXPECT_EQ(pairing(r, s), dense_pairing(r, s, 3));
  // Asymmetric test tensors, so the transposition in the pairing is exercised.
  const auto r = rel({{{X, D}, 2}, {{D, Z}, 3}});
  const auto s = rel({{{D, X}, 5}, {{Z, D}, 7}, {{X, D}, 11}});
  EXPECT_EQ(pairing(r, s), dense_pairing(r, s, 3));
  EXPECT_EQ(pairing(r, s), 2 * 5 + 3 * 7);
}

TEST(Complement, DimensionAndOrthogonality) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto p = relations_of(AlgebraKind::B, n);
    const auto dual = orthogonal_complement(p);
    const std::size_t m = 2 * n + 1;
    EXPECT_EQ(dual.basis.size(), 2 * n * n + 3 * n + 1);
    EXPECT_EQ(dual.basis.size(), m * m - p.relations.size());
    for (const auto& r : p.relations)
      for (const auto& s : dual.basis) EXPECT_EQ(pairing(r, s), 0);
    EXPECT_EQ(rank(relation_matrix(dual.basis, m)), dual.basis.size());
  }
}

TEST(Complement, ContainsSquaresAndAnticommutators) {
  const auto dual = orthogonal_complement(relations_of(AlgebraKind::B, 1));
  auto contains = [&](const QuadraticRelation& r) {
    auto extended = dual.basis;
    extended.push_back(r);
    return rank(relation_matrix(extended, 3)) == dual.basis.size();
  };
  EXPECT_TRUE(contains(rel({{{X, X}, 1}})));
  EXPECT_TRUE(contains(rel({{{X, D}, 1}, {{D, X}, 1}})));
  EXPECT_TRUE(contains(rel({{{X, D}, 1}, {{Z, Z}, 1}})));
  EXPECT_FALSE(contains(rel({{{Z, Z}, 1}})));
  EXPECT_FALSE(contains(rel({{{D, X}, 1}, {{Z, Z}, 1}})));
}

TEST(DualPresentation, B1) {
  const auto q = dual_presentation(AlgebraKind::B, 1);
  ASSERT_EQ(q.relations.size(), 6u);
  std::vector<std::string> text;
  for (const auto& r : q.relations) text.push_back(render_relation(r, q.generators));
  EXPECT_EQ(text, (std::vector<std::string>{"x1*x1", "d1*d1", "x1*d1 + d1*x1", "x1*z + z*x1", "d1*z + z*d1",
                                            "x1*d1 + z*z"}));
}

TEST(DualPresentation, SpansComplementForB) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto q = dual_presentation(AlgebraKind::B, n);
    EXPECT_EQ(q.relations.size(), 2 * n * n + 3 * n + 1);
    EXPECT_TRUE(spans_equal(q.relations, orthogonal_complement(relations_of(AlgebraKind::B, n)).basis, 2 * n + 1));
  }
}

TEST(DualPresentation, ExteriorForC) {
  const auto q = dual_presentation(AlgebraKind::C, 1);
  std::vector<std::string> text;
  for (const auto& r : q.relations) text.push_back(render_relation(r, q.generators));
  EXPECT_EQ(text, (std::vector<std::string>{"x1*x1", "d1*d1", "z*z", "x1*d1 + d1*x1", "x1*z + z*x1", "d1*z + z*d1"}));
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_TRUE(spans_equal(dual_presentation(AlgebraKind::C, n).relations,
                            orthogonal_complement(relations_of(AlgebraKind::C, n)).basis, 2 * n + 1));
}

TEST(Complement, IsAnInvolution) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto p = relations_of(AlgebraKind::B, n);
    const auto back = orthogonal_complement(as_presentation(orthogonal_complement(p), AlgebraKind::BShriek, n));
    EXPECT_TRUE(spans_equal(back.basis, p.relations, 2 * n + 1));
  }
}

TEST(Json, PresentationFormat) {
  const auto j = to_json(dual_presentation(AlgebraKind::B, 1));
  EXPECT_EQ(j["algebra"], "B!");
  EXPECT_EQ(j["relations"].size(), 6u);
  EXPECT_EQ(j["relations"][5].dump(),
            R"({"terms":[{"coeff":"1/1","word":["x1","d1"]},{"coeff":"1/1","word":["z","z"]}]})");
}
