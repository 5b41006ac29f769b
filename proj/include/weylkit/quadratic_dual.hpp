#pragma once

// Quadratic presentations and their Koszul duals. A relation is a sparse
// tensor sum c_{uv} u(x)v over ordered pairs of generators; the dual relation
// space is the orthogonal complement of the relations under the pairing
//
//   <u(x)v, a*(x)b*> = [u = b][v = a],
//
// i.e. the canonical evaluation of (V(x)V)* = V*(x)V* read outside-in. With
// d_i X_i - X_i d_i - Z Z as the Weyl relation this pairing produces the dual
// relation sum_i x_i d_i + z z.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/error.hpp"
#include "weylkit/generator.hpp"
#include "weylkit/matrix.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

/// Positions (u, v) of the factors in the generator list.
using GeneratorPair = std::pair<std::size_t, std::size_t>;
using QuadraticRelation = std::map<GeneratorPair, Rational>;

struct QuadraticPresentation {
  AlgebraKind kind = AlgebraKind::B;
  std::size_t n = 0;
  std::vector<Generator> generators;
  std::vector<QuadraticRelation> relations;
};

struct DualRelationBasis {
  std::vector<Generator> generators;
  std::vector<QuadraticRelation> basis;
};

namespace detail {

inline void add_coeff(QuadraticRelation& r, std::size_t u, std::size_t v, const Rational& c) {
  auto& slot = r[{u, v}];
  slot += c;
  if (is_zero(slot)) r.erase({u, v});
}

inline QuadraticRelation commutator_relation(std::size_t u, std::size_t v) {
  QuadraticRelation r;
  add_coeff(r, u, v, 1);
  add_coeff(r, v, u, -1);
  return r;
}

inline QuadraticRelation anticommutator_relation(std::size_t u, std::size_t v) {
  QuadraticRelation r;
  add_coeff(r, u, v, 1);
  add_coeff(r, v, u, 1);
  return r;
}

inline QuadraticRelation square_relation(std::size_t u) {
  QuadraticRelation r;
  add_coeff(r, u, u, 1);
  return r;
}

}  // namespace detail

/// Row-per-relation coordinates in the m^2-dimensional tensor square, column
/// u*m + v for u(x)v.
inline Matrix<Rational> relation_matrix(const std::vector<QuadraticRelation>& relations,
                                        std::size_t generator_count) {
  const std::size_t m = generator_count;
  Matrix<Rational> out(relations.size(), m * m);
  for (std::size_t i = 0; i < relations.size(); ++i)
    for (const auto& [pair, c] : relations[i]) out(i, pair.first * m + pair.second) = c;
  return out;
}

/// Throws unless the relations are nonzero and linearly independent.
inline void validate(const QuadraticPresentation& p) {
  for (const auto& r : p.relations) {
    if (r.empty()) throw RankDeficientInput("zero relation in presentation");
    for (const auto& [pair, c] : r)
      if (pair.first >= p.generators.size() || pair.second >= p.generators.size())
        throw IndexOutOfRange("relation refers to an unknown generator");
  }
  if (rank(relation_matrix(p.relations, p.generators.size())) != p.relations.size())
    throw RankDeficientInput("relations are linearly dependent");
}

/// Defining relations of B_n (Weyl relations homogenized by Z) or of the
/// commutative C_n, as quadratic tensors.
inline QuadraticPresentation relations_of(AlgebraKind kind, std::size_t n) {
  if (kind != AlgebraKind::B && kind != AlgebraKind::C)
    throw KindMismatch("relations_of supports B and C");
  if (n < 1) throw UnsupportedN("n must be positive");
  QuadraticPresentation p{kind, n, generators_of(kind, n), {}};
  const auto x = [](std::size_t i) { return i - 1; };
  const auto d = [n](std::size_t i) { return n + i - 1; };
  const std::size_t z = 2 * n;
  using detail::add_coeff;
  using detail::commutator_relation;

  if (kind == AlgebraKind::C) {
    for (std::size_t u = 0; u < p.generators.size(); ++u)
      for (std::size_t v = u + 1; v < p.generators.size(); ++v)
        p.relations.push_back(commutator_relation(u, v));
    return p;
  }

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) p.relations.push_back(commutator_relation(x(i), x(j)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) p.relations.push_back(commutator_relation(d(i), d(j)));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      // d_j X_i - X_i d_j (- Z Z when i = j)
      QuadraticRelation r;
      add_coeff(r, d(j), x(i), 1);
      add_coeff(r, x(i), d(j), -1);
      if (i == j) add_coeff(r, z, z, -1);
      p.relations.push_back(std::move(r));
    }
  }
  for (std::size_t i = 1; i <= n; ++i) p.relations.push_back(commutator_relation(x(i), z));
  for (std::size_t i = 1; i <= n; ++i) p.relations.push_back(commutator_relation(d(i), z));
  return p;
}

/// sum over (u, v) of r[u(x)v] * s[v(x)u].
inline Rational pairing(const QuadraticRelation& r, const QuadraticRelation& s) {
  Rational out = 0;
  for (const auto& [pair, c] : r) {
    auto it = s.find({pair.second, pair.first});
    if (it != s.end()) out += c * it->second;
  }
  return out;
}

/// Basis of the space of dual tensors pairing to zero with every relation.
inline DualRelationBasis orthogonal_complement(const QuadraticPresentation& p) {
  validate(p);
  const std::size_t m = p.generators.size();
  // Row i, column v*m + u holds r_i[u(x)v], so M s = 0 is exactly pairing(r_i, s) = 0.
  Matrix<Rational> constraints(p.relations.size(), m * m);
  for (std::size_t i = 0; i < p.relations.size(); ++i)
    for (const auto& [pair, c] : p.relations[i]) constraints(i, pair.second * m + pair.first) = c;
  DualRelationBasis out{p.generators, {}};
  for (const auto& v : kernel_basis(constraints)) {
    QuadraticRelation s;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!is_zero(v[k])) s[{k / m, k % m}] = v[k];
    out.basis.push_back(std::move(s));
  }
  return out;
}

/// The dual presentation in readable form: squares, anticommutators and, for
/// B_n, the single relation x_1 d_1 + .. + x_n d_n + z z.
inline QuadraticPresentation dual_presentation(AlgebraKind kind, std::size_t n) {
  if (kind != AlgebraKind::B && kind != AlgebraKind::C)
    throw KindMismatch("dual_presentation supports B and C");
  if (n < 1) throw UnsupportedN("n must be positive");
  const auto shriek = kind == AlgebraKind::B ? AlgebraKind::BShriek : AlgebraKind::CShriek;
  QuadraticPresentation p{shriek, n, generators_of(shriek, n), {}};
  const auto x = [](std::size_t i) { return i - 1; };
  const auto d = [n](std::size_t i) { return n + i - 1; };
  const std::size_t z = 2 * n;
  using detail::anticommutator_relation;
  using detail::square_relation;

  if (kind == AlgebraKind::C) {
    for (std::size_t u = 0; u < p.generators.size(); ++u) p.relations.push_back(square_relation(u));
    for (std::size_t u = 0; u < p.generators.size(); ++u)
      for (std::size_t v = u + 1; v < p.generators.size(); ++v)
        p.relations.push_back(anticommutator_relation(u, v));
    return p;
  }

  for (std::size_t i = 1; i <= n; ++i) p.relations.push_back(square_relation(x(i)));
  for (std::size_t i = 1; i <= n; ++i) p.relations.push_back(square_relation(d(i)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) p.relations.push_back(anticommutator_relation(x(i), x(j)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) p.relations.push_back(anticommutator_relation(d(i), d(j)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) p.relations.push_back(anticommutator_relation(x(i), d(j)));
  for (std::size_t i = 1; i <= n; ++i) p.relations.push_back(anticommutator_relation(x(i), z));
  for (std::size_t i = 1; i <= n; ++i) p.relations.push_back(anticommutator_relation(d(i), z));
  QuadraticRelation weyl;
  for (std::size_t i = 1; i <= n; ++i) detail::add_coeff(weyl, x(i), d(i), 1);
  detail::add_coeff(weyl, z, z, 1);
  p.relations.push_back(std::move(weyl));
  return p;
}

/// Exact subspace equality of two relation families over the same generators.
inline bool spans_equal(const std::vector<QuadraticRelation>& a,
                        const std::vector<QuadraticRelation>& b, std::size_t generator_count) {
  return same_row_space(relation_matrix(a, generator_count), relation_matrix(b, generator_count));
}

/// The complement seen as a presentation on the dual generators.
inline QuadraticPresentation as_presentation(const DualRelationBasis& dual, AlgebraKind kind,
                                             std::size_t n) {
  return {kind, n, dual.generators, dual.basis};
}

}  // namespace weylkit
