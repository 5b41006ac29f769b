#pragma once

// Seeded random samplers for property checks. Every stream is derived from
// (seed, label) so that a check's samples do not depend on which other checks
// ran before it.

#include <cstdint>
#include <random>
#include <string_view>

#include "weylkit/generator.hpp"
#include "weylkit/pbw.hpp"
#include "weylkit/rational.hpp"
#include "weylkit/shriek.hpp"

namespace weylkit {

using Rng = std::mt19937_64;

/// FNV-1a, stable across platforms unlike std::hash.
inline std::uint64_t stable_hash(std::string_view text, std::uint64_t basis = 0xcbf29ce484222325ull) {
  std::uint64_t h = basis;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline Rng make_rng(std::uint64_t seed, std::string_view label) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stable_hash(label)),
                    static_cast<std::uint32_t>(stable_hash(label) >> 32)};
  return Rng(seq);
}

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

/// Nonzero p/q with |p| <= 5, 1 <= q <= 3.
inline Rational random_rational(Rng& rng) {
  std::int64_t p = 0;
  while (p == 0) p = static_cast<std::int64_t>(uniform(rng, 0, 10)) - 5;
  return make_rational(p, static_cast<std::int64_t>(uniform(rng, 1, 3)));
}

/// Monomial with X,d exponent sum at most max_partial and Z exponent at most
/// max_z (0 for A_n).
inline PBWMonomial random_monomial(Rng& rng, AlgebraKind kind, std::size_t n, std::uint32_t max_partial,
                                   std::uint32_t max_z) {
  PBWMonomial m = PBWMonomial::one(n);
  const auto total = static_cast<std::uint32_t>(uniform(rng, 0, max_partial));
  for (std::uint32_t k = 0; k < total; ++k) {
    const auto slot = uniform(rng, 0, 2 * n - 1);
    if (slot < n) ++m.x[slot];
    else ++m.d[slot - n];
  }
  if (kind != AlgebraKind::A) m.z = static_cast<std::uint32_t>(uniform(rng, 0, max_z));
  return m;
}

/// Nonzero element with 1..max_terms terms.
inline AlgebraElement random_element(Rng& rng, AlgebraKind kind, std::size_t n, std::uint32_t max_partial = 3,
                                     std::size_t max_terms = 4, std::uint32_t max_z = 2) {
  AlgebraElement e(kind, n);
  while (e.is_zero()) {
    const auto terms = uniform(rng, 1, max_terms);
    for (std::uint64_t t = 0; t < terms; ++t)
      e.add_term(random_monomial(rng, kind, n, max_partial, max_z), random_rational(rng));
  }
  return e;
}

/// Nonzero homogeneous element of B_n (or C_n) of the given degree.
inline AlgebraElement random_homogeneous(Rng& rng, AlgebraKind kind, std::size_t n, std::uint32_t degree,
                                         std::size_t max_terms = 4) {
  const auto basis = basis_of_degree(kind, n, degree);
  AlgebraElement e(kind, n);
  while (e.is_zero()) {
    const auto terms = uniform(rng, 1, max_terms);
    for (std::uint64_t t = 0; t < terms; ++t)
      e.add_term(basis[uniform(rng, 0, basis.size() - 1)], random_rational(rng));
  }
  return e;
}

inline Word random_word(Rng& rng, const std::vector<Generator>& alphabet, std::size_t max_length) {
  Word w(uniform(rng, 0, max_length));
  for (auto& g : w) g = alphabet[uniform(rng, 0, alphabet.size() - 1)];
  return w;
}

/// Nonzero element of B_n^! with up to max_terms random basis words.
inline ShriekElement random_shriek(Rng& rng, std::size_t n, std::size_t max_terms = 4) {
  const auto& basis = shriek_algebra(n).basis();
  ShriekElement e(n);
  while (e.is_zero()) {
    const auto terms = uniform(rng, 1, max_terms);
    for (std::uint64_t t = 0; t < terms; ++t)
      e.add_term(basis[uniform(rng, 0, basis.size() - 1)], random_rational(rng));
  }
  return e;
}

}  // namespace weylkit
