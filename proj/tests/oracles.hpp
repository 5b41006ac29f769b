#pragma once

// Reference models used only by the tests. None of them shares code with the
// rewriting engines they check.
//
//  * Operator model of A_n and B_n: x_i acts on K[x_1..x_n] by multiplication,
//    d_i by t^2 d/dx_i and z by the scalar t (t = 1 and z absent for A_n).
//    Evaluated at several t this is faithful on the finite spans used here.
//  * Super model of B_n^!: an element is a + z b with a, b in the exterior
//    algebra on x_1..x_n, d_1..d_n, z odd and z z = -sum x_i d_i.
//  * Brute-force enumeration of exponent vectors.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "weylkit/weylkit.hpp"

namespace oracle {

using weylkit::AlgebraElement;
using weylkit::AlgebraKind;
using weylkit::Generator;
using weylkit::Rational;
using weylkit::Word;

// ---------------------------------------------------------------- operator model

using Exponents = std::vector<std::uint32_t>;
using Polynomial = std::map<Exponents, Rational>;

inline void accumulate(Polynomial& p, const Exponents& e, const Rational& c) {
  auto& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

/// Action of one generator on a polynomial.
inline Polynomial act(const Generator& g, const Polynomial& p, const Rational& t) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    if (g.is_z()) {
      accumulate(out, e, c * t);
    } else if (g.is_x()) {
      Exponents f = e;
      ++f[g.index - 1];
      accumulate(out, f, c);
    } else if (e[g.index - 1] > 0) {
      Exponents f = e;
      --f[g.index - 1];
      accumulate(out, f, c * t * t * e[g.index - 1]);
    }
  }
  return out;
}

/// Word acting right to left, as the product of operators.
inline Polynomial act(const Word& w, const Polynomial& p, const Rational& t) {
  Polynomial out = p;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = act(*it, out, t);
  return out;
}

inline Polynomial act(const std::vector<std::pair<Rational, Word>>& terms, const Polynomial& p, const Rational& t) {
  Polynomial out;
  for (const auto& [c, w] : terms)
    for (const auto& [e, v] : act(w, p, t)) accumulate(out, e, c * v);
  return out;
}

inline std::vector<std::pair<Rational, Word>> terms_of(const AlgebraElement& a) {
  std::vector<std::pair<Rational, Word>> out;
  for (const auto& [m, c] : a.terms()) out.emplace_back(c, weylkit::word_of(m));
  return out;
}

/// Monomials x^e with |e| <= max_degree, as test vectors.
inline std::vector<Polynomial> probe_polynomials(std::size_t n, std::uint32_t max_degree) {
  std::vector<Polynomial> out;
  Exponents e(n, 0);
  while (true) {
    std::uint32_t total = 0;
    for (auto v : e) total += v;
    if (total <= max_degree) out.push_back(Polynomial{{e, Rational(1)}});
    std::size_t i = 0;
    while (i < n && ++e[i] > max_degree) e[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// True when both sides act identically on every probe for t in {1, 2, 3}
/// (only t = 1 for A_n).
inline bool same_action(const std::vector<std::pair<Rational, Word>>& lhs,
                        const std::vector<std::pair<Rational, Word>>& rhs, AlgebraKind kind, std::size_t n,
                        std::uint32_t max_degree = 5) {
  const std::vector<Rational> ts = kind == AlgebraKind::A ? std::vector<Rational>{1}
                                                           : std::vector<Rational>{1, 2, 3};
  for (const auto& t : ts)
    for (const auto& p : probe_polynomials(n, max_degree))
      if (act(lhs, p, t) != act(rhs, p, t)) return false;
  return true;
}

// ---------------------------------------------------------------- enumeration

/// Number of exponent vectors of length slots with entries summing to total.
inline std::size_t count_compositions(std::size_t slots, std::uint32_t total) {
  if (slots == 1) return 1;
  std::size_t count = 0;
  for (std::uint32_t first = 0; first <= total; ++first) count += count_compositions(slots - 1, total - first);
  return count;
}

// ---------------------------------------------------------------- super model

/// Exterior algebra on 2n odd generators, basis by bitmask (bit i < n: x_{i+1},
/// bit n + i: d_{i+1}), product sign from counting inversions.
using Exterior = std::map<std::uint32_t, Rational>;

inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    const std::uint32_t bit = rest & -rest;
    swaps += __builtin_popcount(a & ~(bit | (bit - 1)));
  }
  return swaps % 2 ? -1 : 1;
}

inline Exterior wedge(const Exterior& a, const Exterior& b) {
  Exterior out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma & mb) continue;
      auto& slot = out[ma | mb];
      slot += ca * cb * wedge_sign(ma, mb);
      if (slot == 0) out.erase(ma | mb);
    }
  return out;
}

inline Exterior plus(Exterior a, const Exterior& b, const Rational& scale = 1) {
  for (const auto& [m, c] : b) {
    auto& slot = a[m];
    slot += scale * c;
    if (slot == 0) a.erase(m);
  }
  return a;
}

/// Parity involution: odd components change sign.
inline Exterior parity(const Exterior& a) {
  Exterior out;
  for (const auto& [m, c] : a) out[m] = __builtin_popcount(m) % 2 ? Rational(-c) : c;
  return out;
}

/// a + z b.
struct Super {
  Exterior a, b;
  friend bool operator==(const Super&, const Super&) = default;
};

/// (a + z b)(c + z e) = a c - w parity(b) e + z (parity(a) e + b c),
/// using a z = z parity(a) and z z = -w, w = sum x_i d_i.
inline Super multiply(const Super& p, const Super& q, std::size_t n) {
  Exterior omega;
  for (std::size_t i = 0; i < n; ++i) omega[(1u << i) | (1u << (n + i))] = wedge_sign(1u << i, 1u << (n + i));
  Super out;
  out.a = plus(wedge(p.a, q.a), wedge(omega, wedge(parity(p.b), q.b)), -1);
  out.b = plus(wedge(parity(p.a), q.b), wedge(p.b, q.a));
  return out;
}

/// Basis word x^P d^Q z^e (reading order) in the super model: the z moves to
/// the front past deg(P) + deg(Q) odd generators.
inline Super from_shriek(const weylkit::ShriekElement& e) {
  const std::size_t n = e.n();
  Super out;
  for (const auto& [w, c] : e.terms()) {
    const std::uint32_t mask = w.x_mask | (w.d_mask << n);
    // x^P d^Q as a wedge in the order x_1..x_n d_1..d_n is exactly the mask basis element.
    if (!w.z) {
      out.a[mask] += c;
    } else {
      out.b[mask] += __builtin_popcount(mask) % 2 ? Rational(-c) : c;
    }
  }
  std::erase_if(out.a, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(out.b, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace oracle
