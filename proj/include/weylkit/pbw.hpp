#pragma once

// Arithmetic in the homogenized Weyl algebra B_n, the Weyl algebra A_n and
// the polynomial algebra C_n on their PBW bases Z^i X^P d^Q.
//
// Sign convention: d_i X_i = X_i d_i + Z^2 in B_n (d_i X_i = X_i d_i + 1 in A_n).
//
// Two independent routes to a product exist: normal_form() rewrites free
// words with the defining relations, multiply() uses the closed Leibniz
// formula d^q X^r = sum_k k! C(q,k) C(r,k) Z^{2k} X^{r-k} d^{q-k}. Tests
// compare the two.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "weylkit/error.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/generator.hpp"
#include "weylkit/matrix.hpp"
#include "weylkit/rational.hpp"
#include "weylkit/rewriting.hpp"

namespace weylkit {

/// Basis element Z^z X^x d^d.
struct PBWMonomial {
  std::uint32_t z = 0;
  std::vector<std::uint32_t> x;
  std::vector<std::uint32_t> d;

  static PBWMonomial one(std::size_t n) { return {0, std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)}; }

  std::size_t n() const noexcept { return x.size(); }

  /// Total X and d exponent; Z does not count.
  std::uint32_t partial_degree() const {
    return std::accumulate(x.begin(), x.end(), 0u) + std::accumulate(d.begin(), d.end(), 0u);
  }
  std::uint32_t graded_degree() const { return z + partial_degree(); }

  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

namespace detail {

// Larger leading exponent first, so x1 sorts before x2.
inline int compare_exponents(const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace detail

/// Canonical term order: graded degree, then Z exponent, then X exponents,
/// then d exponents.
struct MonomialOrder {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    const auto da = a.graded_degree(), db = b.graded_degree();
    if (da != db) return da < db;
    if (a.z != b.z) return a.z < b.z;
    if (int c = detail::compare_exponents(a.x, b.x)) return c < 0;
    return detail::compare_exponents(a.d, b.d) < 0;
  }
};

/// Reading word Z..Z X_1..X_1 ... d_n..d_n of a monomial.
inline Word word_of(const PBWMonomial& m) {
  Word w(m.z, Generator::z());
  for (std::uint32_t i = 0; i < m.n(); ++i) w.insert(w.end(), m.x[i], Generator::x(i + 1));
  for (std::uint32_t i = 0; i < m.n(); ++i) w.insert(w.end(), m.d[i], Generator::d(i + 1));
  return w;
}

/// Exponent record of a word, read commutatively.
inline PBWMonomial monomial_of(const Word& w, std::size_t n) {
  PBWMonomial m = PBWMonomial::one(n);
  for (const auto& g : w) {
    if (g.is_z()) ++m.z;
    else if (g.is_x()) ++m.x[g.index - 1];
    else ++m.d[g.index - 1];
  }
  return m;
}

/// Sparse element of A_n, B_n or C_n in PBW coordinates. Never stores zero
/// coefficients, so equality of elements is equality of coefficient maps.
class AlgebraElement {
 public:
  using Terms = std::map<PBWMonomial, Rational, MonomialOrder>;

  AlgebraElement(AlgebraKind kind, std::size_t n) : kind_(kind), n_(n) {
    if (kind != AlgebraKind::A && kind != AlgebraKind::B && kind != AlgebraKind::C)
      throw KindMismatch("PBW elements live in A, B or C");
  }

  static AlgebraElement zero(AlgebraKind kind, std::size_t n) { return {kind, n}; }

  static AlgebraElement constant(AlgebraKind kind, std::size_t n, const Rational& c) {
    AlgebraElement e(kind, n);
    e.add_term(PBWMonomial::one(n), c);
    return e;
  }
  static AlgebraElement one(AlgebraKind kind, std::size_t n) { return constant(kind, n, 1); }

  static AlgebraElement monomial(AlgebraKind kind, const PBWMonomial& m, const Rational& c = 1) {
    AlgebraElement e(kind, m.n());
    e.add_term(m, c);
    return e;
  }

  static AlgebraElement generator(AlgebraKind kind, std::size_t n, const Generator& g) {
    check_generator(g, n, kind);
    return monomial(kind, monomial_of(Word{g}, n));
  }

  AlgebraKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const PBWMonomial& m, const Rational& c) {
    if (m.n() != n_ || m.d.size() != n_) throw SizeMismatch("monomial has the wrong number of variables");
    if (kind_ == AlgebraKind::A && m.z != 0) throw IllegalGenerator("A_n monomials carry no Z");
    if (weylkit::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (weylkit::is_zero(it->second)) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) {
    if (weylkit::is_zero(s)) return zero(a.kind_, a.n_);
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void check_compatible(const AlgebraElement& other) const {
    if (kind_ != other.kind_ || n_ != other.n_)
      throw KindMismatch("operands belong to different algebras");
  }

 private:
  AlgebraKind kind_;
  std::size_t n_;
  Terms terms_;
};

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
inline AlgebraElement scale(const Rational& c, const AlgebraElement& a) { return c * a; }

/// Rewriting rules onto the PBW basis. Generators are ranked Z < X_1 < .. <
/// X_n < d_1 < .. < d_n and every descent ab (rank a > rank b) is a redex:
///   g Z -> Z g,  X_j X_i -> X_i X_j,  d_j d_i -> d_i d_j,  d_j X_i -> X_i d_j,
///   d_i X_i -> X_i d_i + Z Z   (B),   + 1 (A),   + 0 (C).
class PBWRewritingSystem {
 public:
  PBWRewritingSystem(AlgebraKind kind, std::size_t n) : kind_(kind), n_(n) {}

  std::size_t rank(const Generator& g) const {
    if (g.is_z()) return 0;
    return g.is_x() ? g.index : n_ + g.index;
  }

  bool is_redex(const Generator& a, const Generator& b) const { return rank(a) > rank(b); }

  std::vector<Replacement> rewrite(const Generator& a, const Generator& b) const {
    std::vector<Replacement> out{{Rational(1), Word{b, a}}};
    if (a.is_d() && b.is_x() && a.index == b.index) {
      if (kind_ == AlgebraKind::B) out.push_back({Rational(1), Word{Generator::z(), Generator::z()}});
      else if (kind_ == AlgebraKind::A) out.push_back({Rational(1), Word{}});
    }
    return out;
  }

 private:
  AlgebraKind kind_;
  std::size_t n_;
};

namespace detail {

inline void check_word(const Combination& words, AlgebraKind kind, std::size_t n) {
  for (const auto& [w, c] : words)
    for (const auto& g : w) check_generator(g, n, kind);
}

inline AlgebraElement element_from_normal_words(const Combination& words, AlgebraKind kind,
                                                std::size_t n) {
  AlgebraElement out(kind, n);
  for (const auto& [w, c] : words) out.add_term(monomial_of(w, n), c);
  return out;
}

}  // namespace detail

/// Rewrites a free expression to its unique PBW representative.
inline AlgebraElement normal_form(const FreeExpression& e, AlgebraKind kind, std::size_t n) {
  auto words = e.to_combination();
  detail::check_word(words, kind, n);
  const PBWRewritingSystem system(kind, n);
  return detail::element_from_normal_words(reduce(system, std::move(words)), kind, n);
}

inline AlgebraElement normal_form(const Word& w, AlgebraKind kind, std::size_t n) {
  return normal_form(FreeExpression{{FreeTerm{Rational(1), w}}}, kind, n);
}

/// Same as normal_form but contracts redexes in a random order.
template <class Rng>
AlgebraElement normal_form_randomized(const FreeExpression& e, AlgebraKind kind, std::size_t n,
                                      Rng& rng) {
  auto words = e.to_combination();
  detail::check_word(words, kind, n);
  const PBWRewritingSystem system(kind, n);
  return detail::element_from_normal_words(reduce_randomized(system, std::move(words), rng), kind,
                                           n);
}

/// Sum of reading words of the terms of a.
inline FreeExpression to_free_expression(const AlgebraElement& a) {
  FreeExpression out;
  for (const auto& [m, c] : a.terms()) out.terms.push_back({c, word_of(m)});
  return out;
}

namespace detail {

// (Z^a X^P d^Q)(Z^b X^R d^S) by moving every d^q_i past X^r_i with the
// Leibniz rule; distinct indices commute.
inline void multiply_monomials(const PBWMonomial& left, const PBWMonomial& right,
                               const Rational& coeff, AlgebraKind kind, AlgebraElement& out) {
  const std::size_t n = left.n();
  PBWMonomial base = PBWMonomial::one(n);
  base.z = left.z + right.z;
  for (std::size_t i = 0; i < n; ++i) {
    base.x[i] = left.x[i] + right.x[i];
    base.d[i] = left.d[i] + right.d[i];
  }
  if (kind == AlgebraKind::C) {
    out.add_term(base, coeff);
    return;
  }
  // Odometer over contraction counts k_i in 0..min(q_i, r_i).
  std::vector<std::uint32_t> bound(n), k(n, 0);
  for (std::size_t i = 0; i < n; ++i) bound[i] = std::min(left.d[i], right.x[i]);
  for (;;) {
    Rational c = coeff;
    PBWMonomial m = base;
    std::uint32_t contractions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i] == 0) continue;
      c *= binomial(left.d[i], k[i]) * binomial(right.x[i], k[i]) * factorial(k[i]);
      m.x[i] -= k[i];
      m.d[i] -= k[i];
      contractions += k[i];
    }
    if (kind == AlgebraKind::B) m.z += 2 * contractions;
    out.add_term(m, c);
    std::size_t i = 0;
    while (i < n && k[i] == bound[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
}

}  // namespace detail

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_compatible(b);
  AlgebraElement out(a.kind(), a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) detail::multiply_monomials(ma, mb, ca * cb, a.kind(), out);
  return out;
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b) - multiply(b, a);
}

/// The filtration degree: maximal X,d exponent sum over the terms.
inline std::uint32_t partial_degree(const AlgebraElement& a) {
  if (a.is_zero()) throw ZeroElement("the partial degree of 0 is undefined");
  std::uint32_t best = 0;
  for (const auto& [m, c] : a.terms()) best = std::max(best, m.partial_degree());
  return best;
}

/// Maximal graded degree of the terms (the degree, for homogeneous a).
inline std::uint32_t graded_degree(const AlgebraElement& a) {
  if (a.is_zero()) throw ZeroElement("the graded degree of 0 is undefined");
  return a.terms().rbegin()->first.graded_degree();
}

inline bool is_homogeneous(const AlgebraElement& a) {
  if (a.is_zero()) return true;
  return a.terms().begin()->first.graded_degree() == a.terms().rbegin()->first.graded_degree();
}

inline AlgebraElement graded_component(const AlgebraElement& a, std::uint32_t degree) {
  AlgebraElement out(a.kind(), a.n());
  for (const auto& [m, c] : a.terms())
    if (m.graded_degree() == degree) out.add_term(m, c);
  return out;
}

/// All PBW monomials of graded degree d, in canonical order. For A_n the
/// Z exponent is fixed at 0.
inline std::vector<PBWMonomial> basis_of_degree(AlgebraKind kind, std::size_t n, std::uint32_t d) {
  if (kind != AlgebraKind::A && kind != AlgebraKind::B && kind != AlgebraKind::C)
    throw KindMismatch("basis_of_degree expects A, B or C");
  const std::size_t slots = 2 * n + (kind == AlgebraKind::A ? 0 : 1);
  std::vector<PBWMonomial> out;
  std::vector<std::uint32_t> e(slots, 0);
  // Enumerate compositions of d into `slots` parts recursively.
  auto fill = [&](auto&& self, std::size_t slot, std::uint32_t remaining) -> void {
    if (slots == 0) {
      if (remaining == 0) out.push_back(PBWMonomial::one(n));
      return;
    }
    if (slot + 1 == slots) {
      e[slot] = remaining;
      PBWMonomial m = PBWMonomial::one(n);
      std::size_t k = 0;
      if (kind != AlgebraKind::A) m.z = e[k++];
      for (std::size_t i = 0; i < n; ++i) m.x[i] = e[k++];
      for (std::size_t i = 0; i < n; ++i) m.d[i] = e[k++];
      out.push_back(std::move(m));
      return;
    }
    for (std::uint32_t v = 0; v <= remaining; ++v) {
      e[slot] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  fill(fill, 0, d);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

/// Basis of the homogeneous degree-d elements of B_n commuting with every
/// generator, by an exact kernel computation over the degree-d PBW basis.
inline std::vector<AlgebraElement> centralizer_in_degree(AlgebraKind kind, std::size_t n,
                                                         std::uint32_t d) {
  if (kind != AlgebraKind::B) throw KindMismatch("centralizer_in_degree is defined for B_n");
  const auto basis = basis_of_degree(kind, n, d);
  const auto targets = basis_of_degree(kind, n, d + 1);
  std::map<PBWMonomial, std::size_t, MonomialOrder> target_index;
  for (std::size_t i = 0; i < targets.size(); ++i) target_index.emplace(targets[i], i);

  const auto gens = generators_of(kind, n);
  Matrix<Rational> system(gens.size() * targets.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto b = AlgebraElement::monomial(kind, basis[col]);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto bracket = commutator(b, AlgebraElement::generator(kind, n, gens[g]));
      for (const auto& [m, c] : bracket.terms())
        system(g * targets.size() + target_index.at(m), col) = c;
    }
  }
  std::vector<AlgebraElement> out;
  for (const auto& v : kernel_basis(system)) {
    AlgebraElement e(kind, n);
    for (std::size_t i = 0; i < v.size(); ++i) e.add_term(basis[i], v[i]);
    out.push_back(std::move(e));
  }
  return out;
}

/// True when every term carries at least one Z (vacuously true for 0).
inline bool z_divides(const AlgebraElement& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const auto& t) { return t.first.z >= 1; });
}

inline AlgebraElement divide_by_z(const AlgebraElement& a) {
  if (!z_divides(a)) throw NotDivisible("element is not divisible by Z");
  AlgebraElement out(a.kind(), a.n());
  for (const auto& [m, c] : a.terms()) {
    PBWMonomial lowered = m;
    --lowered.z;
    out.add_term(lowered, c);
  }
  return out;
}

/// Z^k as an element of B_n.
inline AlgebraElement z_power(std::size_t n, std::uint32_t k) {
  PBWMonomial m = PBWMonomial::one(n);
  m.z = k;
  return AlgebraElement::monomial(AlgebraKind::B, m);
}

}  // namespace weylkit
