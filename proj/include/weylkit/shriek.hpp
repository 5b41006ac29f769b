#pragma once

// The finite-dimensional quadratic dual B_n^!: generators x_i, d_i, z subject
// to x_i^2 = d_i^2 = 0, pairwise anticommutation of distinct generators and
// z^2 = -(x_1 d_1 + ... + x_n d_n). Basis: square-free words
// x_{i1}..x_{it} d_{j1}..d_{js} [z], stored as bit masks. C_n^! is the
// subalgebra spanned by the words without z.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "weylkit/error.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/generator.hpp"
#include "weylkit/matrix.hpp"
#include "weylkit/rational.hpp"
#include "weylkit/rewriting.hpp"

namespace weylkit {

/// Square-free basis word. Bit i-1 of x_mask stands for x_i.
struct ShriekWord {
  std::uint32_t x_mask = 0;
  std::uint32_t d_mask = 0;
  bool z = false;

  std::uint32_t degree() const {
    return static_cast<std::uint32_t>(std::popcount(x_mask) + std::popcount(d_mask)) + (z ? 1u : 0u);
  }

  static ShriekWord top(std::size_t n) {
    const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    return {full, full, true};
  }

  friend bool operator==(const ShriekWord&, const ShriekWord&) = default;
};

namespace detail {

// Same convention as the PBW exponents: x1 present sorts before x1 absent.
inline int compare_masks(std::uint32_t a, std::uint32_t b) {
  if (a == b) return 0;
  const std::uint32_t lowest_difference = (a ^ b) & ~((a ^ b) - 1);
  return (a & lowest_difference) ? -1 : 1;
}

}  // namespace detail

/// Canonical order: degree, z flag, x mask, d mask.
struct ShriekWordOrder {
  bool operator()(const ShriekWord& a, const ShriekWord& b) const {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.z != b.z) return !a.z;
    if (int c = detail::compare_masks(a.x_mask, b.x_mask)) return c < 0;
    return detail::compare_masks(a.d_mask, b.d_mask) < 0;
  }
};

/// x's ascending, then d's ascending, then z.
inline Word reading_word(const ShriekWord& w, std::size_t n) {
  Word out;
  for (std::uint32_t i = 0; i < n; ++i)
    if (w.x_mask >> i & 1u) out.push_back(Generator::x(i + 1));
  for (std::uint32_t i = 0; i < n; ++i)
    if (w.d_mask >> i & 1u) out.push_back(Generator::d(i + 1));
  if (w.z) out.push_back(Generator::z());
  return out;
}

/// Sparse element of B_n^!.
class ShriekElement {
 public:
  using Terms = std::map<ShriekWord, Rational, ShriekWordOrder>;

  explicit ShriekElement(std::size_t n) : n_(n) {}

  static ShriekElement basis(std::size_t n, const ShriekWord& w, const Rational& c = 1) {
    ShriekElement e(n);
    e.add_term(w, c);
    return e;
  }
  static ShriekElement one(std::size_t n) { return basis(n, ShriekWord{}); }
  static ShriekElement generator(std::size_t n, const Generator& g) {
    check_generator(g, n, AlgebraKind::BShriek);
    ShriekWord w;
    if (g.is_x()) w.x_mask = 1u << (g.index - 1);
    else if (g.is_d()) w.d_mask = 1u << (g.index - 1);
    else w.z = true;
    return basis(n, w);
  }

  std::size_t n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const ShriekWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const ShriekWord& w, const Rational& c) {
    if (weylkit::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (weylkit::is_zero(it->second)) terms_.erase(it);
    }
  }

  ShriekElement& operator+=(const ShriekElement& other) {
    check_compatible(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }
  ShriekElement& operator-=(const ShriekElement& other) {
    check_compatible(other);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
  }
  friend ShriekElement operator+(ShriekElement a, const ShriekElement& b) { return a += b; }
  friend ShriekElement operator-(ShriekElement a, const ShriekElement& b) { return a -= b; }
  friend ShriekElement operator*(const Rational& s, ShriekElement a) {
    if (weylkit::is_zero(s)) return ShriekElement(a.n_);
    for (auto& [w, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const ShriekElement&, const ShriekElement&) = default;

  void check_compatible(const ShriekElement& other) const {
    if (n_ != other.n_) throw SizeMismatch("shriek elements for different n");
  }

 private:
  std::size_t n_;
  Terms terms_;
};

/// Reduction rules of B_n^! with generators ranked x_1 < .. < x_n < d_1 < ..
/// < d_n < z:
///   a a -> 0 for a = x_i, d_i;   z z -> -(x_1 d_1 + .. + x_n d_n);
///   a b -> -b a when rank a > rank b.
/// Every z z step lowers the number of z's by two, every swap lowers the
/// number of inversions, so reduction terminates.
class ShriekRewritingSystem {
 public:
  explicit ShriekRewritingSystem(std::size_t n) : n_(n) {}

  std::size_t rank(const Generator& g) const {
    if (g.is_z()) return 2 * n_;
    return g.is_x() ? g.index - 1 : n_ + g.index - 1;
  }

  bool is_redex(const Generator& a, const Generator& b) const { return rank(a) >= rank(b); }

  std::vector<Replacement> rewrite(const Generator& a, const Generator& b) const {
    if (a == b) {
      if (!a.is_z()) return {};
      std::vector<Replacement> out;
      for (std::uint32_t i = 1; i <= n_; ++i)
        out.push_back({Rational(-1), Word{Generator::x(i), Generator::d(i)}});
      return out;
    }
    return {{Rational(-1), Word{b, a}}};
  }

 private:
  std::size_t n_;
};

/// Quantum polynomial ring K_q[x_1..x_m] with x_j x_i = -x_i x_j (j > i) and
/// no further relations: rules x_j x_i -> -x_i x_j.
class QuantumPolynomialSystem {
 public:
  bool is_redex(const Generator& a, const Generator& b) const { return a.index > b.index; }
  std::vector<Replacement> rewrite(const Generator& a, const Generator& b) const {
    return {{Rational(-1), Word{b, a}}};
  }
};

namespace detail {

inline ShriekWord shriek_word_of_normal(const Word& w) {
  ShriekWord out;
  for (const auto& g : w) {
    if (g.is_x()) out.x_mask |= 1u << (g.index - 1);
    else if (g.is_d()) out.d_mask |= 1u << (g.index - 1);
    else out.z = true;
  }
  return out;
}

inline ShriekElement shriek_from_normal_words(const Combination& words, std::size_t n) {
  ShriekElement out(n);
  for (const auto& [w, c] : words) out.add_term(shriek_word_of_normal(w), c);
  return out;
}

inline void check_shriek_words(const Combination& words, std::size_t n) {
  for (const auto& [w, c] : words)
    for (const auto& g : w) check_generator(g, n, AlgebraKind::BShriek);
}

}  // namespace detail

inline ShriekElement reduce_shriek(const FreeExpression& e, std::size_t n) {
  auto words = e.to_combination();
  detail::check_shriek_words(words, n);
  return detail::shriek_from_normal_words(reduce(ShriekRewritingSystem(n), std::move(words)), n);
}

/// Canonical basis combination of a word in the generators of B_n^!.
inline ShriekElement reduce_word(const Word& w, std::size_t n) {
  return reduce_shriek(FreeExpression{{FreeTerm{Rational(1), w}}}, n);
}

template <class Rng>
ShriekElement reduce_word_randomized(const Word& w, std::size_t n, Rng& rng) {
  Combination words{{w, Rational(1)}};
  detail::check_shriek_words(words, n);
  return detail::shriek_from_normal_words(
      reduce_randomized(ShriekRewritingSystem(n), std::move(words), rng), n);
}

inline FreeExpression to_free_expression(const ShriekElement& e) {
  FreeExpression out;
  for (const auto& [w, c] : e.terms()) out.terms.push_back({c, reading_word(w, e.n())});
  return out;
}

/// All 2^{2n+1} basis words in canonical order.
inline std::vector<ShriekWord> shriek_basis(std::size_t n) {
  if (n < 1 || n > 12) throw UnsupportedN("shriek_basis supports 1 <= n <= 12");
  std::vector<ShriekWord> out;
  const std::uint32_t masks = 1u << n;
  out.reserve(std::size_t{2} * masks * masks);
  for (int z = 0; z < 2; ++z)
    for (std::uint32_t x = 0; x < masks; ++x)
      for (std::uint32_t d = 0; d < masks; ++d) out.push_back({x, d, z == 1});
  std::sort(out.begin(), out.end(), ShriekWordOrder{});
  return out;
}

/// Basis words of a single degree.
inline std::vector<ShriekWord> shriek_basis_of_degree(std::size_t n, std::uint32_t degree) {
  std::vector<ShriekWord> out;
  for (const auto& w : shriek_basis(n))
    if (w.degree() == degree) out.push_back(w);
  return out;
}

/// Structure constants of B_n^!, computed once per n by reducing every
/// concatenation of two basis words. Immutable after construction.
class ShriekAlgebra {
 public:
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

  explicit ShriekAlgebra(std::size_t n) : n_(n), basis_(shriek_basis(n)) {
    index_.assign(std::size_t{1} << (2 * n + 1), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[code(basis_[i])] = i;
    const std::size_t dim = basis_.size();
    table_.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const Word left = reading_word(basis_[i], n);
      for (std::size_t j = 0; j < dim; ++j) {
        if (basis_[i].degree() + basis_[j].degree() > 2 * n + 1) continue;
        Word w = left;
        const Word right = reading_word(basis_[j], n);
        w.insert(w.end(), right.begin(), right.end());
        const auto reduced = reduce_word(w, n);
        for (const auto& [word, c] : reduced.terms())
          table_[i * dim + j].emplace_back(index_of(word), c);
      }
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<ShriekWord>& basis() const noexcept { return basis_; }
  std::size_t index_of(const ShriekWord& w) const { return index_[code(w)]; }

  const SparseRow& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }

 private:
  std::size_t code(const ShriekWord& w) const {
    return w.x_mask | (static_cast<std::size_t>(w.d_mask) << n_) |
           (static_cast<std::size_t>(w.z) << (2 * n_));
  }

  std::size_t n_;
  std::vector<ShriekWord> basis_;
  std::vector<std::size_t> index_;
  std::vector<SparseRow> table_;
};

/// Shared, lazily built structure-constant table for B_n^!.
inline const ShriekAlgebra& shriek_algebra(std::size_t n) {
  if (n < 1 || n > 4) throw UnsupportedN("structure constants are available for 1 <= n <= 4");
  static std::mutex guard;
  static std::map<std::size_t, std::unique_ptr<const ShriekAlgebra>> cache;
  std::lock_guard lock(guard);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const ShriekAlgebra>(n);
  return *slot;
}

inline ShriekElement multiply(const ShriekElement& a, const ShriekElement& b) {
  a.check_compatible(b);
  const auto& algebra = shriek_algebra(a.n());
  ShriekElement out(a.n());
  for (const auto& [wa, ca] : a.terms()) {
    const auto i = algebra.index_of(wa);
    for (const auto& [wb, cb] : b.terms()) {
      for (const auto& [k, c] : algebra.product(i, algebra.index_of(wb)))
        out.add_term(algebra.basis()[k], ca * cb * c);
    }
  }
  return out;
}

inline ShriekElement operator*(const ShriekElement& a, const ShriekElement& b) { return multiply(a, b); }

struct Decomposition {
  ShriekElement c_part;  // words without z: the C_n^! component
  ShriekElement z_part;  // words ending in z: the Z C_n^! component
};

inline Decomposition decompose(const ShriekElement& e) {
  Decomposition out{ShriekElement(e.n()), ShriekElement(e.n())};
  for (const auto& [w, c] : e.terms()) (w.z ? out.z_part : out.c_part).add_term(w, c);
  return out;
}

inline bool in_c_subalgebra(const ShriekElement& e) { return decompose(e).z_part.is_zero(); }

/// Coefficient of the top word x_1..x_n d_1..d_n z.
inline Rational frobenius_functional(const ShriekElement& e) {
  return e.coefficient(ShriekWord::top(e.n()));
}

/// beta(a, b) = coefficient of the top word in ab.
inline Rational bilinear_form(const ShriekElement& a, const ShriekElement& b) {
  return frobenius_functional(multiply(a, b));
}

/// [beta(u, v)] for u in the degree-j basis and v in the degree-(2n+1-j) basis.
inline Matrix<Rational> gram_matrix(std::size_t n, std::uint32_t j) {
  if (j > 2 * n + 1) throw SizeMismatch("degree out of range 0..2n+1");
  const auto rows = shriek_basis_of_degree(n, j);
  const auto cols = shriek_basis_of_degree(n, static_cast<std::uint32_t>(2 * n + 1 - j));
  Matrix<Rational> g(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      g(r, c) = bilinear_form(ShriekElement::basis(n, rows[r]), ShriekElement::basis(n, cols[c]));
  return g;
}

/// The Nakayama automorphism, stored by its values on the generators
/// x_1..x_n, d_1..d_n, z (in that order).
struct NakayamaMap {
  std::size_t n = 0;
  std::vector<ShriekElement> images;

  const ShriekElement& image(const Generator& g) const {
    if (g.is_z()) return images[2 * n];
    return images[(g.is_x() ? 0 : n) + g.index - 1];
  }

  /// k with sigma(z) = k z, or nullopt when sigma(z) is not a multiple of z.
  std::optional<Rational> z_scalar() const {
    const auto& img = image(Generator::z());
    const ShriekWord z_word{0, 0, true};
    if (img.terms().size() != 1 || img.terms().begin()->first != z_word) return std::nullopt;
    return img.terms().begin()->second;
  }
};

/// Image of e under the multiplicative, linear extension of m.
inline ShriekElement apply_automorphism(const NakayamaMap& m, const ShriekElement& e) {
  if (m.n != e.n()) throw SizeMismatch("automorphism and element disagree on n");
  ShriekElement out(e.n());
  for (const auto& [w, c] : e.terms()) {
    ShriekElement image = ShriekElement::one(e.n());
    for (const auto& g : reading_word(w, e.n())) image = multiply(image, m.image(g));
    out += c * image;
  }
  return out;
}

/// Matrix of m on the degree-j basis (column k = image of basis word k).
inline Matrix<Rational> automorphism_matrix(const NakayamaMap& m, std::uint32_t j) {
  const auto basis = shriek_basis_of_degree(m.n, j);
  Matrix<Rational> out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto image = apply_automorphism(m, ShriekElement::basis(m.n, basis[col]));
    for (std::size_t row = 0; row < basis.size(); ++row) out(row, col) = image.coefficient(basis[row]);
  }
  return out;
}

/// Solves beta(sigma(y), v) = beta(v, y) for every generator y and every
/// degree-2n basis word v, then checks that the multiplicative extension is
/// bijective in each degree.
inline NakayamaMap nakayama(std::size_t n) {
  const auto degree_one = shriek_basis_of_degree(n, 1);
  const auto g_low = gram_matrix(n, 1);                                  // beta(u, v)
  const auto g_high = gram_matrix(n, static_cast<std::uint32_t>(2 * n));  // beta(v, u)
  if (rank(g_low) != degree_one.size()) throw SingularGram("degree-1 Gram matrix is singular");
  const auto system = g_low.transposed();

  NakayamaMap m{n, {}};
  for (const auto& y : generators_of(AlgebraKind::BShriek, n)) {
    const auto y_word = ShriekElement::generator(n, y).terms().begin()->first;
    std::size_t y_col = 0;
    while (degree_one[y_col] != y_word) ++y_col;
    std::vector<Rational> rhs(g_high.rows());
    for (std::size_t v = 0; v < g_high.rows(); ++v) rhs[v] = g_high(v, y_col);
    const auto coeffs = solve(system, rhs);
    if (!coeffs) throw SingularGram("no Nakayama image for generator " + to_string(y));
    ShriekElement image(n);
    for (std::size_t u = 0; u < degree_one.size(); ++u) image.add_term(degree_one[u], (*coeffs)[u]);
    m.images.push_back(std::move(image));
  }
  for (std::uint32_t j = 0; j <= 2 * n + 1; ++j) {
    const auto matrix = automorphism_matrix(m, j);
    if (rank(matrix) != matrix.rows())
      throw SingularGram("Nakayama map is not bijective in degree " + std::to_string(j));
  }
  return m;
}

}  // namespace weylkit
