#pragma once

// Named verification suites. Each suite binds a family of algebraic claims to
// executable checks over exact arithmetic and reports pass/fail per claim,
// with a rendered counterexample for every failure. Suites are deterministic
// in (name, n, seed, budget).

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/error.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/localization.hpp"
#include "weylkit/matrix.hpp"
#include "weylkit/pbw.hpp"
#include "weylkit/quadratic_dual.hpp"
#include "weylkit/render.hpp"
#include "weylkit/rewriting.hpp"
#include "weylkit/sampling.hpp"
#include "weylkit/shriek.hpp"

namespace weylkit {

using Witness = std::optional<std::string>;

struct CheckResult {
  std::string claim_id;
  std::string anchor;  // the mathematical statement the check exercises
  bool passed = false;
  Witness witness;     // always present on failure
  std::int64_t elapsed_millis = 0;
};

struct SuiteReport {
  std::string suite_name;
  std::vector<std::size_t> n_range;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::vector<CheckResult> checks;
  OrderedJson data = OrderedJson::object();

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::size_t kDefaultBudget = 1000;

struct SuiteOptions {
  std::size_t n = 1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kDefaultBudget;
  bool bless = false;
  std::filesystem::path golden_dir;  // empty: WEYLKIT_GOLDEN_DIR or the built-in default
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pbw-laws",     "center",    "dual-orthogonality",
                                              "shriek-dims",  "frobenius", "nakayama",
                                              "decomposition", "localization", "roundtrip"};
  return names;
}

/// Largest n each suite accepts; the shriek tables grow like 4^{2n+1}.
inline std::size_t max_n_for_suite(std::string_view name) {
  if (name == "frobenius" || name == "nakayama" || name == "decomposition") return 2;
  return 3;
}

inline std::filesystem::path golden_directory(const SuiteOptions& opts) {
  if (!opts.golden_dir.empty()) return opts.golden_dir;
  if (const char* env = std::getenv("WEYLKIT_GOLDEN_DIR"); env && *env) return env;
#ifdef WEYLKIT_DEFAULT_GOLDEN_DIR
  return WEYLKIT_DEFAULT_GOLDEN_DIR;
#else
  return "golden";
#endif
}

inline std::filesystem::path golden_file(const SuiteOptions& opts) {
  return golden_directory(opts) / ("shriek_n" + std::to_string(opts.n) + ".json");
}

/// Golden record for B_n^!: dimensions, Gram determinants and the Nakayama map.
inline OrderedJson shriek_golden_record(std::size_t n) {
  OrderedJson out;
  out["n"] = n;
  std::vector<std::size_t> dims(2 * n + 2, 0);
  for (const auto& w : shriek_basis(n)) ++dims[w.degree()];
  out["dims"] = dims;
  OrderedJson dets = OrderedJson::array();
  for (std::uint32_t j = 0; j <= 2 * n + 1; ++j) dets.push_back(to_fraction_string(determinant(gram_matrix(n, j))));
  out["gram_determinants"] = std::move(dets);
  const auto sigma = nakayama(n);
  OrderedJson images = OrderedJson::object();
  for (const auto& g : generators_of(AlgebraKind::BShriek, n)) images[to_string(g)] = render(sigma.image(g));
  out["nakayama_images"] = std::move(images);
  const auto k = sigma.z_scalar();
  out["nakayama_scalar"] = k ? to_fraction_string(*k) : std::string("none");
  return out;
}

namespace detail {

inline std::string join_numbers(const std::vector<std::size_t>& values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

class SuiteRunner {
 public:
  SuiteRunner(SuiteReport& report, const SuiteOptions& opts) : report_(report), opts_(opts) {}

  void check(const std::string& claim, const std::string& anchor, const std::function<Witness(Rng&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result{claim, anchor, false, std::nullopt, 0};
    Rng rng = make_rng(opts_.seed, report_.suite_name + "/" + claim);
    try {
      result.witness = body(rng);
      result.passed = !result.witness.has_value();
    } catch (const std::exception& e) {
      result.witness = std::string("exception: ") + e.what();
    }
    result.elapsed_millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    report_.checks.push_back(std::move(result));
  }

  std::size_t n() const { return opts_.n; }
  std::size_t budget() const { return opts_.budget; }
  const SuiteOptions& options() const { return opts_; }
  OrderedJson& data() { return report_.data; }

 private:
  SuiteReport& report_;
  const SuiteOptions& opts_;
};

// ---------------------------------------------------------------- pbw-laws

inline void run_pbw_laws(SuiteRunner& s) {
  const std::size_t n = s.n();
  const auto B = AlgebraKind::B;

  s.check("pbw-leibniz-identity", "d1 x1^a = x1^a d1 + a z^2 x1^(a-1)",
          [&](Rng&) -> Witness {
            for (AlgebraKind kind : {AlgebraKind::B, AlgebraKind::A}) {
              for (std::uint32_t a = 1; a <= 20; ++a) {
                Word w{Generator::d(1)};
                w.insert(w.end(), a, Generator::x(1));
                PBWMonomial lead = PBWMonomial::one(n), tail = PBWMonomial::one(n);
                lead.x[0] = a;
                lead.d[0] = 1;
                tail.x[0] = a - 1;
                tail.z = kind == AlgebraKind::B ? 2 : 0;
                const auto expected = AlgebraElement::monomial(kind, lead) +
                                      AlgebraElement::monomial(kind, tail, Rational(a));
                const auto got = normal_form(w, kind, n);
                if (got != expected)
                  return std::string(to_string(kind)) + ": d1*x1^" + std::to_string(a) + " -> " + render(got);
              }
            }
            return std::nullopt;
          });

  s.check("pbw-critical-pairs", "ordered monomials form a basis: critical pairs resolve",
          [&](Rng&) -> Witness {
            for (AlgebraKind kind : {AlgebraKind::B, AlgebraKind::A, AlgebraKind::C}) {
              const PBWRewritingSystem system(kind, n);
              if (auto bad = unresolved_overlap(system, generators_of(kind, n)))
                return std::string(to_string(kind)) + ": overlap " + word_text(*bad) + " does not resolve";
            }
            return std::nullopt;
          });

  s.check("pbw-graded-dimensions", "dim (B_n)_d = C(d+2n, 2n)", [&](Rng&) -> Witness {
    std::vector<std::size_t> dims;
    for (std::uint32_t d = 0; d <= 8; ++d) {
      const auto count = basis_of_degree(B, n, d).size();
      dims.push_back(count);
      if (Rational(static_cast<unsigned long>(count)) != binomial(d + 2 * n, 2 * n))
        return "degree " + std::to_string(d) + " has " + std::to_string(count) + " monomials";
    }
    s.data()["graded_dims"] = dims;
    return std::nullopt;
  });

  s.check("rewriting-confluence-random", "normal form is independent of rewriting order",
          [&](Rng& rng) -> Witness {
            for (AlgebraKind kind : {AlgebraKind::B, AlgebraKind::A}) {
              const auto gens = generators_of(kind, n);
              for (std::size_t i = 0; i < s.budget(); ++i) {
                const auto w = random_word(rng, gens, 6);
                const FreeExpression e{{FreeTerm{Rational(1), w}}};
                const auto canonical = normal_form(e, kind, n);
                const auto shuffled = normal_form_randomized(e, kind, n, rng);
                if (canonical != shuffled)
                  return word_text(w) + ": " + render(canonical) + " vs " + render(shuffled);
              }
            }
            return std::nullopt;
          });

  s.check("rewriting-matches-leibniz", "word rewriting agrees with the closed-form product",
          [&](Rng& rng) -> Witness {
            for (std::size_t i = 0; i < s.budget(); ++i) {
              const auto a = random_element(rng, B, n);
              const auto b = random_element(rng, B, n);
              FreeExpression concat;
              for (const auto& ta : to_free_expression(a).terms)
                for (const auto& tb : to_free_expression(b).terms) {
                  Word w = ta.word;
                  w.insert(w.end(), tb.word.begin(), tb.word.end());
                  concat.terms.push_back({ta.coeff * tb.coeff, std::move(w)});
                }
              if (normal_form(concat, B, n) != multiply(a, b))
                return "(" + render(a) + ")*(" + render(b) + ")";
            }
            return std::nullopt;
          });

  s.check("associativity", "associativity of B_n", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < s.budget(); ++i) {
      const auto a = random_element(rng, B, n), b = random_element(rng, B, n), c = random_element(rng, B, n);
      if ((a * b) * c != a * (b * c)) return "a=" + render(a) + " b=" + render(b) + " c=" + render(c);
    }
    return std::nullopt;
  });

  s.check("unit-and-bilinearity", "unit, distributivity and scalar laws in B_n", [&](Rng& rng) -> Witness {
    const auto one = AlgebraElement::one(B, n);
    for (std::size_t i = 0; i < s.budget(); ++i) {
      const auto a = random_element(rng, B, n), b = random_element(rng, B, n), c = random_element(rng, B, n);
      const auto q = random_rational(rng);
      if (a * one != a || one * a != a) return "unit law fails for " + render(a);
      if (a * (b + c) != a * b + a * c || (a + b) * c != a * c + b * c)
        return "distributivity fails for a=" + render(a) + " b=" + render(b) + " c=" + render(c);
      if ((q * a) * b != q * (a * b) || a * (q * b) != q * (a * b))
        return "scalar compatibility fails for a=" + render(a);
    }
    return std::nullopt;
  });

  s.check("filtration-sum", "deg(a+b) <= max(deg a, deg b)", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < s.budget(); ++i) {
      const auto a = random_element(rng, B, n), b = random_element(rng, B, n);
      const auto sum = a + b;
      if (!sum.is_zero() && partial_degree(sum) > std::max(partial_degree(a), partial_degree(b)))
        return "a=" + render(a) + " b=" + render(b);
    }
    return std::nullopt;
  });

  s.check("filtration-product", "deg(ab) = deg a + deg b", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < s.budget(); ++i) {
      const auto a = random_element(rng, B, n), b = random_element(rng, B, n);
      if (partial_degree(a * b) != partial_degree(a) + partial_degree(b))
        return "a=" + render(a) + " b=" + render(b);
    }
    return std::nullopt;
  });

  s.check("commutator-drop", "deg [a,b] <= deg a + deg b - 1", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < s.budget(); ++i) {
      const auto a = random_element(rng, B, n), b = random_element(rng, B, n);
      const auto bracket = commutator(a, b);
      if (!bracket.is_zero() && partial_degree(bracket) + 1 > partial_degree(a) + partial_degree(b))
        return "a=" + render(a) + " b=" + render(b) + " [a,b]=" + render(bracket);
    }
    return std::nullopt;
  });

  s.check("integral-domain", "B_n has no zero divisors", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < s.budget(); ++i) {
      const auto a = random_element(rng, B, n), b = random_element(rng, B, n);
      if ((a * b).is_zero()) return "a=" + render(a) + " b=" + render(b);
    }
    return std::nullopt;
  });

  s.check("graded-homogeneity", "products of homogeneous elements are homogeneous", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < s.budget(); ++i) {
      const auto da = static_cast<std::uint32_t>(uniform(rng, 0, 3));
      const auto db = static_cast<std::uint32_t>(uniform(rng, 0, 3));
      const auto a = random_homogeneous(rng, B, n, da), b = random_homogeneous(rng, B, n, db);
      const auto p = a * b;
      if (!is_homogeneous(p) || graded_degree(p) != da + db) return "a=" + render(a) + " b=" + render(b);
    }
    return std::nullopt;
  });

  s.check("z-central", "z is central", [&](Rng&) -> Witness {
    const auto z = AlgebraElement::generator(B, n, Generator::z());
    for (const auto& g : generators_of(B, n))
      if (!commutator(z, AlgebraElement::generator(B, n, g)).is_zero()) return "[z, " + to_string(g) + "] != 0";
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- center

inline void run_center(SuiteRunner& s) {
  const std::size_t n = s.n();
  const std::uint32_t max_degree = n <= 2 ? 5 : 3;
  s.check("center-is-polynomial-in-z", "center of B_n is K[z]", [&](Rng&) -> Witness {
    std::vector<std::size_t> dims;
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
      const auto basis = centralizer_in_degree(AlgebraKind::B, n, d);
      dims.push_back(basis.size());
      if (basis.size() != 1) return "degree " + std::to_string(d) + ": centralizer dimension " + std::to_string(basis.size());
      const auto& b = basis.front();
      PBWMonomial zd = PBWMonomial::one(n);
      zd.z = d;
      if (b.size() != 1 || b.terms().begin()->first != zd)
        return "degree " + std::to_string(d) + ": centralizer spanned by " + render(b);
    }
    s.data()["centralizer_dims"] = dims;
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- dual-orthogonality

inline void run_dual_orthogonality(SuiteRunner& s) {
  const std::size_t n = s.n();
  const auto relations = relations_of(AlgebraKind::B, n);
  const std::size_t m = relations.generators.size();

  s.check("relation-count", "B_n has 2n^2+n independent quadratic relations", [&](Rng&) -> Witness {
    if (relations.relations.size() != 2 * n * n + n)
      return "found " + std::to_string(relations.relations.size()) + " relations";
    validate(relations);
    return std::nullopt;
  });

  const auto dual = orthogonal_complement(relations);
  s.data()["relations"] = relations.relations.size();
  s.data()["dual_relations"] = dual.basis.size();

  s.check("dual-orthogonality", "dual relations annihilate the relations of B_n",
          [&](Rng&) -> Witness {
            for (const auto& r : relations.relations)
              for (const auto& d : dual.basis)
                if (!is_zero(pairing(r, d)))
                  return render_relation(r, relations.generators) + " vs " + render_relation(d, dual.generators);
            return std::nullopt;
          });

  s.check("rank-nullity", "dim R^perp = 2n^2+3n+1", [&](Rng&) -> Witness {
    if (dual.basis.size() != 2 * n * n + 3 * n + 1 || relations.relations.size() + dual.basis.size() != m * m)
      return "dim R^perp = " + std::to_string(dual.basis.size());
    return std::nullopt;
  });

  s.check("complement-involution", "(R^perp)^perp = R",
          [&](Rng&) -> Witness {
            const auto back = orthogonal_complement(as_presentation(dual, AlgebraKind::BShriek, n));
            if (!spans_equal(back.basis, relations.relations, m)) return std::string("(R^perp)^perp != R");
            return std::nullopt;
          });

  s.check("dual-presentation", "squares, anticommutators and sum x_i d_i + z^2 span R^perp", [&](Rng&) -> Witness {
    const auto readable = dual_presentation(AlgebraKind::B, n);
    if (!spans_equal(readable.relations, dual.basis, m))
      return std::string("readable presentation does not span the computed complement");
    return std::nullopt;
  });

  s.check("c-dual-exterior", "dual of C_n is exterior", [&](Rng&) -> Witness {
    const auto c_rel = relations_of(AlgebraKind::C, n);
    const auto c_dual = orthogonal_complement(c_rel);
    if (!spans_equal(dual_presentation(AlgebraKind::C, n).relations, c_dual.basis, m))
      return std::string("exterior relations do not span the complement of the commutators");
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- shriek-dims

inline void run_shriek_dims(SuiteRunner& s) {
  const std::size_t n = s.n();
  std::vector<std::size_t> dims(2 * n + 2, 0);
  for (const auto& w : shriek_basis(n)) ++dims[w.degree()];
  s.data()["dims"] = dims;

  s.check("shriek-critical-pairs", "square-free words form a basis of B_n^!",
          [&](Rng&) -> Witness {
            const ShriekRewritingSystem system(n);
            if (auto bad = unresolved_overlap(system, generators_of(AlgebraKind::BShriek, n)))
              return "overlap " + word_text(*bad) + " does not resolve";
            return std::nullopt;
          });

  s.check("quantum-pbw", "anticommuting polynomial rules are confluent",
          [&](Rng&) -> Witness {
            std::vector<Generator> alphabet;
            for (std::uint32_t i = 1; i <= 2 * n + 1; ++i) alphabet.push_back(Generator::x(i));
            if (auto bad = unresolved_overlap(QuantumPolynomialSystem{}, alphabet))
              return "overlap " + word_text(*bad) + " does not resolve";
            return std::nullopt;
          });

  s.check("shriek-dims-binomial", "dim (B_n^!)_j = C(2n,j) + C(2n,j-1)", [&](Rng&) -> Witness {
    std::size_t total = 0;
    for (std::uint32_t j = 0; j <= 2 * n + 1; ++j) {
      const Rational expected = binomial(2 * n, j) + (j > 0 ? binomial(2 * n, j - 1) : Rational(0));
      if (Rational(static_cast<unsigned long>(dims[j])) != expected) return "dims " + join_numbers(dims);
      total += dims[j];
    }
    if (total != (std::size_t{1} << (2 * n + 1))) return "total dimension " + std::to_string(total);
    return std::nullopt;
  });

  s.check("shriek-dims-palindrome", "dim (B_n^!)_j = dim (B_n^!)_(2n+1-j)", [&](Rng&) -> Witness {
    for (std::size_t j = 0; j < dims.size(); ++j)
      if (dims[j] != dims[dims.size() - 1 - j]) return "dims " + join_numbers(dims);
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- frobenius

inline void run_frobenius(SuiteRunner& s) {
  const std::size_t n = s.n();
  const auto& algebra = shriek_algebra(n);
  const auto& basis = algebra.basis();
  const auto elem = [n](const ShriekWord& w) { return ShriekElement::basis(n, w); };

  s.check("gram-invertible", "Frobenius form is nondegenerate", [&](Rng&) -> Witness {
    OrderedJson dets = OrderedJson::array();
    for (std::uint32_t j = 0; j <= 2 * n + 1; ++j) {
      const auto g = gram_matrix(n, j);
      if (g.rows() != g.cols()) return "Gram matrix of degree " + std::to_string(j) + " is not square";
      const auto det = determinant(g);
      if (is_zero(det)) return "Gram matrix of degree " + std::to_string(j) + " is singular";
      dets.push_back(to_fraction_string(det));
    }
    s.data()["gram_determinants"] = std::move(dets);
    return std::nullopt;
  });

  s.check("beta-associative", "beta(ab, c) = beta(a, bc)", [&](Rng& rng) -> Witness {
    auto test = [&](const ShriekElement& a, const ShriekElement& b, const ShriekElement& c) -> Witness {
      if (bilinear_form(a * b, c) != bilinear_form(a, b * c))
        return "a=" + render(a) + " b=" + render(b) + " c=" + render(c);
      return std::nullopt;
    };
    if (n == 1) {
      for (const auto& a : basis)
        for (const auto& b : basis)
          for (const auto& c : basis)
            if (auto w = test(elem(a), elem(b), elem(c))) return w;
    } else {
      for (std::size_t i = 0; i < s.budget(); ++i)
        if (auto w = test(random_shriek(rng, n), random_shriek(rng, n), random_shriek(rng, n))) return w;
    }
    return std::nullopt;
  });

  s.check("shriek-associativity", "associativity of B_n^!", [&](Rng& rng) -> Witness {
    auto test = [&](const ShriekElement& a, const ShriekElement& b, const ShriekElement& c) -> Witness {
      if ((a * b) * c != a * (b * c)) return "a=" + render(a) + " b=" + render(b) + " c=" + render(c);
      return std::nullopt;
    };
    if (n == 1) {
      for (const auto& a : basis)
        for (const auto& b : basis)
          for (const auto& c : basis)
            if (auto w = test(elem(a), elem(b), elem(c))) return w;
    } else {
      for (std::size_t i = 0; i < s.budget(); ++i)
        if (auto w = test(random_shriek(rng, n), random_shriek(rng, n), random_shriek(rng, n))) return w;
    }
    return std::nullopt;
  });

  s.check("shriek-confluence-random", "B_n^! normal form is independent of rewriting order", [&](Rng& rng) -> Witness {
    const auto gens = generators_of(AlgebraKind::BShriek, n);
    for (std::size_t i = 0; i < s.budget(); ++i) {
      const auto w = random_word(rng, gens, 6);
      const auto canonical = reduce_word(w, n);
      const auto shuffled = reduce_word_randomized(w, n, rng);
      if (canonical != shuffled) return word_text(w) + ": " + render(canonical) + " vs " + render(shuffled);
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- nakayama

inline void run_nakayama(SuiteRunner& s) {
  const std::size_t n = s.n();
  const auto& basis = shriek_algebra(n).basis();
  const auto elem = [n](const ShriekWord& w) { return ShriekElement::basis(n, w); };
  const auto sigma = nakayama(n);

  OrderedJson images = OrderedJson::object();
  for (const auto& g : generators_of(AlgebraKind::BShriek, n)) images[to_string(g)] = render(sigma.image(g));
  s.data()["sigma"] = std::move(images);
  if (const auto k = sigma.z_scalar()) s.data()["k"] = to_fraction_string(*k);

  s.check("nakayama-defining-identity", "beta(sigma(y), x) = beta(x, y)",
          [&](Rng&) -> Witness {
            for (const auto& x : basis)
              for (const auto& y : basis)
                if (bilinear_form(apply_automorphism(sigma, elem(y)), elem(x)) != bilinear_form(elem(x), elem(y)))
                  return "x=" + render(elem(x)) + " y=" + render(elem(y));
            return std::nullopt;
          });

  s.check("nakayama-multiplicative", "sigma(y1 y2) = sigma(y1) sigma(y2)", [&](Rng& rng) -> Witness {
    auto test = [&](const ShriekElement& u, const ShriekElement& v) -> Witness {
      if (apply_automorphism(sigma, u * v) != apply_automorphism(sigma, u) * apply_automorphism(sigma, v))
        return "u=" + render(u) + " v=" + render(v);
      return std::nullopt;
    };
    for (const auto& u : basis)
      for (const auto& v : basis)
        if (auto w = test(elem(u), elem(v))) return w;
    if (n > 1)
      for (std::size_t i = 0; i < s.budget(); ++i)
        if (auto w = test(random_shriek(rng, n), random_shriek(rng, n))) return w;
    return std::nullopt;
  });

  s.check("nakayama-graded-bijective", "sigma is graded and bijective", [&](Rng&) -> Witness {
    for (const auto& g : generators_of(AlgebraKind::BShriek, n))
      for (const auto& [w, c] : sigma.image(g).terms())
        if (w.degree() != 1) return "sigma(" + to_string(g) + ") is not of degree 1";
    for (std::uint32_t j = 0; j <= 2 * n + 1; ++j) {
      const auto m = automorphism_matrix(sigma, j);
      if (rank(m) != m.rows()) return "sigma is singular in degree " + std::to_string(j);
    }
    return std::nullopt;
  });

  s.check("sigma-z-scalar", "sigma(z) = k z, k != 0", [&](Rng&) -> Witness {
    const auto k = sigma.z_scalar();
    if (!k || is_zero(*k)) return "sigma(z) = " + render(sigma.image(Generator::z()));
    return std::nullopt;
  });

  s.check("sigma-restricts-to-c", "sigma preserves C_n^!", [&](Rng&) -> Witness {
    for (const auto& g : generators_of(AlgebraKind::BShriek, n)) {
      if (g.is_z()) continue;
      if (!in_c_subalgebra(sigma.image(g))) return "sigma(" + to_string(g) + ") = " + render(sigma.image(g));
    }
    return std::nullopt;
  });

  s.check("golden-regression", "recorded dimensions, Gram determinants and Nakayama map", [&](Rng&) -> Witness {
    const auto path = golden_file(s.options());
    const auto record = shriek_golden_record(n);
    if (s.options().bless) {
      std::filesystem::create_directories(path.parent_path());
      std::ofstream out(path);
      if (!out) return "cannot write " + path.string();
      out << record.dump(2) << "\n";
      s.data()["blessed"] = path.string();
      return std::nullopt;
    }
    std::ifstream in(path);
    if (!in) return "missing golden file " + path.string() + " (run with --bless)";
    const auto stored = OrderedJson::parse(in);
    if (stored != record) return "golden mismatch: stored " + stored.dump() + ", computed " + record.dump();
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- decomposition

inline void run_decomposition(SuiteRunner& s) {
  const std::size_t n = s.n();
  const auto& basis = shriek_algebra(n).basis();
  const auto elem = [n](const ShriekWord& w) { return ShriekElement::basis(n, w); };
  std::vector<ShriekWord> c_words, z_words;
  for (const auto& w : basis) (w.z ? z_words : c_words).push_back(w);

  s.check("decomposition-sum", "B_n^! = C_n^! + z C_n^!, idempotent projections", [&](Rng& rng) -> Witness {
    std::vector<ShriekElement> samples;
    for (const auto& w : basis) samples.push_back(elem(w));
    for (std::size_t i = 0; i < s.budget(); ++i) samples.push_back(random_shriek(rng, n, 8));
    for (const auto& e : samples) {
      const auto [c, z] = decompose(e);
      if (c + z != e) return "parts do not sum back for " + render(e);
      if (decompose(c).c_part != c || !decompose(c).z_part.is_zero() || decompose(z).z_part != z ||
          !decompose(z).c_part.is_zero())
        return "projection not idempotent on " + render(e);
    }
    return std::nullopt;
  });

  s.check("c-subalgebra-closed", "C_n^! is closed under products", [&](Rng&) -> Witness {
    for (const auto& u : c_words)
      for (const auto& v : c_words)
        if (!in_c_subalgebra(elem(u) * elem(v))) return render(elem(u)) + " * " + render(elem(v));
    return std::nullopt;
  });

  s.check("free-rank-two", "B_n^! is free of rank two over C_n^!",
          [&](Rng&) -> Witness {
            const std::size_t half = std::size_t{1} << (2 * n);
            if (c_words.size() != half || z_words.size() != half)
              return "part dimensions " + std::to_string(c_words.size()) + " and " + std::to_string(z_words.size());
            // Left multiplication by z sends the C-basis to the z-basis up to sign.
            const auto z = ShriekElement::generator(n, Generator::z());
            std::set<std::size_t> hit;
            for (const auto& w : c_words) {
              const auto p = z * elem(w);
              ShriekWord target = w;
              target.z = true;
              if (p.terms().size() != 1 || p.terms().begin()->first != target || abs(p.terms().begin()->second) != 1)
                return "z * " + render(elem(w)) + " = " + render(p);
              hit.insert(shriek_algebra(n).index_of(target));
            }
            if (hit.size() != half) return std::string("z * C_n^! does not cover the z-words");
            return std::nullopt;
          });

  s.check("zc-module-closure", "z C_n^! is a left C_n^!-submodule", [&](Rng&) -> Witness {
    for (const auto& u : c_words)
      for (const auto& v : z_words)
        if (!decompose(elem(u) * elem(v)).c_part.is_zero()) return render(elem(u)) + " * " + render(elem(v));
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- localization

inline void run_localization(SuiteRunner& s) {
  const std::size_t n = s.n();
  const auto B = AlgebraKind::B;
  const auto A = AlgebraKind::A;
  const auto zminus1 = z_power(n, 1) - AlgebraElement::one(B, n);
  const std::size_t samples = s.budget();

  s.check("fraction-laws", "fractions b / z^k are well defined", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < samples; ++i) {
      const auto a = LocalizedElement::make(random_element(rng, B, n), static_cast<std::uint32_t>(uniform(rng, 0, 3)));
      const auto b = LocalizedElement::make(random_element(rng, B, n), static_cast<std::uint32_t>(uniform(rng, 0, 3)));
      const auto j = static_cast<std::uint32_t>(uniform(rng, 1, 3));
      // Same class, different representative: multiply numerator and denominator by Z^j.
      const auto a2 = LocalizedElement::make(z_power(n, j) * a.numerator(), a.z_power() + j);
      if (!loc_equals(a, a) || !loc_equals(a, a2) || !loc_equals(a2, a)) return "equality fails on " + render(a);
      if (loc_equals(a, b) != loc_equals(b, a)) return "equality not symmetric";
      if (!loc_equals(loc_add(a, b), loc_add(a2, b)) || !loc_equals(loc_multiply(a, b), loc_multiply(a2, b)))
        return "operations depend on representative of " + render(a);
      if (loc_add(a, b) != loc_add(b, a)) return "addition not commutative";
    }
    return std::nullopt;
  });

  s.check("dehomogenize-homomorphism", "setting z = 1 is a ring map B_n -> A_n",
          [&](Rng& rng) -> Witness {
            for (std::size_t i = 0; i < samples; ++i) {
              const auto a = random_element(rng, B, n), b = random_element(rng, B, n);
              if (dehomogenize(a * b) != dehomogenize(a) * dehomogenize(b))
                return "a=" + render(a) + " b=" + render(b);
              if (dehomogenize(a + b) != dehomogenize(a) + dehomogenize(b)) return "not additive";
            }
            return std::nullopt;
          });

  s.check("dehomogenize-kernel", "kernel of z -> 1 is (z-1) B_n", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < samples; ++i) {
      const auto b = zminus1 * random_element(rng, B, n);
      const auto w = kernel_witness(b);
      if (!w || zminus1 * *w != b) return "no witness for " + render(b);
      const auto other = random_element(rng, B, n);
      if (kernel_witness(other).has_value() != dehomogenize(other).is_zero())
        return "witness mismatch for " + render(other);
    }
    return std::nullopt;
  });

  s.check("theta-isomorphism", "theta: ((B_n)_z)_0 -> A_n is a ring isomorphism", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < samples; ++i) {
      const auto a = random_element(rng, A, n, 6);
      if (theta(theta_inverse(a)) != a) return "round trip fails for " + render(a);
      const auto b = random_element(rng, A, n, 3);
      const auto e = theta_inverse(a), f = theta_inverse(b);
      if (theta(loc_multiply(e, f)) != a * b) return "not multiplicative on " + render(a) + ", " + render(b);
      if (theta(loc_add(e, f)) != a + b) return "not additive on " + render(a) + ", " + render(b);
    }
    return std::nullopt;
  });

  s.check("mu-graded-isomorphism", "mu: A_n[z, z^-1] -> (B_n)_z is a graded ring map", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < samples; ++i) {
      const auto a = random_element(rng, A, n), b = random_element(rng, A, n);
      const auto s1 = static_cast<std::int64_t>(uniform(rng, 0, 6)) - 3;
      const auto t1 = static_cast<std::int64_t>(uniform(rng, 0, 6)) - 3;
      if (loc_multiply(mu(a, s1), mu(b, t1)) != mu(a * b, s1 + t1))
        return "mu(a,s) mu(b,t) != mu(ab, s+t) for a=" + render(a) + " b=" + render(b);
      if (mu(a, s1).degree() != s1) return "mu(a, s) has the wrong degree";
      if (theta(mu(a, 0)) != a) return "mu(a, 0) is not theta^-1(a)";
    }
    return std::nullopt;
  });

  s.check("no-z-torsion", "B_n has no z-torsion", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < samples; ++i) {
      const auto b = random_element(rng, B, n);
      const auto k = static_cast<std::uint32_t>(uniform(rng, 1, 4));
      const auto zb = z_power(n, k) * b;
      if (zb.is_zero()) return "Z^" + std::to_string(k) + " kills " + render(b);
      auto back = zb;
      for (std::uint32_t e = 0; e < k; ++e) back = divide_by_z(back);
      if (back != b) return "Z-division does not invert multiplication on " + render(b);
    }
    return std::nullopt;
  });

  s.check("localized-degree-additivity", "degrees add in (B_n)_z", [&](Rng& rng) -> Witness {
    for (std::size_t i = 0; i < samples; ++i) {
      const auto da = static_cast<std::uint32_t>(uniform(rng, 0, 3)), db = static_cast<std::uint32_t>(uniform(rng, 0, 3));
      const auto e = LocalizedElement::make(random_homogeneous(rng, B, n, da), static_cast<std::uint32_t>(uniform(rng, 0, 4)));
      const auto f = LocalizedElement::make(random_homogeneous(rng, B, n, db), static_cast<std::uint32_t>(uniform(rng, 0, 4)));
      if (loc_multiply(e, f).degree() != e.degree() + f.degree())
        return "e=" + render(e) + " f=" + render(f);
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- roundtrip

inline void run_roundtrip(SuiteRunner& s) {
  const std::size_t n = s.n();
  s.check("parse-render-roundtrip", "text frontend reproduces canonical elements", [&](Rng& rng) -> Witness {
    for (AlgebraKind kind : {AlgebraKind::A, AlgebraKind::B, AlgebraKind::C}) {
      for (std::size_t i = 0; i < s.budget(); ++i) {
        const auto e = random_element(rng, kind, n);
        const auto text = render(e);
        if (normal_form(parse(text, n, kind), kind, n) != e) return std::string(to_string(kind)) + ": " + text;
      }
    }
    if (n <= 2) {
      for (std::size_t i = 0; i < s.budget(); ++i) {
        const auto e = random_shriek(rng, n);
        const auto text = render(e);
        if (reduce_shriek(parse(text, n, AlgebraKind::BShriek), n) != e) return "B!: " + text;
      }
    }
    return std::nullopt;
  });

  s.check("render-injective", "distinct canonical elements render differently", [&](Rng& rng) -> Witness {
    std::map<std::string, AlgebraElement> seen;
    for (std::size_t i = 0; i < s.budget(); ++i) {
      const auto e = random_element(rng, AlgebraKind::B, n, 2, 2, 1);
      for (auto format : {Format::Text, Format::Json}) {
        const auto text = render(e, format);
        auto [it, inserted] = seen.try_emplace(text, e);
        if (!inserted && it->second != e) return "collision on " + text;
      }
    }
    return std::nullopt;
  });
}

}  // namespace detail

/// Runs the named suite. Throws UnknownSuite or UnsupportedN.
inline SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UnknownSuite("unknown suite '" + std::string(name) + "'");
  if (opts.n < 1 || opts.n > max_n_for_suite(name))
    throw UnsupportedN("suite " + std::string(name) + " supports 1 <= n <= " + std::to_string(max_n_for_suite(name)));

  SuiteReport report;
  report.suite_name = std::string(name);
  report.n_range = {opts.n};
  report.seed = opts.seed;
  report.budget = opts.budget;
  detail::SuiteRunner runner(report, opts);
  if (name == "pbw-laws") detail::run_pbw_laws(runner);
  else if (name == "center") detail::run_center(runner);
  else if (name == "dual-orthogonality") detail::run_dual_orthogonality(runner);
  else if (name == "shriek-dims") detail::run_shriek_dims(runner);
  else if (name == "frobenius") detail::run_frobenius(runner);
  else if (name == "nakayama") detail::run_nakayama(runner);
  else if (name == "decomposition") detail::run_decomposition(runner);
  else if (name == "localization") detail::run_localization(runner);
  else detail::run_roundtrip(runner);
  return report;
}

/// JSON form of a report. Timings are left out unless asked for, so that the
/// default output is byte-identical across runs.
inline OrderedJson to_json(const SuiteReport& r, bool include_timing = false) {
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : r.checks) {
    OrderedJson j;
    j["claimId"] = c.claim_id;
    j["anchor"] = c.anchor;
    j["status"] = c.passed ? "pass" : "fail";
    j["witness"] = c.witness ? OrderedJson(*c.witness) : OrderedJson(nullptr);
    if (include_timing) j["elapsedMillis"] = c.elapsed_millis;
    checks.push_back(std::move(j));
  }
  OrderedJson out;
  out["suiteName"] = r.suite_name;
  out["nRange"] = r.n_range;
  out["seed"] = r.seed;
  out["budget"] = r.budget;
  out["status"] = r.passed() ? "pass" : "fail";
  out["checks"] = std::move(checks);
  out["data"] = r.data;
  return out;
}

inline std::string render_report(const SuiteReport& r, bool include_timing = false) {
  std::ostringstream out;
  out << "suite " << r.suite_name << " (n = " << detail::join_numbers(r.n_range) << ", seed = " << r.seed
      << ", budget = " << r.budget << ")\n";
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.claim_id << "  [" << c.anchor << "]";
    if (include_timing) out << "  " << c.elapsed_millis << " ms";
    out << "\n";
    if (c.witness) out << "        witness: " << *c.witness << "\n";
    passed += c.passed ? 1 : 0;
  }
  for (const auto& [key, value] : r.data.items())
    out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size() << ")\n";
  return out.str();
}

}  // namespace weylkit
