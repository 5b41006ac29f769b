#pragma once

// Text and JSON output for canonical elements. Terms appear in canonical
// order (degree, Z exponent, X exponents, d exponents); JSON keys appear in
// a fixed order and coefficients are always written "p/q".

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "weylkit/generator.hpp"
#include "weylkit/localization.hpp"
#include "weylkit/pbw.hpp"
#include "weylkit/quadratic_dual.hpp"
#include "weylkit/rational.hpp"
#include "weylkit/shriek.hpp"

namespace weylkit {

enum class Format { Text, Json };

using OrderedJson = nlohmann::ordered_json;

namespace detail {

inline void append_power(std::vector<std::string>& factors, const std::string& name, std::uint32_t e) {
  if (e == 0) return;
  factors.push_back(e == 1 ? name : name + "^" + std::to_string(e));
}

inline std::string join_factors(const std::vector<std::string>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

inline std::string format_term(const Rational& c, const std::string& monomial) {
  if (monomial.empty()) return to_display_string(c);
  if (c == 1) return monomial;
  if (c == -1) return "-" + monomial;
  return to_display_string(c) + "*" + monomial;
}

inline std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].front() == '-') out += " - " + terms[i].substr(1);
    else out += " + " + terms[i];
  }
  return out;
}

}  // namespace detail

inline std::string monomial_text(const PBWMonomial& m) {
  std::vector<std::string> factors;
  detail::append_power(factors, "z", m.z);
  for (std::size_t i = 0; i < m.n(); ++i) detail::append_power(factors, "x" + std::to_string(i + 1), m.x[i]);
  for (std::size_t i = 0; i < m.n(); ++i) detail::append_power(factors, "d" + std::to_string(i + 1), m.d[i]);
  return detail::join_factors(factors);
}

inline std::string word_text(const Word& w) {
  std::vector<std::string> factors;
  for (const auto& g : w) factors.push_back(to_string(g));
  return detail::join_factors(factors);
}

inline OrderedJson to_json(const AlgebraElement& a) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [m, c] : a.terms()) {
    OrderedJson t;
    t["coeff"] = to_fraction_string(c);
    t["z"] = m.z;
    t["x"] = m.x;
    t["d"] = m.d;
    terms.push_back(std::move(t));
  }
  OrderedJson out;
  out["algebra"] = std::string(to_string(a.kind()));
  out["n"] = a.n();
  out["terms"] = std::move(terms);
  return out;
}

inline OrderedJson to_json(const ShriekElement& e, AlgebraKind kind = AlgebraKind::BShriek) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [w, c] : e.terms()) {
    OrderedJson t;
    t["coeff"] = to_fraction_string(c);
    t["z"] = w.z ? 1 : 0;
    std::vector<int> x(e.n()), d(e.n());
    for (std::size_t i = 0; i < e.n(); ++i) {
      x[i] = static_cast<int>(w.x_mask >> i & 1u);
      d[i] = static_cast<int>(w.d_mask >> i & 1u);
    }
    t["x"] = x;
    t["d"] = d;
    terms.push_back(std::move(t));
  }
  OrderedJson out;
  out["algebra"] = std::string(to_string(kind));
  out["n"] = e.n();
  out["terms"] = std::move(terms);
  return out;
}

inline OrderedJson to_json(const LocalizedElement& e) {
  OrderedJson out;
  out["num"] = to_json(e.numerator());
  out["zpow"] = e.z_power();
  return out;
}

inline std::string render(const AlgebraElement& a, Format format = Format::Text) {
  if (format == Format::Json) return to_json(a).dump();
  std::vector<std::string> terms;
  for (const auto& [m, c] : a.terms()) terms.push_back(detail::format_term(c, monomial_text(m)));
  return detail::join_terms(terms);
}

inline std::string render(const ShriekElement& e, Format format = Format::Text,
                          AlgebraKind kind = AlgebraKind::BShriek) {
  if (format == Format::Json) return to_json(e, kind).dump();
  std::vector<std::string> terms;
  for (const auto& [w, c] : e.terms())
    terms.push_back(detail::format_term(c, word_text(reading_word(w, e.n()))));
  return detail::join_terms(terms);
}

inline std::string render(const LocalizedElement& e, Format format = Format::Text) {
  if (format == Format::Json) return to_json(e).dump();
  const auto num = render(e.numerator());
  if (e.z_power() == 0) return num;
  const std::string den = e.z_power() == 1 ? "z" : "z^" + std::to_string(e.z_power());
  return "(" + num + ")/" + den;
}

inline std::string render_relation(const QuadraticRelation& r, const std::vector<Generator>& gens) {
  std::vector<std::string> terms;
  for (const auto& [pair, c] : r)
    terms.push_back(detail::format_term(c, to_string(gens[pair.first]) + "*" + to_string(gens[pair.second])));
  return detail::join_terms(terms);
}

inline OrderedJson to_json(const QuadraticPresentation& p) {
  OrderedJson relations = OrderedJson::array();
  for (const auto& r : p.relations) {
    OrderedJson terms = OrderedJson::array();
    for (const auto& [pair, c] : r) {
      OrderedJson t;
      t["coeff"] = to_fraction_string(c);
      t["word"] = {to_string(p.generators[pair.first]), to_string(p.generators[pair.second])};
      terms.push_back(std::move(t));
    }
    relations.push_back({{"terms", std::move(terms)}});
  }
  OrderedJson out;
  out["algebra"] = std::string(to_string(p.kind));
  out["n"] = p.n;
  out["relations"] = std::move(relations);
  return out;
}

}  // namespace weylkit
