#pragma once

// Text frontend: parses expressions such as "3/2*z*x2 - d1*x1" into sums of
// words in the free algebra. Grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)* | '-' term
//   factor := atom ('^' NAT)?
//   atom   := VAR | RATIONAL | '(' expr ')'
//   VAR    := x<i> | d<i> | z          (case-insensitive)
//   RATIONAL := NAT ('/' NAT)?
//
// Multiplication is always explicit; unary minus binds looser than '*'.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/error.hpp"
#include "weylkit/generator.hpp"
#include "weylkit/rational.hpp"
#include "weylkit/rewriting.hpp"

namespace weylkit {

struct FreeTerm {
  Rational coeff;
  Word word;
  friend bool operator==(const FreeTerm&, const FreeTerm&) = default;
};

/// Sum of coefficient-word terms, exactly as written (no merging).
struct FreeExpression {
  std::vector<FreeTerm> terms;

  Combination to_combination() const {
    Combination out;
    for (const auto& t : terms) accumulate(out, t.word, t.coeff);
    return out;
  }
  friend bool operator==(const FreeExpression&, const FreeExpression&) = default;
};

namespace detail {

inline FreeExpression product(const FreeExpression& a, const FreeExpression& b) {
  FreeExpression out;
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& s : a.terms) {
    for (const auto& t : b.terms) {
      Word w = s.word;
      w.insert(w.end(), t.word.begin(), t.word.end());
      out.terms.push_back({s.coeff * t.coeff, std::move(w)});
    }
  }
  return out;
}

inline FreeExpression negated(FreeExpression e) {
  for (auto& t : e.terms) t.coeff = -t.coeff;
  return e;
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t n, AlgebraKind kind)
      : text_(text), n_(n), kind_(kind) {}

  FreeExpression parse() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, {"variable", "number", "(", "-"}, "empty expression");
    FreeExpression e = expr();
    skip_space();
    if (!at_end()) throw SyntaxError(pos_, {"+", "-", "*", "^", "end of input"});
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FreeExpression expr() {
    FreeExpression e = term();
    for (;;) {
      if (accept('+')) {
        auto rhs = term();
        e.terms.insert(e.terms.end(), rhs.terms.begin(), rhs.terms.end());
      } else if (accept('-')) {
        auto rhs = negated(term());
        e.terms.insert(e.terms.end(), rhs.terms.begin(), rhs.terms.end());
      } else {
        return e;
      }
    }
  }

  FreeExpression term() {
    if (accept('-')) return negated(term());
    FreeExpression e = factor();
    while (accept('*')) e = product(e, factor());
    return e;
  }

  FreeExpression factor() {
    FreeExpression base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError(at, {"nonnegative integer exponent"});
    const auto exponent = natural();
    if (!exponent.fits_ulong_p() || exponent > 4096)
      throw SyntaxError(at, {"exponent <= 4096"}, "exponent too large");
    FreeExpression out{{FreeTerm{Rational(1), {}}}};
    for (unsigned long k = 0; k < exponent.get_ui(); ++k) out = product(out, base);
    return out;
  }

  FreeExpression atom() {
    skip_space();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FreeExpression e = expr();
      if (!accept(')')) throw SyntaxError(pos_, {")", "+", "-", "*"});
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num = natural();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw SyntaxError(den_at, {"denominator"});
        den = natural();
        if (den == 0) throw SyntaxError(den_at, {"nonzero denominator"}, "division by zero");
      }
      Rational q(num, den);
      q.canonicalize();
      return FreeExpression{{FreeTerm{q, {}}}};
    }
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == 'z') {
      ++pos_;
      const Generator g = Generator::z();
      check_generator(g, n_, kind_);
      return FreeExpression{{FreeTerm{Rational(1), {g}}}};
    }
    if (lower == 'x' || lower == 'd') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw SyntaxError(pos_, {"variable index"});
      const mpz_class index = natural();
      if (index < 1 || index > static_cast<unsigned long>(n_))
        throw IndexOutOfRange("variable " + std::string(1, lower) + index.get_str() +
                              " at position " + std::to_string(at) + " exceeds n = " +
                              std::to_string(n_));
      const auto i = static_cast<std::uint32_t>(index.get_ui());
      const Generator g = lower == 'x' ? Generator::x(i) : Generator::d(i);
      return FreeExpression{{FreeTerm{Rational(1), {g}}}};
    }
    if (at_end()) throw SyntaxError(at, {"variable", "number", "("}, "unexpected end of input");
    throw SyntaxError(at, {"variable", "number", "("},
                      std::string("unexpected character '") + c + "'");
  }

  mpz_class natural() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t n_;
  AlgebraKind kind_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text into a free-algebra expression for the n-pair algebra of the
/// given kind. Throws SyntaxError, IndexOutOfRange or IllegalGenerator.
inline FreeExpression parse(std::string_view text, std::size_t n, AlgebraKind kind) {
  return detail::ExpressionParser(text, n, kind).parse();
}

}  // namespace weylkit
