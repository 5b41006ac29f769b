#pragma once

// Linear word rewriting with length-two left-hand sides. A system decides
// which adjacent pairs are redexes and what combination of words replaces
// them; the engine drives any such system to normal form and can check local
// confluence on all overlaps.

#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "weylkit/generator.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

/// Sparse linear combination of words in the free algebra.
using Combination = std::map<Word, Rational>;

struct Replacement {
  Rational coeff;
  Word word;
};

template <class S>
concept RewritingSystem = requires(const S& s, const Generator& a, const Generator& b) {
  { s.is_redex(a, b) } -> std::convertible_to<bool>;
  { s.rewrite(a, b) } -> std::convertible_to<std::vector<Replacement>>;
};

inline void accumulate(Combination& into, const Word& w, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = into.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) into.erase(it);
  }
}

template <RewritingSystem S>
std::vector<std::size_t> redex_positions(const S& system, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (system.is_redex(w[i], w[i + 1])) out.push_back(i);
  return out;
}

template <RewritingSystem S>
std::optional<std::size_t> leftmost_redex(const S& system, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (system.is_redex(w[i], w[i + 1])) return i;
  return std::nullopt;
}

template <RewritingSystem S>
bool is_normal_word(const S& system, const Word& w) {
  return !leftmost_redex(system, w).has_value();
}

/// One rewriting step at position pos, scaled by c and added to sink.
template <RewritingSystem S>
void rewrite_at(const S& system, const Word& w, std::size_t pos, const Rational& c,
                Combination& sink) {
  for (const auto& rep : system.rewrite(w[pos], w[pos + 1])) {
    Word next;
    next.reserve(w.size() + rep.word.size());
    next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    next.insert(next.end(), rep.word.begin(), rep.word.end());
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
    accumulate(sink, next, c * rep.coeff);
  }
}

/// Reduces every word to normal form. `choose` picks which redex of a word to
/// contract; it receives the word and must return a redex position.
template <RewritingSystem S, class Chooser>
Combination reduce_with(const S& system, Combination pending, Chooser&& choose) {
  Combination done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational& c = node.mapped();
    if (is_zero(c)) continue;
    if (is_normal_word(system, w)) {
      accumulate(done, w, c);
      continue;
    }
    rewrite_at(system, w, choose(w), c, pending);
  }
  return done;
}

/// Leftmost-redex reduction; the canonical strategy.
template <RewritingSystem S>
Combination reduce(const S& system, Combination input) {
  return reduce_with(system, std::move(input),
                     [&](const Word& w) { return *leftmost_redex(system, w); });
}

/// Contracts a uniformly random redex at every step. Used to test that the
/// normal form does not depend on the order of rule application.
template <RewritingSystem S, class Rng>
Combination reduce_randomized(const S& system, Combination input, Rng& rng) {
  return reduce_with(system, std::move(input), [&](const Word& w) {
    const auto positions = redex_positions(system, w);
    std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
    return positions[pick(rng)];
  });
}

/// Checks every overlap abc where both ab and bc are redexes: contracting
/// either redex first must lead to the same normal form. Returns the first
/// overlap that fails, or nullopt when the system is locally confluent.
/// Together with termination this makes normal forms unique.
template <RewritingSystem S>
std::optional<Word> unresolved_overlap(const S& system, const std::vector<Generator>& alphabet) {
  for (const auto& a : alphabet) {
    for (const auto& b : alphabet) {
      if (!system.is_redex(a, b)) continue;
      for (const auto& c : alphabet) {
        if (!system.is_redex(b, c)) continue;
        const Word w{a, b, c};
        Combination left, right;
        rewrite_at(system, w, 0, Rational(1), left);
        rewrite_at(system, w, 1, Rational(1), right);
        if (reduce(system, std::move(left)) != reduce(system, std::move(right))) return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace weylkit
