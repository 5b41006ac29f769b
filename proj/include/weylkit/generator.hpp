#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/error.hpp"

namespace weylkit {

/// The algebras the kernel knows about. A, B and C are the Weyl algebra, its
/// homogenization and the commutative polynomial ring; BShriek and CShriek are
/// the quadratic duals of B and C.
enum class AlgebraKind { A, B, C, BShriek, CShriek };

inline std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::A: return "A";
    case AlgebraKind::B: return "B";
    case AlgebraKind::C: return "C";
    case AlgebraKind::BShriek: return "B!";
    case AlgebraKind::CShriek: return "C!";
  }
  return "?";
}

inline AlgebraKind parse_algebra_kind(std::string_view text) {
  if (text == "A" || text == "a") return AlgebraKind::A;
  if (text == "B" || text == "b") return AlgebraKind::B;
  if (text == "C" || text == "c") return AlgebraKind::C;
  if (text == "B!" || text == "b!") return AlgebraKind::BShriek;
  if (text == "C!" || text == "c!") return AlgebraKind::CShriek;
  throw Error("unknown algebra '" + std::string(text) + "' (expected A, B, C, B! or C!)");
}

inline bool is_shriek(AlgebraKind kind) {
  return kind == AlgebraKind::BShriek || kind == AlgebraKind::CShriek;
}

inline bool has_z(AlgebraKind kind) { return kind != AlgebraKind::A; }

enum class GeneratorType : std::uint8_t { X, D, Z };

/// One algebra generator: X_i, delta_i (written d_i) or the central Z.
struct Generator {
  GeneratorType type = GeneratorType::Z;
  std::uint32_t index = 0;  // 1-based for X and D, 0 for Z

  static constexpr Generator x(std::uint32_t i) { return {GeneratorType::X, i}; }
  static constexpr Generator d(std::uint32_t i) { return {GeneratorType::D, i}; }
  static constexpr Generator z() { return {GeneratorType::Z, 0}; }

  bool is_x() const noexcept { return type == GeneratorType::X; }
  bool is_d() const noexcept { return type == GeneratorType::D; }
  bool is_z() const noexcept { return type == GeneratorType::Z; }

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

inline std::string to_string(const Generator& g) {
  switch (g.type) {
    case GeneratorType::X: return "x" + std::to_string(g.index);
    case GeneratorType::D: return "d" + std::to_string(g.index);
    case GeneratorType::Z: return "z";
  }
  return "?";
}

/// Throws unless g is a legal generator of the n-pair algebra of the given kind.
inline void check_generator(const Generator& g, std::size_t n, AlgebraKind kind) {
  if (g.is_z()) {
    if (!has_z(kind)) throw IllegalGenerator("z is not a generator of the Weyl algebra A_n");
    return;
  }
  if (g.index < 1 || g.index > n)
    throw IndexOutOfRange("generator " + to_string(g) + " out of range 1.." + std::to_string(n));
}

/// X_1..X_n, d_1..d_n, then Z when the kind has it.
inline std::vector<Generator> generators_of(AlgebraKind kind, std::size_t n) {
  std::vector<Generator> out;
  for (std::uint32_t i = 1; i <= n; ++i) out.push_back(Generator::x(i));
  for (std::uint32_t i = 1; i <= n; ++i) out.push_back(Generator::d(i));
  if (has_z(kind)) out.push_back(Generator::z());
  return out;
}

}  // namespace weylkit
