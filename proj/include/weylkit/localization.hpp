#pragma once

// The graded localization (B_n)_Z at the central element Z. Elements are
// fractions b / Z^k with a single right denominator; since Z is central and
// B_n is a domain, fractions compare by cross-multiplication.
//
// dehomogenize: B_n -> A_n sets Z = 1; homogenize is its degree-minimal
// section. theta identifies the degree-zero part of (B_n)_Z with A_n, and
// mu(a, t) = homogenize(a) Z^t / Z^{deg} realizes A_n[Z, Z^-1] = (B_n)_Z.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>

#include "weylkit/error.hpp"
#include "weylkit/pbw.hpp"

namespace weylkit {

/// b / Z^k, canonical: either b = 0 and k = 0, or k = 0, or Z does not divide b.
class LocalizedElement {
 public:
  explicit LocalizedElement(std::size_t n) : numerator_(AlgebraKind::B, n) {}

  /// Strips common Z factors from b / Z^k.
  static LocalizedElement make(AlgebraElement b, std::uint32_t k) {
    if (b.kind() != AlgebraKind::B) throw KindMismatch("localized numerators live in B_n");
    LocalizedElement out(b.n());
    if (b.is_zero()) return out;
    while (k > 0 && z_divides(b)) {
      b = divide_by_z(b);
      --k;
    }
    out.numerator_ = std::move(b);
    out.z_power_ = k;
    return out;
  }

  const AlgebraElement& numerator() const noexcept { return numerator_; }
  std::uint32_t z_power() const noexcept { return z_power_; }
  std::size_t n() const noexcept { return numerator_.n(); }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  bool is_homogeneous() const { return weylkit::is_homogeneous(numerator_); }

  /// deg(numerator) - k for homogeneous nonzero fractions.
  std::int64_t degree() const {
    if (!is_homogeneous()) throw NotDegreeZero("fraction is not homogeneous");
    return static_cast<std::int64_t>(graded_degree(numerator_)) - z_power_;
  }

  friend bool operator==(const LocalizedElement&, const LocalizedElement&) = default;

 private:
  AlgebraElement numerator_;
  std::uint32_t z_power_ = 0;
};

namespace detail {

inline void check_same_n(const LocalizedElement& a, const LocalizedElement& b) {
  if (a.n() != b.n()) throw SizeMismatch("fractions over different B_n");
}

}  // namespace detail

/// a/Z^j = b/Z^k iff Z^k a = Z^j b.
inline bool loc_equals(const LocalizedElement& a, const LocalizedElement& b) {
  detail::check_same_n(a, b);
  return z_power(a.n(), b.z_power()) * a.numerator() == z_power(a.n(), a.z_power()) * b.numerator();
}

inline LocalizedElement loc_add(const LocalizedElement& a, const LocalizedElement& b) {
  detail::check_same_n(a, b);
  const auto common = std::max(a.z_power(), b.z_power());
  auto sum = z_power(a.n(), common - a.z_power()) * a.numerator() +
             z_power(a.n(), common - b.z_power()) * b.numerator();
  return LocalizedElement::make(std::move(sum), common);
}

inline LocalizedElement loc_multiply(const LocalizedElement& a, const LocalizedElement& b) {
  detail::check_same_n(a, b);
  return LocalizedElement::make(a.numerator() * b.numerator(), a.z_power() + b.z_power());
}

/// Sets Z = 1 term by term; PBW monomials of B_n go to PBW monomials of A_n.
inline AlgebraElement dehomogenize(const AlgebraElement& b) {
  if (b.kind() != AlgebraKind::B) throw KindMismatch("dehomogenize expects an element of B_n");
  AlgebraElement out(AlgebraKind::A, b.n());
  for (const auto& [m, c] : b.terms()) {
    PBWMonomial stripped = m;
    stripped.z = 0;
    out.add_term(stripped, c);
  }
  return out;
}

/// For b in the kernel of dehomogenize, the w with (Z - 1) w = b, built from
/// Z^i - 1 = (Z - 1)(Z^{i-1} + .. + Z + 1). nullopt when dehomogenize(b) != 0.
inline std::optional<AlgebraElement> kernel_witness(const AlgebraElement& b) {
  if (!dehomogenize(b).is_zero()) return std::nullopt;
  AlgebraElement w(AlgebraKind::B, b.n());
  for (const auto& [m, c] : b.terms()) {
    PBWMonomial shifted = m;
    for (std::uint32_t e = 0; e < m.z; ++e) {
      shifted.z = e;
      w.add_term(shifted, c);
    }
  }
  return w;
}

/// (b, k) with k the filtration degree of a and b = sum of terms of a padded
/// by Z^{k - deg(term)}; b is homogeneous of degree k and dehomogenizes to a.
inline std::pair<AlgebraElement, std::uint32_t> homogenize(const AlgebraElement& a) {
  if (a.kind() != AlgebraKind::A) throw KindMismatch("homogenize expects an element of A_n");
  AlgebraElement b(AlgebraKind::B, a.n());
  if (a.is_zero()) return {b, 0};
  const auto k = partial_degree(a);
  for (const auto& [m, c] : a.terms()) {
    PBWMonomial padded = m;
    padded.z = k - m.partial_degree();
    b.add_term(padded, c);
  }
  return {b, k};
}

/// Isomorphism from the degree-zero part of (B_n)_Z onto A_n.
inline AlgebraElement theta(const LocalizedElement& e) {
  if (!e.is_zero() && e.degree() != 0) throw NotDegreeZero("theta is defined on degree-zero fractions");
  return dehomogenize(e.numerator());
}

/// Inverse of theta.
inline LocalizedElement theta_inverse(const AlgebraElement& a) {
  auto [b, k] = homogenize(a);
  return LocalizedElement::make(std::move(b), k);
}

/// Image of a (x) Z^t: the degree-t fraction homogenize(a) Z^t / Z^k.
inline LocalizedElement mu(const AlgebraElement& a, std::int64_t t) {
  auto [b, k] = homogenize(a);
  if (t >= 0) return LocalizedElement::make(z_power(a.n(), static_cast<std::uint32_t>(t)) * b, k);
  return LocalizedElement::make(std::move(b), k + static_cast<std::uint32_t>(-t));
}

}  // namespace weylkit
