#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace weylkit {

/// Arbitrary precision rational, always kept in lowest terms.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// "p/q" with q >= 1 always present; the coefficient format of the JSON output.
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_display_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

inline Rational binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

inline Rational factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

}  // namespace weylkit
