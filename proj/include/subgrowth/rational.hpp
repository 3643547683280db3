#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

#include "subgrowth/error.hpp"

namespace subgrowth {

using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms.
template <std::integral A, std::integral B = long>
inline Rational make_rational(A num, B den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

/// `a/b`, or just `a` for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses `a/b` or `a`; the result is canonical.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace subgrowth
