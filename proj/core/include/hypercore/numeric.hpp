#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace hypercore {

/// C(n, k) with the zero-outside-Pascal-triangle convention:
/// 0 unless 0 <= k <= n.
inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Falling factorial a(a-1)...(a-k+1); equals a!/(a-k)! for a >= k >= 0
/// and vanishes for 0 <= a < k.
inline mpz_class falling_factorial(long a, long k) {
  if (k < 0) throw std::invalid_argument("falling factorial with k < 0");
  mpz_class r = 1;
  for (long i = 0; i < k; ++i) r *= mpz_class(a - i);
  return r;
}

inline mpz_class int_pow(const mpz_class& base, long e) {
  if (e < 0) throw std::invalid_argument("int_pow with negative exponent");
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

/// -1 to an integer power.
inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace hypercore
