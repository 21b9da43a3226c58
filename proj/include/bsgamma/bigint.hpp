#ifndef BSGAMMA_BIGINT_HPP
#define BSGAMMA_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace bsgamma {

// Multiplicities and binomials are non-negative throughout; the signed type
// is needed only for the alternating sums on the right-hand side of identities.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt ipow(long base, unsigned long exponent) {
  BigInt out;
  BigInt b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

inline std::string to_fraction(const BigRational& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

}  // namespace bsgamma

#endif
