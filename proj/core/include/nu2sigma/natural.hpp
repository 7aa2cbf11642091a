#ifndef NU2SIGMA_NATURAL_HPP
#define NU2SIGMA_NATURAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nu2sigma {

/// Unbounded integer. GMP's mpz_class is signed; every library entry point
/// rejects negative inputs, so values flowing through the library are natural
/// numbers.
using Natural = mpz_class;

/// Thrown when a configured work limit (factorization effort, oracle digit
/// cap) would be exceeded. The caller can raise the limit or, for
/// factorization, supply the factors externally.
class budget_exceeded_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Natural pow_ui(const Natural& base, std::uint64_t exponent) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline bool fits_u64(const Natural& n) {
  return n >= 0 && mpz_fits_ulong_p(n.get_mpz_t()) != 0;
}

inline std::uint64_t to_u64(const Natural& n) {
  return mpz_get_ui(n.get_mpz_t());
}

/// Number of bits in the binary representation of n; requires n >= 1.
inline std::uint64_t bit_length(const Natural& n) {
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline std::string to_decimal(const Natural& n) { return n.get_str(10); }

}  // namespace nu2sigma

#endif
