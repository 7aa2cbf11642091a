#ifndef NU2SIGMA_VALUATION_HPP
#define NU2SIGMA_VALUATION_HPP

#include <cstdint>
#include <vector>

#include "nu2sigma/factor.hpp"
#include "nu2sigma/natural.hpp"

namespace nu2sigma {

/// p-adic valuation: the exponent of p in a nonzero integer.
using Valuation = std::uint64_t;

enum class Parity { even, odd };

/// Order of the divisor sum sigma_k. k may be arbitrarily large; the closed
/// forms consume only its parity, which is the reason huge k costs nothing.
class OrderK {
public:
  /// Throws std::invalid_argument unless k >= 1 (sigma_0 counts divisors and
  /// is outside this library's scope).
  explicit OrderK(Natural k);

  const Natural& value() const { return k_; }
  Parity parity() const { return parity_; }
  bool is_odd() const { return parity_ == Parity::odd; }

private:
  Natural k_;
  Parity parity_;
};

/// One summand of the closed form: what the prime power p^exponent
/// contributes to nu_2(sigma_k(n)). Zero whenever the exponent is even.
struct Contribution {
  Natural prime;
  std::uint64_t exponent = 0;
  Valuation value = 0;

  friend bool operator==(const Contribution&, const Contribution&) = default;
};

struct ValuationBreakdown {
  Valuation total = 0;
  /// One entry per odd prime factor of n, in ascending prime order,
  /// including explicit zeros for even exponents.
  std::vector<Contribution> contributions;
  /// Exponent of 2 in n; contributes nothing to the total.
  std::uint64_t power_of_two_exponent = 0;
};

/// nu_p(m): largest a with p^a | m. Errors if m == 0 (the valuation would be
/// infinite) or p is not prime.
Valuation nu_p(const Natural& p, const Natural& m);

/// nu_p(A^m - 1) for odd prime p with p | A - 1, evaluated as
/// nu_p(A-1) + nu_p(m) without forming A^m.
Valuation lte_odd(const Natural& p, const Natural& a, const Natural& m);

/// nu_2(A^m - 1) for odd A >= 3: nu_2(A-1) when m is odd, otherwise
/// nu_2(A-1) + nu_2(A+1) + nu_2(m) - 1. A is never squared, so huge A is
/// cheap.
Valuation lte_two(const Natural& a, const Natural& m);

/// nu_2(p^k + 1) for an odd prime p: nu_2(p+1) when k is odd, 1 when k is
/// even. p^k is never formed.
Valuation nu2_pk_plus_one(const Natural& p, const OrderK& k);

/// nu_2(sigma_k(p^alpha)) in closed form: 0 for p = 2 or even alpha,
/// nu_2(alpha+1) + nu_2(p^k+1) - 1 for odd alpha.
Valuation nu2_sigma_prime_power(const Natural& p, std::uint64_t alpha,
                                const OrderK& k);

/// nu_2(sigma_k(n)) assembled over the factorization of n, with per-prime
/// contributions. Never forms sigma_k(n) or any p^k.
ValuationBreakdown nu2_sigma(const Factorization& f, const OrderK& k);

}  // namespace nu2sigma

#endif
