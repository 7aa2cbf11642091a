#ifndef NU2SIGMA_FACTOR_HPP
#define NU2SIGMA_FACTOR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nu2sigma/natural.hpp"

namespace nu2sigma {

struct PrimePower {
  Natural prime;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition of a positive integer.
///
/// Invariants, enforced at every construction site: primes strictly
/// increasing, every exponent >= 1, every prime certified by is_prime(), and
/// the product of prime^exponent equals value(). The factor list is empty
/// exactly when value() == 1.
class Factorization {
public:
  /// The factorization of 1 (empty product).
  static Factorization unit();

  /// Builds a factorization from externally supplied factors. Duplicate
  /// primes are merged and the list is sorted; each base must pass
  /// is_prime() and each exponent must be >= 1. The value is materialized
  /// from the factors, so a decomposition whose value would be astronomically
  /// large (beyond ~2^26 bits) is rejected.
  static Factorization from_factors(std::vector<PrimePower> factors);

  const Natural& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  friend bool operator==(const Factorization&, const Factorization&) = default;

private:
  Factorization(Natural value, std::vector<PrimePower> factors)
      : value_(std::move(value)), factors_(std::move(factors)) {}

  friend Factorization factorize(const Natural&, const struct FactorizeOptions&);
  friend struct SplitOddPart split_odd_part(const Factorization&);

  Natural value_;
  std::vector<PrimePower> factors_;
};

struct FactorizeOptions {
  /// Pollard-rho iteration budget for one factorize() call. Trial division
  /// and primality testing are not charged against it. The default completes
  /// every 64-bit input with a wide margin; inputs whose hard cofactors
  /// exceed the budget raise budget_exceeded_error instead of spinning.
  std::uint64_t rho_budget = 1u << 24;
};

/// Primality test. Deterministic (no false results) for n < 2^64 via the
/// 12-prime Miller-Rabin witness set {2,3,...,37}; for larger n, 64
/// Miller-Rabin rounds with bases derived deterministically from n, so the
/// error probability is below 2^-128 and results are reproducible.
bool is_prime(const Natural& n);

/// Canonical factorization of n >= 1: strips powers of two, trial-divides by
/// primes below 2^16, then splits remaining cofactors with Pollard rho
/// (Brent variant), certifying every reported prime. Throws
/// budget_exceeded_error when options.rho_budget runs out first.
Factorization factorize(const Natural& n, const FactorizeOptions& options = {});

struct SplitOddPart {
  std::uint64_t two_exponent = 0;
  Factorization odd_part = Factorization::unit();
};

/// Splits value(f) = 2^a * m with m odd; the odd part keeps f's factor list
/// minus the prime 2.
SplitOddPart split_odd_part(const Factorization& f);

/// Parses an externally supplied factorization in the form
/// "p1^a1 * p2^a2 * ..." (whitespace-insensitive, "^1" optional). The
/// literal "1" denotes the empty product. Bases are primality-checked,
/// duplicates merged; malformed input or a composite base raises
/// std::invalid_argument.
Factorization parse_factorization(std::string_view text);

/// Renders f in the same "p^a * q" format parse_factorization accepts
/// ("1" for the empty product).
std::string to_string(const Factorization& f);

}  // namespace nu2sigma

#endif
