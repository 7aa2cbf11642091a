#ifndef NU2SIGMA_EXTREMAL_HPP
#define NU2SIGMA_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "nu2sigma/factor.hpp"
#include "nu2sigma/valuation.hpp"

namespace nu2sigma {

/// Thrown when two independent routes to the same fact disagree at runtime
/// (e.g. the numeric equality test gap == 0 versus the structural
/// Mersenne-product test). Indicates a library defect, never bad input.
class consistency_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// floor(log2 n) as bitlength(n) - 1. Exact integer arithmetic; errors on
/// n = 0.
std::uint64_t floor_log2(const Natural& n);

/// ceil(log2 n): equal to floor_log2(n) for powers of two, one more
/// otherwise. Errors on n = 0.
std::uint64_t ceil_log2(const Natural& n);

/// Omega(n): number of prime factors counted with multiplicity.
std::uint64_t big_omega(const Factorization& f);

/// Exponents q (ascending, each >= 2) with n equal to the product of the
/// Mersenne primes 2^q - 1.
struct MersenneDecomposition {
  std::vector<std::uint64_t> exponents;

  friend bool operator==(const MersenneDecomposition&,
                         const MersenneDecomposition&) = default;
};

struct MersenneProduct {
  MersenneDecomposition decomposition;

  friend bool operator==(const MersenneProduct&, const MersenneProduct&) = default;
};
struct ThreeWithEvenK {
  friend bool operator==(const ThreeWithEvenK&, const ThreeWithEvenK&) = default;
};
struct NotExtremal {
  friend bool operator==(const NotExtremal&, const NotExtremal&) = default;
};

/// How n relates to the sharp bound: attains it as a product of distinct
/// Mersenne primes (odd k), attains it as n = 3 (even k), or sits strictly
/// below it.
using EqualityClass = std::variant<NotExtremal, MersenneProduct, ThreeWithEvenK>;

enum class BoundKind { ceiling, floor };

/// nu_2(sigma_k(n)) against the sharp bound ceil(log2 n) (odd k) or
/// floor(log2 n) (even k).
struct BoundReport {
  Natural n;
  Parity k_parity = Parity::odd;
  Valuation valuation = 0;
  BoundKind bound_kind = BoundKind::ceiling;
  std::uint64_t bound_value = 0;
  std::uint64_t gap = 0;
  EqualityClass classification = NotExtremal{};
};

/// Classifies n >= 2 against the sharp bound for the parity of k. The
/// numeric test (gap == 0) and the structural test (Mersenne decomposition
/// exists / n == 3) are both evaluated and cross-checked; disagreement, or a
/// valuation above the bound, raises consistency_error. Errors on
/// value(f) < 2.
BoundReport classify(const Factorization& f, const OrderK& k);

/// True iff 2^q - 1 is prime. q = 2 is answered directly; composite q
/// returns false immediately; otherwise the s_0 = 4, s_{i+1} = s_i^2 - 2
/// recurrence runs modulo 2^q - 1.
bool lucas_lehmer(std::uint64_t q);

struct MersennePrime {
  std::uint64_t exponent = 0;
  Natural value;
};

/// Mersenne primes 2^q - 1 <= limit, ascending, with q capped at
/// max_exponent (desk-scale guard).
std::vector<MersennePrime> mersenne_primes_upto(const Natural& limit,
                                                std::uint64_t max_exponent = 127);

/// The decomposition of value(f) as a product of distinct Mersenne primes,
/// or nullopt when f is not squarefree, not odd, or has a factor not of the
/// form 2^q - 1 with 2^q - 1 prime. Requires value(f) >= 2.
std::optional<MersenneDecomposition> mersenne_decompose(const Factorization& f);

/// All n <= limit expressible as a product of distinct Mersenne primes,
/// ascending. Requires limit >= 2.
std::vector<Natural> enumerate_mersenne_products(const Natural& limit,
                                                 std::uint64_t max_exponent = 127);

}  // namespace nu2sigma

#endif
