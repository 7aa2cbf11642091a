#ifndef NU2SIGMA_ORACLE_HPP
#define NU2SIGMA_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nu2sigma/factor.hpp"
#include "nu2sigma/valuation.hpp"

namespace nu2sigma {

/// Brute-force ground truth, deliberately independent of the closed forms:
/// sigma_k(n) is materialized by summing d^k over the divisors of n, and
/// valuations are extracted from that explicit integer with nu_p. Nothing in
/// this module consults nu2_sigma or the LTE shortcuts, so a bug in the
/// closed-form path cannot hide here.

struct OracleOptions {
  /// Cap on the decimal size of any sigma_k value formed, measured by
  /// k * digits(n). Exceeding it raises budget_exceeded_error rather than
  /// silently grinding through a gigantic integer.
  std::uint64_t digit_budget = 100000;
  /// Factorization effort for the sweep's internal factorize() calls.
  FactorizeOptions factor;
};

/// sigma_k(n) = sum of d^k over divisors d of n, exactly. Divisors are
/// enumerated by mixed-radix iteration over exponent vectors of the
/// factorization, not by trial division.
Natural sigma_k_exact(const Factorization& f, std::uint64_t k,
                      const OracleOptions& options = {});
Natural sigma_k_exact(const Natural& n, std::uint64_t k,
                      const OracleOptions& options = {});

/// One disagreement found by a verification sweep. In closed-form mode the
/// fields hold the two computed valuations; in bound mode closed_form_value
/// holds the proved bound and oracle_value the observed valuation that
/// exceeded it.
struct Mismatch {
  Natural n;
  std::uint64_t k = 0;
  Valuation closed_form_value = 0;
  Valuation oracle_value = 0;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct OracleReport {
  std::string range;
  std::vector<std::uint64_t> k_set;
  std::vector<Mismatch> mismatches;
  std::uint64_t checked_count = 0;

  bool passed() const { return mismatches.empty(); }
};

/// Checks nu2_sigma(factorize(n), k).total == nu_p(2, sigma_k_exact(n, k))
/// for every 2 <= n <= n_max and k in k_set. Mismatches are reported in
/// ascending (n, k) order.
OracleReport verify_closed_form(const Natural& n_max,
                                const std::vector<std::uint64_t>& k_set,
                                const OracleOptions& options = {});

/// Checks nu_p(sigma_k(n)) <= ceil(k * log_p n) for every 2 <= n <= n_max
/// and k in k_set, for an odd prime p. The ceiling is computed exactly as
/// the least t with p^t >= n^k; no floating point is involved.
OracleReport verify_general_p_bound(const Natural& p, const Natural& n_max,
                                    const std::vector<std::uint64_t>& k_set,
                                    const OracleOptions& options = {});

}  // namespace nu2sigma

#endif
