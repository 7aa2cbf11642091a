#include "nu2sigma/valuation.hpp"

#include <bit>
#include <stdexcept>

#include "nu2sigma/natural.hpp"

namespace nu2sigma {
namespace {

Valuation nu2(const Natural& m) {
  return mpz_scan1(m.get_mpz_t(), 0);
}

Valuation nu2_u64_succ(std::uint64_t alpha) {
  std::uint64_t m = alpha + 1;
  if (m == 0) return 64;
  return std::countr_zero(m);
}

// nu_2(p^k + 1) with p already certified odd prime.
Valuation nu2_pk1_unchecked(const Natural& p, const OrderK& k) {
  if (k.is_odd()) return nu2(p + 1);
  return 1;
}

}  // namespace

OrderK::OrderK(Natural k) : k_(std::move(k)) {
  if (k_ < 1) throw std::invalid_argument("order k must be >= 1");
  parity_ = mpz_odd_p(k_.get_mpz_t()) ? Parity::odd : Parity::even;
}

Valuation nu_p(const Natural& p, const Natural& m) {
  if (m == 0) throw std::invalid_argument("nu_p: argument must be nonzero");
  if (!is_prime(p)) throw std::invalid_argument("nu_p: modulus must be prime");
  if (p == 2) return nu2(m);
  Natural rest;
  return mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

Valuation lte_odd(const Natural& p, const Natural& a, const Natural& m) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("lte_odd: p must be an odd prime");
  if (a < 2) throw std::invalid_argument("lte_odd: base must be >= 2");
  if (m < 1) throw std::invalid_argument("lte_odd: exponent must be >= 1");
  Natural a1 = a - 1;
  if (!mpz_divisible_p(a1.get_mpz_t(), p.get_mpz_t()))
    throw std::invalid_argument("lte_odd: p must divide a - 1");
  Natural rest;
  Valuation base = mpz_remove(rest.get_mpz_t(), a1.get_mpz_t(), p.get_mpz_t());
  return base + mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

Valuation lte_two(const Natural& a, const Natural& m) {
  if (a < 3 || mpz_even_p(a.get_mpz_t()))
    throw std::invalid_argument("lte_two: base must be odd and >= 3");
  if (m < 1) throw std::invalid_argument("lte_two: exponent must be >= 1");
  if (mpz_odd_p(m.get_mpz_t())) return nu2(a - 1);
  return nu2(a - 1) + nu2(a + 1) + nu2(m) - 1;
}

Valuation nu2_pk_plus_one(const Natural& p, const OrderK& k) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("nu2_pk_plus_one: p must be an odd prime");
  return nu2_pk1_unchecked(p, k);
}

Valuation nu2_sigma_prime_power(const Natural& p, std::uint64_t alpha,
                                const OrderK& k) {
  if (alpha == 0)
    throw std::invalid_argument("nu2_sigma_prime_power: exponent must be >= 1");
  if (p == 2) return 0;
  if (!is_prime(p))
    throw std::invalid_argument("nu2_sigma_prime_power: p must be prime");
  if (alpha % 2 == 0) return 0;
  return nu2_u64_succ(alpha) + nu2_pk1_unchecked(p, k) - 1;
}

ValuationBreakdown nu2_sigma(const Factorization& f, const OrderK& k) {
  ValuationBreakdown out;
  for (const auto& pp : f.factors()) {
    if (pp.prime == 2) {
      out.power_of_two_exponent = pp.exponent;
      continue;
    }
    Contribution c{pp.prime, pp.exponent, 0};
    if (pp.exponent % 2 != 0)
      c.value = nu2_u64_succ(pp.exponent) + nu2_pk1_unchecked(pp.prime, k) - 1;
    out.total += c.value;
    out.contributions.push_back(std::move(c));
  }
  return out;
}

}  // namespace nu2sigma
