#include "nu2sigma/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "nu2sigma/natural.hpp"

namespace nu2sigma {
namespace {

void check_budget(const Natural& n, std::uint64_t k,
                  const OracleOptions& options) {
  std::uint64_t digits = mpz_sizeinbase(n.get_mpz_t(), 10);
  if (k > options.digit_budget || k * digits > options.digit_budget)
    throw budget_exceeded_error(
        "sigma_k budget exceeded; raise the digit budget or reduce k");
}

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> ks) {
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

/// Least t with p^t >= target; the exact value of ceil(log_p target).
std::uint64_t ceil_log_p(const Natural& p, const Natural& target) {
  std::uint64_t t = 0;
  Natural acc = 1;
  while (acc < target) {
    acc *= p;
    ++t;
  }
  return t;
}

}  // namespace

Natural sigma_k_exact(const Factorization& f, std::uint64_t k,
                      const OracleOptions& options) {
  if (k == 0) throw std::invalid_argument("sigma_k_exact: k must be >= 1");
  check_budget(f.value(), k, options);

  const auto& parts = f.factors();
  std::vector<Natural> reset_divisors;
  reset_divisors.reserve(parts.size());
  for (const auto& pp : parts)
    reset_divisors.push_back(pow_ui(pp.prime, pp.exponent));

  std::vector<std::uint64_t> exponents(parts.size(), 0);
  Natural divisor = 1;
  Natural sum = 0;
  Natural term;
  for (;;) {
    mpz_pow_ui(term.get_mpz_t(), divisor.get_mpz_t(), k);
    sum += term;
    std::size_t i = 0;
    while (i < parts.size()) {
      if (exponents[i] < parts[i].exponent) {
        ++exponents[i];
        divisor *= parts[i].prime;
        break;
      }
      exponents[i] = 0;
      mpz_divexact(divisor.get_mpz_t(), divisor.get_mpz_t(),
                   reset_divisors[i].get_mpz_t());
      ++i;
    }
    if (i == parts.size()) break;
  }
  return sum;
}

Natural sigma_k_exact(const Natural& n, std::uint64_t k,
                      const OracleOptions& options) {
  return sigma_k_exact(factorize(n, options.factor), k, options);
}

OracleReport verify_closed_form(const Natural& n_max,
                                const std::vector<std::uint64_t>& k_set,
                                const OracleOptions& options) {
  OracleReport report;
  report.range = "2.." + to_decimal(n_max);
  report.k_set = sorted_unique(k_set);

  std::vector<OrderK> orders;
  orders.reserve(report.k_set.size());
  for (std::uint64_t k : report.k_set) orders.emplace_back(Natural(k));

  const Natural two = 2;
  for (Natural n = 2; n <= n_max; ++n) {
    Factorization f = factorize(n, options.factor);
    for (std::size_t i = 0; i < report.k_set.size(); ++i) {
      std::uint64_t k = report.k_set[i];
      Valuation closed = nu2_sigma(f, orders[i]).total;
      Valuation observed = nu_p(two, sigma_k_exact(f, k, options));
      if (closed != observed)
        report.mismatches.push_back({n, k, closed, observed});
      ++report.checked_count;
    }
  }
  return report;
}

OracleReport verify_general_p_bound(const Natural& p, const Natural& n_max,
                                    const std::vector<std::uint64_t>& k_set,
                                    const OracleOptions& options) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument(
        "verify_general_p_bound: p must be an odd prime");

  OracleReport report;
  report.range = "p=" + to_decimal(p) + ", 2.." + to_decimal(n_max);
  report.k_set = sorted_unique(k_set);

  Natural n_to_k;
  for (Natural n = 2; n <= n_max; ++n) {
    Factorization f = factorize(n, options.factor);
    for (std::uint64_t k : report.k_set) {
      if (k == 0) throw std::invalid_argument("verify: k must be >= 1");
      Valuation observed = nu_p(p, sigma_k_exact(f, k, options));
      mpz_pow_ui(n_to_k.get_mpz_t(), n.get_mpz_t(), k);
      std::uint64_t bound = ceil_log_p(p, n_to_k);
      if (observed > bound) report.mismatches.push_back({n, k, bound, observed});
      ++report.checked_count;
    }
  }
  return report;
}

}  // namespace nu2sigma
