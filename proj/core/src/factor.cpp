#include "nu2sigma/factor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace nu2sigma {
namespace {

// Trial division strips everything below 2^16, so Pollard rho only ever sees
// cofactors whose prime factors exceed it.
constexpr std::uint32_t kTrialLimit = 1u << 16;

// Smallest-prime-factor table bound; sweeps over n <= 10^6 factor by table
// walk alone.
constexpr std::uint32_t kSpfLimit = 1u << 20;

// Materialization guard for user-supplied factorizations (~2^26 bits, about
// 20 million decimal digits).
constexpr std::uint64_t kMaxValueBits = 1ull << 26;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < kTrialLimit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

const std::vector<std::uint32_t>& spf_table() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<std::uint32_t> spf(kSpfLimit, 0);
    for (std::uint32_t i = 2; i < kSpfLimit; i += 2) spf[i] = 2;
    for (std::uint32_t i = 3; i < kSpfLimit; i += 2) {
      if (spf[i] != 0) continue;
      for (std::uint64_t j = i; j < kSpfLimit; j += 2 * std::uint64_t(i)) {
        if (spf[j] == 0) spf[j] = i;
      }
    }
    return spf;
  }();
  return table;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1;
  base %= n;
  while (exp != 0) {
    if (exp & 1) result = mulmod_u64(result, base, n);
    base = mulmod_u64(base, base, n);
    exp >>= 1;
  }
  return result;
}

// The first twelve primes are a deterministic Miller-Rabin witness set for
// all n < 3.3 * 10^24, which covers every 64-bit input.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                     17, 19, 23, 29, 31, 37};

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  const int r = std::countr_zero(d);
  d >>= r;
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// 64 rounds on anything above 2^64; bases are drawn from an RNG seeded by
// the low limb of n, so repeated calls agree.
bool is_prime_mpz_large(const mpz_class& n) {
  mpz_class d = n - 1;
  const mp_bitcnt_t r = mpz_scan1(d.get_mpz_t(), 0);
  d >>= r;
  const mpz_class nm1 = n - 1;
  const mpz_class span = n - 3;

  gmp_randstate_t rng;
  gmp_randinit_mt(rng);
  gmp_randseed_ui(rng, mpz_get_ui(n.get_mpz_t()) ^ 0x9e3779b97f4a7c15ull);

  mpz_class base, x;
  bool prime = true;
  for (int round = 0; round < 64 && prime; ++round) {
    mpz_urandomm(base.get_mpz_t(), rng, span.get_mpz_t());
    base += 2;  // uniform in [2, n-2]
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (mp_bitcnt_t i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == nm1) {
        witness = false;
        break;
      }
      if (x == 1) break;
    }
    if (witness) prime = false;
  }
  gmp_randclear(rng);
  return prime;
}

struct RhoBudget {
  std::uint64_t remaining;

  void charge(std::uint64_t iterations) {
    if (iterations > remaining) {
      throw budget_exceeded_error(
          "factorization budget exceeded; raise the rho budget or supply the "
          "factorization externally");
    }
    remaining -= iterations;
  }
};

std::uint64_t rho_step_u64(std::uint64_t x, std::uint64_t c, std::uint64_t n) {
  return (mulmod_u64(x, x, n) + c) % n;
}

// Brent's cycle-finding variant with batched gcds. Expects odd composite n
// with no factor below kTrialLimit; returns a nontrivial factor.
std::uint64_t brent_rho_u64(std::uint64_t n, RhoBudget& budget) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const std::uint64_t batch = 128;
    while (g == 1) {
      x = y;
      budget.charge(r);
      for (std::uint64_t i = 0; i < r; ++i) y = rho_step_u64(y, c, n);
      for (std::uint64_t done = 0; done < r && g == 1; done += batch) {
        ys = y;
        const std::uint64_t lim = std::min(batch, r - done);
        budget.charge(lim);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = rho_step_u64(y, c, n);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        budget.charge(1);
        ys = rho_step_u64(ys, c, n);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

mpz_class brent_rho_mpz(const mpz_class& n, RhoBudget& budget) {
  mpz_class y, x, ys, q, g, diff;
  for (std::uint64_t c = 1;; ++c) {
    y = 2;
    q = 1;
    g = 1;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    auto step = [&](mpz_class& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1) {
      x = y;
      budget.charge(r);
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      for (std::uint64_t done = 0; done < r && g == 1; done += batch) {
        ys = y;
        const std::uint64_t lim = std::min(batch, r - done);
        budget.charge(lim);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          diff = x - y;
          q = q * abs(diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        budget.charge(1);
        step(ys);
        diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
  }
}

using RawFactors = std::vector<std::pair<Natural, std::uint64_t>>;

// n odd with no factor below kTrialLimit; appends (prime, multiplicity *
// mult) pairs.
void factor_u64_core(std::uint64_t n, std::uint64_t mult, RawFactors& out,
                     RhoBudget& budget) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.emplace_back(Natural(static_cast<unsigned long>(n)), mult);
    return;
  }
  const std::uint64_t d = brent_rho_u64(n, budget);
  factor_u64_core(d, mult, out, budget);
  factor_u64_core(n / d, mult, out, budget);
}

void factor_mpz_core(const mpz_class& n, std::uint64_t mult, RawFactors& out,
                     RhoBudget& budget) {
  if (n == 1) return;
  if (fits_u64(n)) {
    factor_u64_core(to_u64(n), mult, out, budget);
    return;
  }
  if (is_prime_mpz_large(n)) {
    out.emplace_back(n, mult);
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    const std::uint64_t max_exp = bit_length(n);
    mpz_class root;
    for (std::uint64_t e = 2; e <= max_exp; ++e) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        factor_mpz_core(root, mult * e, out, budget);
        return;
      }
    }
  }
  const mpz_class d = brent_rho_mpz(n, budget);
  factor_mpz_core(d, mult, out, budget);
  factor_mpz_core(mpz_class(n / d), mult, out, budget);
}

// Walks the smallest-prime-factor table; n must be below kSpfLimit.
void factor_by_table(std::uint32_t n, RawFactors& out) {
  const auto& spf = spf_table();
  while (n > 1) {
    const std::uint32_t p = spf[n];
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(Natural(static_cast<unsigned long>(p)), e);
  }
}

std::vector<PrimePower> normalize(RawFactors raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PrimePower> out;
  out.reserve(raw.size());
  for (auto& [p, e] : raw) {
    if (!out.empty() && out.back().prime == p) {
      out.back().exponent += e;
    } else {
      out.push_back(PrimePower{std::move(p), e});
    }
  }
  return out;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

bool is_prime(const Natural& n) {
  if (n < 0) throw std::invalid_argument("is_prime: negative input");
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (std::uint32_t p : small_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return is_prime_mpz_large(n);
}

Factorization Factorization::unit() { return Factorization(Natural(1), {}); }

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  RawFactors raw;
  raw.reserve(factors.size());
  for (auto& pp : factors) {
    if (pp.exponent == 0)
      throw std::invalid_argument("factorization: exponent must be >= 1");
    if (pp.exponent > kMaxValueBits)
      throw std::invalid_argument(
          "factorization: value too large to materialize");
    raw.emplace_back(std::move(pp.prime), pp.exponent);
  }
  std::vector<PrimePower> parts = normalize(std::move(raw));

  std::uint64_t total_bits = 0;
  for (const auto& pp : parts) {
    if (pp.prime < 2 || !is_prime(pp.prime)) {
      throw std::invalid_argument("factorization: " + to_decimal(pp.prime) +
                                  " is not prime");
    }
    if (pp.exponent > kMaxValueBits || bit_length(pp.prime) > kMaxValueBits ||
        (total_bits += pp.exponent * bit_length(pp.prime)) > kMaxValueBits) {
      throw std::invalid_argument(
          "factorization: value too large to materialize");
    }
  }

  Natural value = 1;
  for (const auto& pp : parts) value *= pow_ui(pp.prime, pp.exponent);
  return Factorization(std::move(value), std::move(parts));
}

Factorization factorize(const Natural& n, const FactorizeOptions& options) {
  if (n < 1)
    throw std::invalid_argument("factorize: n must be >= 1");
  if (n == 1) return Factorization::unit();

  RhoBudget budget{options.rho_budget};
  RawFactors raw;
  mpz_class m = n;

  if (mpz_even_p(m.get_mpz_t())) {
    const mp_bitcnt_t a = mpz_scan1(m.get_mpz_t(), 0);
    m >>= a;
    raw.emplace_back(Natural(2), static_cast<std::uint64_t>(a));
  }

  if (m < kSpfLimit) {
    factor_by_table(static_cast<std::uint32_t>(to_u64(m)), raw);
  } else if (fits_u64(m)) {
    std::uint64_t v = to_u64(m);
    for (std::uint32_t p : small_primes()) {
      if (std::uint64_t(p) * p > v) break;
      if (v % p == 0) {
        std::uint64_t e = 0;
        while (v % p == 0) {
          v /= p;
          ++e;
        }
        raw.emplace_back(Natural(static_cast<unsigned long>(p)), e);
      }
    }
    factor_u64_core(v, 1, raw, budget);
  } else {
    for (std::uint32_t p : small_primes()) {
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        std::uint64_t e = 0;
        do {
          mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
          ++e;
        } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
        raw.emplace_back(Natural(static_cast<unsigned long>(p)), e);
      }
    }
    factor_mpz_core(m, 1, raw, budget);
  }

  return Factorization(n, normalize(std::move(raw)));
}

SplitOddPart split_odd_part(const Factorization& f) {
  SplitOddPart result;
  std::vector<PrimePower> odd_factors = f.factors();
  Natural odd_value = f.value();
  if (!odd_factors.empty() && odd_factors.front().prime == 2) {
    result.two_exponent = odd_factors.front().exponent;
    odd_factors.erase(odd_factors.begin());
    odd_value >>= result.two_exponent;
  }
  result.odd_part = Factorization(std::move(odd_value), std::move(odd_factors));
  return result;
}

Factorization parse_factorization(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty())
    throw std::invalid_argument("factorization string is empty");
  if (compact == "1") return Factorization::unit();

  std::vector<PrimePower> parts;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t star = compact.find('*', pos);
    const std::string_view term =
        std::string_view(compact).substr(pos, star == std::string::npos
                                                  ? std::string::npos
                                                  : star - pos);
    const std::size_t caret = term.find('^');
    const std::string_view base_str = term.substr(0, caret);
    if (!is_digits(base_str)) {
      throw std::invalid_argument("malformed factorization term: '" +
                                  std::string(term) + "'");
    }
    Natural base(std::string(base_str), 10);

    std::uint64_t exponent = 1;
    if (caret != std::string_view::npos) {
      const std::string_view exp_str = term.substr(caret + 1);
      if (!is_digits(exp_str)) {
        throw std::invalid_argument("malformed factorization term: '" +
                                    std::string(term) + "'");
      }
      Natural e(std::string(exp_str), 10);
      if (e < 1 || !fits_u64(e))
        throw std::invalid_argument("factorization exponent out of range");
      exponent = to_u64(e);
    }
    parts.push_back(PrimePower{std::move(base), exponent});
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return Factorization::from_factors(std::move(parts));
}

std::string to_string(const Factorization& f) {
  if (f.factors().empty()) return "1";
  std::string out;
  for (const auto& pp : f.factors()) {
    if (!out.empty()) out += " * ";
    out += to_decimal(pp.prime);
    if (pp.exponent != 1) {
      out += '^';
      out += std::to_string(pp.exponent);
    }
  }
  return out;
}

}  // namespace nu2sigma
