#include "nu2sigma/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "nu2sigma/natural.hpp"

namespace nu2sigma {
namespace {

bool is_power_of_two(const Natural& n) {
  return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

void collect_products(const std::vector<MersennePrime>& primes,
                      std::size_t from, const Natural& cur,
                      const Natural& limit, std::vector<Natural>& out) {
  for (std::size_t i = from; i < primes.size(); ++i) {
    Natural next = cur * primes[i].value;
    if (next > limit) break;
    out.push_back(next);
    collect_products(primes, i + 1, next, limit, out);
  }
}

}  // namespace

std::uint64_t floor_log2(const Natural& n) {
  if (n == 0) throw std::invalid_argument("floor_log2: argument must be >= 1");
  return bit_length(n) - 1;
}

std::uint64_t ceil_log2(const Natural& n) {
  if (n == 0) throw std::invalid_argument("ceil_log2: argument must be >= 1");
  return is_power_of_two(n) ? bit_length(n) - 1 : bit_length(n);
}

std::uint64_t big_omega(const Factorization& f) {
  std::uint64_t total = 0;
  for (const auto& pp : f.factors()) total += pp.exponent;
  return total;
}

BoundReport classify(const Factorization& f, const OrderK& k) {
  if (f.value() < 2)
    throw std::invalid_argument("classify: argument must be >= 2");

  BoundReport report;
  report.n = f.value();
  report.k_parity = k.parity();
  report.valuation = nu2_sigma(f, k).total;
  if (k.is_odd()) {
    report.bound_kind = BoundKind::ceiling;
    report.bound_value = ceil_log2(report.n);
  } else {
    report.bound_kind = BoundKind::floor;
    report.bound_value = floor_log2(report.n);
  }
  if (report.valuation > report.bound_value)
    throw consistency_error("classify: valuation exceeds the sharp bound");
  report.gap = report.bound_value - report.valuation;

  bool numeric_equal = report.gap == 0;
  if (k.is_odd()) {
    auto decomposition = mersenne_decompose(f);
    if (numeric_equal != decomposition.has_value())
      throw consistency_error(
          "classify: bound equality disagrees with the Mersenne-product test");
    if (decomposition)
      report.classification = MersenneProduct{*std::move(decomposition)};
  } else {
    bool is_three = report.n == 3;
    if (numeric_equal != is_three)
      throw consistency_error(
          "classify: bound equality disagrees with the n == 3 test");
    if (is_three) report.classification = ThreeWithEvenK{};
  }
  return report;
}

bool lucas_lehmer(std::uint64_t q) {
  if (q < 2) return false;
  if (q == 2) return true;
  if (!is_prime(Natural(q))) return false;

  const Natural m = pow_ui(2, q) - 1;
  Natural s = 4;
  for (std::uint64_t i = 2; i < q; ++i) {
    s *= s;
    while (bit_length(s) > q) s = (s & m) + (s >> q);
    if (s >= m) s -= m;
    s -= 2;
    if (s < 0) s += m;
  }
  return s == 0;
}

std::vector<MersennePrime> mersenne_primes_upto(const Natural& limit,
                                                std::uint64_t max_exponent) {
  std::vector<MersennePrime> out;
  for (std::uint64_t q = 2; q <= max_exponent; ++q) {
    Natural value = pow_ui(2, q) - 1;
    if (value > limit) break;
    if (lucas_lehmer(q)) out.push_back({q, std::move(value)});
  }
  return out;
}

std::optional<MersenneDecomposition> mersenne_decompose(const Factorization& f) {
  if (f.value() < 2)
    throw std::invalid_argument("mersenne_decompose: argument must be >= 2");
  MersenneDecomposition decomposition;
  for (const auto& pp : f.factors()) {
    if (pp.prime == 2 || pp.exponent != 1) return std::nullopt;
    Natural succ = pp.prime + 1;
    if (!is_power_of_two(succ)) return std::nullopt;
    decomposition.exponents.push_back(bit_length(succ) - 1);
  }
  return decomposition;
}

std::vector<Natural> enumerate_mersenne_products(const Natural& limit,
                                                 std::uint64_t max_exponent) {
  if (limit < 2)
    throw std::invalid_argument(
        "enumerate_mersenne_products: limit must be >= 2");
  std::vector<MersennePrime> primes = mersenne_primes_upto(limit, max_exponent);
  std::vector<Natural> out;
  collect_products(primes, 0, Natural(1), limit, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nu2sigma
