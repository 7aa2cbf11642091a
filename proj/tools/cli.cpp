#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nu2sigma/extremal.hpp"
#include "nu2sigma/factor.hpp"
#include "nu2sigma/natural.hpp"
#include "nu2sigma/oracle.hpp"
#include "nu2sigma/valuation.hpp"

namespace nu2sigma::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Context {
  FactorizeOptions factor;
  OracleOptions oracle;

  std::string n_str;
  std::string k_str;
  std::string k_list_str;
  std::string csv_path;
  std::string limit_str;
  std::string p_str;
  std::uint64_t n_max = 0;
  bool json = false;

  int exit_code = 0;
};

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) {
           return c >= '0' && c <= '9';
         });
}

Natural parse_natural(const std::string& s, const std::string& what) {
  if (!all_digits(s))
    throw std::invalid_argument(what + ": expected an unsigned integer, got '" +
                                s + "'");
  return Natural(s);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  Natural n = parse_natural(s, what);
  if (!fits_u64(n))
    throw std::invalid_argument(what + ": value too large: " + s);
  return to_u64(n);
}

std::vector<std::uint64_t> parse_k_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_u64(item, "--k"));
  if (out.empty()) throw std::invalid_argument("--k: empty list");
  return out;
}

std::vector<Natural> parse_natural_list(const std::string& s,
                                        const std::string& what) {
  std::vector<Natural> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_natural(item, what));
  if (out.empty()) throw std::invalid_argument(what + ": empty list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Decimal integers are factored; anything else is treated as a
/// factorization string, which is how very large n stay cheap.
Factorization parse_n(const std::string& s, const FactorizeOptions& options) {
  if (all_digits(s)) return factorize(Natural(s), options);
  return parse_factorization(s);
}

std::string prime_power_str(const PrimePower& pp) {
  std::string out = to_decimal(pp.prime);
  if (pp.exponent != 1) out += "^" + std::to_string(pp.exponent);
  return out;
}

const char* parity_str(Parity p) {
  return p == Parity::odd ? "odd" : "even";
}

std::string class_tag(const EqualityClass& c) {
  if (std::holds_alternative<MersenneProduct>(c)) return "mersenne_product";
  if (std::holds_alternative<ThreeWithEvenK>(c)) return "three_with_even_k";
  return "not_extremal";
}

std::string mersenne_product_str(const MersenneDecomposition& d) {
  std::string out;
  for (std::size_t i = 0; i < d.exponents.size(); ++i) {
    if (i) out += " * ";
    out += "M" + std::to_string(d.exponents[i]);
  }
  return out;
}

void print_n_line(std::ostream& out, const Factorization& f) {
  std::string dec = to_decimal(f.value());
  std::string fac = to_string(f);
  out << "n = " << dec;
  if (fac != dec) out << " = " << fac;
  out << "\n";
}

struct SweepRow {
  Natural n;
  std::string k;
  Valuation valuation = 0;
  std::uint64_t bound = 0;
  std::uint64_t gap = 0;
  std::string tag;
};

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "n,k,valuation,bound,gap,class\n";
  for (const auto& r : rows)
    os << to_decimal(r.n) << ',' << r.k << ',' << r.valuation << ','
       << r.bound << ',' << r.gap << ',' << r.tag << '\n';
}

void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open for writing: " + path);
  write_csv(os, rows);
  if (!os) throw std::invalid_argument("write failed: " + path);
}

SweepRow make_row(const BoundReport& report, const std::string& k) {
  return {report.n,   k,          report.valuation,
          report.bound_value, report.gap, class_tag(report.classification)};
}

void do_val(Context& ctx, std::ostream& out) {
  Factorization f = parse_n(ctx.n_str, ctx.factor);
  OrderK k(parse_natural(ctx.k_str, "--k"));
  ValuationBreakdown breakdown = nu2_sigma(f, k);

  if (ctx.json) {
    ordered_json doc;
    doc["n"] = to_decimal(f.value());
    doc["factorization"] = to_string(f);
    doc["k"] = to_decimal(k.value());
    doc["k_parity"] = parity_str(k.parity());
    doc["valuation"] = breakdown.total;
    doc["power_of_two_exponent"] = breakdown.power_of_two_exponent;
    doc["contributions"] = ordered_json::array();
    for (const auto& c : breakdown.contributions)
      doc["contributions"].push_back({{"prime", to_decimal(c.prime)},
                                      {"exponent", c.exponent},
                                      {"value", c.value}});
    out << doc.dump(2) << "\n";
    return;
  }

  print_n_line(out, f);
  out << "k = " << to_decimal(k.value()) << " (" << parity_str(k.parity())
      << ")\n";
  out << "nu_2(sigma_k(n)) = " << breakdown.total << "\n";
  if (breakdown.power_of_two_exponent > 0)
    out << "  2^" << breakdown.power_of_two_exponent << " -> 0\n";
  for (const auto& c : breakdown.contributions)
    out << "  " << prime_power_str({c.prime, c.exponent}) << " -> " << c.value
        << "\n";
}

void do_classify(Context& ctx, std::ostream& out) {
  Factorization f = parse_n(ctx.n_str, ctx.factor);
  OrderK k(parse_natural(ctx.k_str, "--k"));
  BoundReport report = classify(f, k);
  const char* bound_expr =
      report.bound_kind == BoundKind::ceiling ? "ceil(log2 n)" : "floor(log2 n)";

  if (ctx.json) {
    ordered_json doc;
    doc["n"] = to_decimal(report.n);
    doc["factorization"] = to_string(f);
    doc["k"] = to_decimal(k.value());
    doc["k_parity"] = parity_str(report.k_parity);
    doc["valuation"] = report.valuation;
    doc["bound_kind"] =
        report.bound_kind == BoundKind::ceiling ? "ceiling" : "floor";
    doc["bound_value"] = report.bound_value;
    doc["gap"] = report.gap;
    doc["class"] = class_tag(report.classification);
    if (const auto* mp = std::get_if<MersenneProduct>(&report.classification))
      doc["mersenne_exponents"] = mp->decomposition.exponents;
    out << doc.dump(2) << "\n";
    return;
  }

  print_n_line(out, f);
  out << "k = " << to_decimal(k.value()) << " (" << parity_str(report.k_parity)
      << ")\n";
  out << "valuation = " << report.valuation << "\n";
  out << "bound = " << bound_expr << " = " << report.bound_value << "\n";
  out << "gap = " << report.gap << "\n";
  out << "class = " << class_tag(report.classification);
  if (const auto* mp = std::get_if<MersenneProduct>(&report.classification))
    out << " [" << mersenne_product_str(mp->decomposition) << "]";
  out << "\n";
}

void do_scan_equality(Context& ctx, std::ostream& out) {
  if (ctx.n_max < 2)
    throw std::invalid_argument("--n-max: must be >= 2");
  OrderK k(parse_natural(ctx.k_str, "--k"));

  std::vector<SweepRow> rows;
  std::vector<Natural> attained;
  std::vector<std::string> labels;
  for (std::uint64_t n = 2; n <= ctx.n_max; ++n) {
    Factorization f = factorize(Natural(n), ctx.factor);
    BoundReport report = classify(f, k);
    if (report.gap != 0) continue;
    attained.push_back(report.n);
    std::string label = to_decimal(report.n);
    if (const auto* mp = std::get_if<MersenneProduct>(&report.classification))
      label += " = " + mersenne_product_str(mp->decomposition);
    labels.push_back(std::move(label));
    rows.push_back(make_row(report, to_decimal(k.value())));
  }

  std::vector<Natural> expected;
  if (k.is_odd())
    expected = enumerate_mersenne_products(Natural(ctx.n_max));
  else if (ctx.n_max >= 3)
    expected = {3};
  if (attained != expected)
    throw consistency_error(
        "equality scan disagrees with the structural characterization");

  out << "equality attainers for k = " << to_decimal(k.value())
      << ", 2 <= n <= " << ctx.n_max << ": " << attained.size() << " found\n";
  for (const auto& label : labels) out << label << "\n";
  if (!ctx.csv_path.empty()) {
    write_csv_file(ctx.csv_path, rows);
    out << "wrote " << rows.size() << " rows to " << ctx.csv_path << "\n";
  }
}

void do_verify(Context& ctx, std::ostream& out) {
  std::vector<std::uint64_t> ks = parse_k_list(ctx.k_list_str);
  bool bound_mode = !ctx.p_str.empty();
  OracleReport report;
  if (bound_mode) {
    Natural p = parse_natural(ctx.p_str, "--p");
    report = verify_general_p_bound(p, Natural(ctx.n_max), ks, ctx.oracle);
  } else {
    report = verify_closed_form(Natural(ctx.n_max), ks, ctx.oracle);
  }

  std::string k_joined;
  for (std::size_t i = 0; i < report.k_set.size(); ++i) {
    if (i) k_joined += ",";
    k_joined += std::to_string(report.k_set[i]);
  }

  if (ctx.json) {
    ordered_json doc;
    doc["mode"] = bound_mode ? "general_p_bound" : "closed_form";
    doc["range"] = report.range;
    doc["k_set"] = report.k_set;
    doc["checked"] = report.checked_count;
    doc["mismatches"] = ordered_json::array();
    for (const auto& m : report.mismatches) {
      ordered_json entry;
      entry["n"] = to_decimal(m.n);
      entry["k"] = m.k;
      if (bound_mode) {
        entry["bound"] = m.closed_form_value;
        entry["observed"] = m.oracle_value;
      } else {
        entry["closed_form_value"] = m.closed_form_value;
        entry["oracle_value"] = m.oracle_value;
      }
      doc["mismatches"].push_back(std::move(entry));
    }
    doc["passed"] = report.passed();
    out << doc.dump(2) << "\n";
  } else {
    out << "verify ("
        << (bound_mode ? "nu_p vs ceil(k log_p n)" : "closed form vs oracle")
        << "): " << report.range << ", k = {" << k_joined << "}\n";
    for (const auto& m : report.mismatches) {
      if (bound_mode)
        out << "violation n=" << to_decimal(m.n) << " k=" << m.k
            << ": bound=" << m.closed_form_value
            << " observed=" << m.oracle_value << "\n";
      else
        out << "mismatch n=" << to_decimal(m.n) << " k=" << m.k
            << ": closed=" << m.closed_form_value
            << " oracle=" << m.oracle_value << "\n";
    }
    out << "checked " << report.checked_count << " pairs, "
        << report.mismatches.size() << " mismatches: "
        << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  ctx.exit_code = report.passed() ? 0 : 2;
}

void do_mersenne(Context& ctx, std::ostream& out) {
  Natural limit = parse_natural(ctx.limit_str, "--limit");
  if (limit < 2) throw std::invalid_argument("--limit: must be >= 2");
  std::vector<MersennePrime> primes = mersenne_primes_upto(limit);
  std::vector<Natural> products = enumerate_mersenne_products(limit);

  if (ctx.json) {
    ordered_json doc;
    doc["limit"] = to_decimal(limit);
    doc["primes"] = ordered_json::array();
    for (const auto& mp : primes)
      doc["primes"].push_back(
          {{"exponent", mp.exponent}, {"value", to_decimal(mp.value)}});
    doc["products"] = ordered_json::array();
    for (const auto& n : products) doc["products"].push_back(to_decimal(n));
    out << doc.dump(2) << "\n";
    return;
  }

  out << "mersenne primes <= " << to_decimal(limit) << ":";
  for (const auto& mp : primes)
    out << " M" << mp.exponent << "=" << to_decimal(mp.value);
  out << "\n";
  out << "products of distinct mersenne primes <= " << to_decimal(limit) << ":";
  for (const auto& n : products) out << " " << to_decimal(n);
  out << "\n";
}

void do_sweep(Context& ctx, std::ostream& out) {
  if (ctx.n_max < 2)
    throw std::invalid_argument("--n-max: must be >= 2");
  std::vector<Natural> ks = parse_natural_list(ctx.k_list_str, "--k");
  std::vector<OrderK> orders;
  orders.reserve(ks.size());
  for (const auto& k : ks) orders.emplace_back(k);

  std::vector<SweepRow> rows;
  for (std::uint64_t n = 2; n <= ctx.n_max; ++n) {
    Factorization f = factorize(Natural(n), ctx.factor);
    for (std::size_t i = 0; i < orders.size(); ++i)
      rows.push_back(make_row(classify(f, orders[i]), to_decimal(ks[i])));
  }
  write_csv_file(ctx.csv_path, rows);
  out << "wrote " << rows.size() << " rows to " << ctx.csv_path << "\n";
}

void apply_env(Context& ctx) {
  const char* raw = std::getenv("NU2SIGMA_FACTOR_BUDGET");
  if (raw == nullptr) return;
  ctx.factor.rho_budget = parse_u64(raw, "NU2SIGMA_FACTOR_BUDGET");
  ctx.oracle.factor = ctx.factor;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Context ctx;

  CLI::App app{"2-adic valuation of the divisor sum sigma_k, computed in "
               "closed form from the factorization of n",
               "nu2sigma"};
  app.require_subcommand(1);

  auto* val = app.add_subcommand(
      "val", "nu_2(sigma_k(n)) with its per-prime breakdown");
  val->add_option("--n", ctx.n_str,
                  "n as a decimal integer or a factorization string like "
                  "'2^3 * 5 * 11'")
      ->required();
  val->add_option("--k", ctx.k_str, "order k >= 1 (any size)")->required();
  val->add_flag("--json", ctx.json, "emit JSON");
  val->callback([&] { do_val(ctx, out); });

  auto* classify_cmd = app.add_subcommand(
      "classify", "valuation against the sharp log2 bound");
  classify_cmd->add_option("--n", ctx.n_str, "n, decimal or factorization string")
      ->required();
  classify_cmd->add_option("--k", ctx.k_str, "order k >= 1 (any size)")
      ->required();
  classify_cmd->add_flag("--json", ctx.json, "emit JSON");
  classify_cmd->callback([&] { do_classify(ctx, out); });

  auto* scan = app.add_subcommand(
      "scan-equality", "all n <= n-max attaining the sharp bound");
  scan->add_option("--n-max", ctx.n_max, "scan 2..n-max")->required();
  scan->add_option("--k", ctx.k_str, "order k >= 1 (any size)")->required();
  scan->add_option("--csv", ctx.csv_path, "also write the attainers as CSV");
  scan->callback([&] { do_scan_equality(ctx, out); });

  auto* verify = app.add_subcommand(
      "verify", "closed form against the brute-force divisor-sum oracle");
  verify->add_option("--n-max", ctx.n_max, "check 2..n-max")->required();
  verify->add_option("--k", ctx.k_list_str, "comma-separated orders, e.g. 1,2,3")
      ->required();
  verify->add_option("--p", ctx.p_str,
                     "odd prime: check nu_p(sigma_k(n)) <= ceil(k log_p n) "
                     "instead");
  verify->add_flag("--json", ctx.json, "emit JSON");
  verify->callback([&] { do_verify(ctx, out); });

  auto* mersenne = app.add_subcommand(
      "mersenne", "Mersenne primes and their distinct products up to a limit");
  mersenne->add_option("--limit", ctx.limit_str, "upper limit (any size)")
      ->required();
  mersenne->add_flag("--json", ctx.json, "emit JSON");
  mersenne->callback([&] { do_mersenne(ctx, out); });

  auto* sweep = app.add_subcommand(
      "sweep", "CSV table of valuation, bound, gap, class over a range");
  sweep->add_option("--n-max", ctx.n_max, "sweep 2..n-max")->required();
  sweep->add_option("--k", ctx.k_list_str, "comma-separated orders")->required();
  sweep->add_option("--csv", ctx.csv_path, "output CSV path")->required();
  sweep->callback([&] { do_sweep(ctx, out); });

  try {
    apply_env(ctx);
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const consistency_error& e) {
    err << "consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return ctx.exit_code;
}

int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
             std::cerr);
}

}  // namespace nu2sigma::cli
