#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arith/convolution.hpp"
#include "arith/density/empirical.hpp"
#include "arith/density/euler_product.hpp"
#include "arith/density/residue_sieve.hpp"
#include "arith/errors.hpp"
#include "arith/pairs/classify.hpp"
#include "arith/pairs/mean_value.hpp"
#include "arith/pairs/nu_pair.hpp"
#include "arith/pairs/verification.hpp"
#include "arith/table_csv.hpp"
#include "report.hpp"
#include "spec_file.hpp"

namespace arithconv {

using namespace arith;

std::uint64_t max_table_size() {
  const char* env = std::getenv("ARITHCONV_MAX_N");
  if (!env || !*env) return kDefaultMaxN;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw SpecError(std::string("ARITHCONV_MAX_N must be a positive integer, got '") + env + "'");
  }
}

namespace {

void check_limit(std::uint64_t n) {
  if (n == 0) throw SpecError("N must be >= 1");
  const auto cap = max_table_size();
  if (n > cap) {
    throw ComplexityError("N = " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(cap) +
                          " (set ARITHCONV_MAX_N to raise it)");
  }
}

struct TableOptions {
  std::string mode = "exact";
  std::string zero_test = "abs:1e-12";

  ValueMode value_mode() const {
    if (mode == "exact") return ValueMode::kExact;
    if (mode == "floating") return ValueMode::kFloating;
    throw SpecError("--mode must be exact or floating");
  }
  ZeroTest zt() const { return parse_zero_test(zero_test); }
  std::optional<ZeroTest> threshold() const {
    if (value_mode() == ValueMode::kExact) return std::nullopt;
    return zt();
  }
};

void add_table_options(CLI::App* cmd, TableOptions& t) {
  cmd->add_option("--mode", t.mode, "exact or floating")->capture_default_str();
  cmd->add_option("--zero-test", t.zero_test, "floating zero test, abs:<tau> or rel:<tau>")->capture_default_str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_atomically(path, text);
  }
}

std::vector<std::uint64_t> ladder_for(const std::vector<std::uint64_t>& requested, std::uint64_t x) {
  if (requested.empty()) return density::decade_checkpoints(x);
  auto all = requested;
  all.push_back(x);
  return density::normalize_checkpoints(all, x);
}

std::string rational_or_empty(const std::optional<Rational>& r) { return r ? r->to_string() : ""; }

// ---------------------------------------------------------------- tables

struct TabulateArgs {
  std::string spec;
  std::uint64_t n = 0;
  std::string out;
  TableOptions table;
};

void cmd_tabulate(const TabulateArgs& a, std::ostream& out) {
  check_limit(a.n);
  auto src = load_function_source(a.spec);
  emit(table_csv(src.tabulate(a.n, a.table.value_mode(), a.table.zt())), a.out, out);
}

struct ConvolveArgs {
  std::string f, g;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> truncate;
  std::string out;
  TableOptions table;
};

void cmd_convolve(const ConvolveArgs& a, std::ostream& out) {
  check_limit(a.n);
  const auto mode = a.table.value_mode();
  const auto zt = a.table.zt();
  auto f = load_function_source(a.f).tabulate(a.n, mode, zt);
  auto g = load_function_source(a.g).tabulate(a.n, mode, zt);
  emit(table_csv(a.truncate ? convolve_truncated(f, g, *a.truncate) : convolve(f, g)), a.out, out);
}

void cmd_invert(const TabulateArgs& a, std::ostream& out) {
  check_limit(a.n);
  auto f = load_function_source(a.spec).tabulate(a.n, a.table.value_mode(), a.table.zt());
  emit(table_csv(dirichlet_inverse(f)), a.out, out);
}

// ---------------------------------------------------------------- density

constexpr const char* kDensityHeader = "quantity,value,approx,mode,threshold,cutoff,tail_bound";

struct SieveArgs {
  std::vector<std::string> entries;
  std::string file;
  std::optional<std::size_t> retain;
  std::string out;
};

void cmd_sieve(const SieveArgs& a, std::ostream& out) {
  density::ResidueSieveSpec spec;
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw SpecError("cannot open sieve file '" + a.file + "'");
    spec = density::read_sieve_csv(in);
  }
  for (const auto& e : a.entries) spec.entries.push_back(density::parse_sieve_entry(e));
  if (!a.entries.empty() && spec.tail_constants) {
    throw SpecError("tail constants from --file cannot be combined with extra command-line entries");
  }
  CsvReport r;
  r.plain_row({"quantity", "value", "approx", "mode", "threshold", "cutoff", "tail_bound"});
  if (a.retain) {
    auto t = density::sieved_density_truncated(spec, *a.retain);
    Provenance p{"exact", "", fmt(static_cast<std::uint64_t>(t.retained)), fmt(t.tail_bound)};
    r.row({"sieve_density_truncated", t.density.to_string(), fmt(t.density.to_double())}, p);
    p.mode = "floating";
    r.row({"sieve_density_lower", fmt(t.lower()), fmt(t.lower())}, p);
    r.row({"sieve_density_upper", fmt(t.upper()), fmt(t.upper())}, p);
  } else {
    auto d = density::sieved_density_exact(spec);
    r.row({"sieve_density", d.to_string(), fmt(d.to_double())}, exact_provenance());
  }
  emit(r.text(), a.out, out);
}

struct MultiplesArgs {
  std::vector<std::string> values;
  std::string out;
};

void cmd_multiples(const MultiplesArgs& a, std::ostream& out) {
  std::vector<std::uint64_t> set;
  for (const auto& v : a.values) {
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        std::size_t used = 0;
        const auto x = std::stoull(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        set.push_back(x);
      } catch (const std::exception&) {
        throw SpecError("bad element '" + item + "' in set of multiples");
      }
    }
  }
  auto d = density::multiples_density(set);
  CsvReport r;
  r.plain_row({"quantity", "value", "approx", "mode", "threshold", "cutoff", "tail_bound"});
  r.row({"multiples_density", d.to_string(), fmt(d.to_double())}, exact_provenance());
  emit(r.text(), a.out, out);
}

struct EulerArgs {
  std::string spec;
  std::uint64_t primes = 100000;
  std::uint64_t tail_limit = 0;
  std::vector<std::uint64_t> checkpoints;
  std::string zero_test = "abs:1e-12";
  std::string out;
};

void cmd_euler(const EulerArgs& a, std::ostream& out) {
  check_limit(a.primes);
  auto src = load_function_source(a.spec);
  density::EulerOptions opts;
  opts.tail_prime_limit = a.tail_limit;
  opts.zero_test = parse_zero_test(a.zero_test);
  auto e = density::euler_product_support_density(src.require_spec("nu"), a.primes, opts);
  CsvReport r;
  r.plain_row({"quantity", "value", "approx", "mode", "threshold", "cutoff", "tail_bound"});
  Provenance p{"floating", "", fmt(e.prime_cutoff), fmt(e.error_bound)};
  r.row({"support_density", fmt(e.value), fmt(e.value)}, p);
  r.row({"support_density_lower", fmt(e.lower()), fmt(e.lower())}, p);
  r.row({"tail_log_bound", fmt(e.tail_log_bound), fmt(e.tail_log_bound)}, p);
  r.comment("reason: " + e.factors_omitted_reason);
  emit(r.text(), a.out, out);
}

void cmd_cnu(const EulerArgs& a, std::ostream& out) {
  check_limit(a.primes);
  auto src = load_function_source(a.spec);
  auto c = density::c_nu_constant(src.require_spec("nu"), a.primes, parse_zero_test(a.zero_test));
  CsvReport r;
  r.plain_row({"quantity", "value", "approx", "mode", "threshold", "cutoff", "tail_bound"});
  Provenance p{"floating", "", fmt(c.prime_cutoff), fmt(c.error_bound)};
  r.row({"c_nu", fmt(c.value), fmt(c.value)}, p);
  r.row({"c_nu_lower", fmt(c.lower()), fmt(c.lower())}, p);
  r.row({"tail_log_bound", fmt(c.tail_log_bound), fmt(c.tail_log_bound)}, p);
  r.comment("reason: " + c.factors_omitted_reason);
  emit(r.text(), a.out, out);
}

void cmd_deficiency(const EulerArgs& a, std::ostream& out) {
  check_limit(a.primes);
  auto src = load_function_source(a.spec);
  auto pts = density::support_prime_deficiency(src.require_spec("nu"), a.primes, a.checkpoints,
                                               parse_zero_test(a.zero_test));
  CsvReport r;
  r.plain_row({"x", "unsupported_primes", "sum_inverse", "mode", "threshold", "cutoff", "tail_bound"});
  for (const auto& pt : pts) {
    r.row({fmt(pt.x), fmt(pt.unsupported_count), fmt(pt.sum)}, {"floating", "", fmt(a.primes), ""});
  }
  emit(r.text(), a.out, out);
}

struct EmpiricalArgs {
  std::string spec;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> checkpoints;
  std::string out;
  TableOptions table;
};

void cmd_empirical(const EmpiricalArgs& a, std::ostream& out) {
  check_limit(a.n);
  auto f = load_function_source(a.spec).tabulate(a.n, a.table.value_mode(), a.table.zt());
  auto est = density::empirical_density(f.support(), a.n, ladder_for(a.checkpoints, a.n));
  CsvReport r;
  r.plain_row({"x", "count", "density", "fraction", "mode", "threshold", "cutoff", "tail_bound"});
  const auto prov = table_provenance(f.mode(), est.zero_threshold);
  for (const auto& c : est.checkpoints) {
    r.row({fmt(c.x), fmt(c.count), fmt(c.ratio()), Rational(c.count, c.x).to_string()}, prov);
  }
  emit(r.text(), a.out, out);
}

// ---------------------------------------------------------------- mean value

void mean_rows(CsvReport& r, const std::string& label, const pairs::MeanValueSeries& s, const Provenance& base) {
  Provenance p = base;
  if (s.truncation) p.cutoff = fmt(*s.truncation);
  for (const auto& pt : s.points) r.row({label, fmt(pt.x), fmt(pt.mean), rational_or_empty(pt.exact)}, p);
}

void cmd_mean_value(const EmpiricalArgs& a, std::ostream& out) {
  check_limit(a.n);
  auto h = load_function_source(a.spec).tabulate(a.n, a.table.value_mode(), a.table.zt());
  auto series = pairs::mean_value_series(h, ladder_for(a.checkpoints, a.n));
  CsvReport r;
  r.plain_row({"function", "x", "mean_abs", "exact_mean_abs", "mode", "threshold", "cutoff", "tail_bound"});
  mean_rows(r, "h", series, table_provenance(h.mode(), a.table.threshold()));
  r.comment("trend: " + series.trend_label());
  emit(r.text(), a.out, out);
}

// ---------------------------------------------------------------- pair

struct PairArgs {
  std::string f, nu;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> density_x;
  std::vector<std::uint64_t> checkpoints;
  bool mean_value = false;
  bool classes = false;
  bool verify_bound = false;
  bool uncertainty = false;
  bool convergence = false;
  std::vector<std::uint64_t> truncate;
  std::uint64_t primes = 100000;
  double slack = pairs::kDefaultDensitySlack;
  std::string f_support_tail, g_support_tail, f_weighted_tail;
  bool no_roundtrip = false;
  std::string out_dir;
  TableOptions table;
};

class Summary {
 public:
  void line(const std::string& key, const std::string& value) { text_ += key + ": " + value + '\n'; }
  void blank() { text_ += '\n'; }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

std::string density_line(const density::DensityEstimate& e) {
  return fmt(e.approx()) + " (" + e.value.to_string() + ")";
}

void cmd_pair(const PairArgs& a, std::ostream& out) {
  check_limit(a.n);
  const auto f_src = load_function_source(a.f);
  const auto nu_src = load_function_source(a.nu);
  const auto& nu_spec = nu_src.require_spec("nu");
  const auto mode = a.table.value_mode();
  const auto zt = a.table.zt();
  const auto threshold = a.table.threshold();

  pairs::PairOptions opts;
  opts.f_support_tail = a.f_support_tail.empty() ? f_src.support_tail : parse_tail_declaration(a.f_support_tail);
  opts.f_weighted_tail = a.f_weighted_tail.empty() ? f_src.weighted_tail : parse_tail_declaration(a.f_weighted_tail);
  if (!a.g_support_tail.empty()) opts.g_support_tail = parse_tail_declaration(a.g_support_tail);
  opts.verify_roundtrip = !a.no_roundtrip;

  const std::uint64_t x = a.density_x.value_or(a.n);
  if (x == 0 || x > a.n) throw RangeError("--density-x must lie in [1, N]");
  const auto ladder = ladder_for(a.checkpoints, x);

  auto pair = f_src.multiplicative()
                  ? pairs::make_pair(*f_src.spec, nu_spec, a.n, mode, opts)
                  : pairs::make_pair(f_src.tabulate(a.n, mode, zt), nu_spec, a.n, opts);

  CsvReport report;
  Summary sum;
  const Provenance table_prov = table_provenance(mode, threshold);
  sum.line("f", f_src.name);
  sum.line("nu", nu_spec.name);
  sum.line("N", fmt(a.n));
  sum.line("x", fmt(x));
  sum.line("mode", to_string(mode));
  sum.line("zero_threshold", threshold ? threshold->to_string() : "none (exact)");
  sum.line("f_support_tail", pair.f_support_tail.to_string());
  sum.line("g_support_tail", pair.g_support_tail.to_string());
  sum.line("f_weighted_tail", pair.f_weighted_tail.to_string());
  sum.line("nu_unsupported_tail", nu_spec.unsupported_tail ? nu_spec.unsupported_tail->to_string() : "undeclared");
  sum.line("roundtrip_checked", fmt_bool(opts.verify_roundtrip && mode == ValueMode::kExact));

  report.section("support_density", std::string("set,x,count,density,") + kProvenanceHeader);
  const auto f_density = density::empirical_density(pair.f.support(), x, ladder);
  const auto g_density = density::empirical_density(pair.g.support(), x, ladder);
  for (const auto* e : {&f_density, &g_density}) {
    const std::string set = e == &f_density ? "supp_f" : "supp_g";
    for (const auto& c : e->checkpoints) report.row({set, fmt(c.x), fmt(c.count), fmt(c.ratio())}, table_prov);
  }
  sum.line("supp(f) density", density_line(f_density));
  sum.line("supp(g) density", density_line(g_density));
  if (const auto d = pair.f.support().min()) sum.line("min supp(f)", fmt(*d));

  if (a.classes) {
    auto dec = pairs::classify_support(pair, ladder);
    report.section("classes", std::string("divisors,active,x,count,density,") + kProvenanceHeader);
    for (const auto& c : dec.classes) {
      for (const auto& pt : c.counts) {
        report.row({c.divisors_label(), c.active_label(), fmt(pt.x), fmt(pt.count), fmt(pt.ratio())}, table_prov);
      }
    }
    sum.line("classes", fmt(static_cast<std::uint64_t>(dec.classes.size())));
    sum.line("classified at x", fmt(dec.classified.back().count));
    for (const auto& c : dec.classes) {
      sum.line("class S={" + c.divisors_label() + "} T={" + c.active_label() + "} density",
               fmt(c.counts.back().ratio()));
    }
  }

  if (a.verify_bound) {
    check_limit(a.primes);
    auto b = pairs::verify_density_lower_bound(pair, a.primes, x, a.slack);
    report.section("density_bound", std::string("quantity,value,") + kProvenanceHeader);
    const Provenance cert{"floating", "", fmt(b.c_nu.prime_cutoff), fmt(b.c_nu.error_bound)};
    report.row({"c_nu", fmt(b.c_nu.value)}, cert);
    report.row({"support_sum_table", fmt(b.support_sum_table)}, table_prov);
    report.row({"support_sum_tail", fmt(b.support_sum_tail)}, {"floating", "", "", fmt(b.support_sum_tail)});
    report.row({"bound", fmt(b.bound)}, cert);
    report.row({"empirical", fmt(b.empirical.approx())}, table_prov);
    report.row({"margin", fmt(b.margin)}, cert);
    report.row({"slack", fmt(b.slack)}, {"", "", "", ""});
    report.row({"holds", fmt_bool(b.holds)}, {"", "", "", ""});
    sum.line("C_nu", fmt(b.c_nu.value) + " (primes <= " + fmt(b.c_nu.prime_cutoff) + ", " +
                         b.c_nu.factors_omitted_reason + ")");
    sum.line("density bound", fmt(b.bound));
    sum.line("density bound margin", fmt(b.margin));
    sum.line("density bound slack", fmt(b.slack));
    sum.line("density bound holds", fmt_bool(b.holds));
  }

  if (a.mean_value || !a.truncate.empty()) {
    report.section("mean_value", std::string("function,x,mean_abs,exact_mean_abs,") + kProvenanceHeader);
    if (a.mean_value) {
      auto s = pairs::mean_value_series(pair.g, ladder);
      mean_rows(report, "g", s, table_prov);
      sum.line("mean |g| trend", s.trend_label());
      sum.line("mean |g| at x", fmt(s.points.back().mean));
    }
    for (auto y : a.truncate) {
      auto s = pairs::mean_value_series(pairs::truncated_convolution(pair, y), ladder, y);
      mean_rows(report, "g_y", s, table_prov);
      sum.line("mean |g_" + fmt(y) + "| at x", fmt(s.points.back().mean));
    }
  }

  if (a.convergence) {
    std::vector<std::uint64_t> grid = a.truncate;
    if (grid.empty()) {
      for (std::uint64_t y = 1; y <= a.n; y *= 10) grid.push_back(y);
    }
    auto c = pairs::verify_mean_value_convergence(pair, grid, x);
    report.section("mean_value_convergence",
                   std::string("quantity,y_low,y_high,value,bound,holds,") + kProvenanceHeader);
    for (std::size_t i = 0; i < c.y_grid.size(); ++i) {
      Provenance p = table_prov;
      p.cutoff = fmt(c.y_grid[i]);
      report.row({"lambda", fmt(c.y_grid[i]), "", fmt(c.lambdas[i].mean), "", ""}, p);
    }
    for (const auto& d : c.drifts) {
      Provenance p = table_prov;
      p.cutoff = fmt(d.y_high);
      report.row({"drift", fmt(d.y_low), fmt(d.y_high), fmt(d.difference), fmt(d.bound), fmt_bool(d.holds)}, p);
    }
    sum.line("sup|nu|", fmt(c.sup_nu));
    sum.line("delta", fmt(c.delta));
    sum.line("drift bounds hold", fmt_bool(c.drift_ok()));
    if (c.witness) {
      report.row({"witness", fmt(c.witness->d), "", fmt(c.witness->value), "", ""}, table_prov);
      sum.line("positivity witness", fmt(c.witness->value) + " (d=" + fmt(c.witness->d) +
                                         ", density " + fmt(c.witness->density) + ")");
    }
  }

  if (a.uncertainty) {
    auto u = pairs::uncertainty_report(pair, ladder);
    report.section("thinness", std::string("set,x,count,sum_inverse,") + kProvenanceHeader);
    for (const auto* side : {&u.f_sums, &u.g_sums}) {
      const std::string set = side == &u.f_sums ? "supp_f" : "supp_g";
      for (const auto& pt : *side) report.row({set, fmt(pt.x), fmt(pt.count), fmt(pt.sum)}, table_prov);
    }
    const char* thin = u.thin_side == pairs::UncertaintyReport::ThinSide::kF   ? "supp_f"
                       : u.thin_side == pairs::UncertaintyReport::ThinSide::kG ? "supp_g"
                                                                              : "none";
    sum.line("declared thin side", thin);
    if (u.thin_side != pairs::UncertaintyReport::ThinSide::kNone) {
      sum.line("other side density (last, previous decade)",
               fmt(u.density_last) + ", " + fmt(u.density_previous));
      sum.line("density stable (ratio >= " + fmt(u.stability_ratio) + ")", fmt_bool(u.density_stable));
      std::string growth;
      for (double g : u.decade_growth) growth += (growth.empty() ? "" : " ") + fmt(g);
      sum.line("decade growth of 1/n sums", growth.empty() ? "(no decade pairs)" : growth);
      sum.line("growth floor", fmt(u.growth_floor));
      sum.line("uncertainty consistent", fmt_bool(u.consistent()));
    }
  }

  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    write_atomically(std::filesystem::path(a.out_dir) / "report.csv", report.text());
    write_atomically(std::filesystem::path(a.out_dir) / "summary.txt", sum.text());
  }
  out << sum.text();
}

int report_error(std::ostream& err, const char* kind, const std::exception& e, int code) {
  err << "arithconv: " << kind << ": " << e.what() << '\n';
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic functions under Dirichlet convolution: tables, densities and nu-pair experiments",
               "arithconv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "arithconv 0.1.0");

  TabulateArgs tab, inv;
  auto* c_tab = app.add_subcommand("tabulate", "Tabulate a function on [1, N] as n,value CSV");
  c_tab->add_option("spec", tab.spec, "spec file or builtin:<name>")->required();
  c_tab->add_option("N", tab.n)->required();
  c_tab->add_option("-o,--out", tab.out, "output file (default stdout)");
  add_table_options(c_tab, tab.table);

  ConvolveArgs conv;
  auto* c_conv = app.add_subcommand("convolve", "Dirichlet convolution f * g on [1, N]");
  c_conv->add_option("f", conv.f)->required();
  c_conv->add_option("g", conv.g)->required();
  c_conv->add_option("N", conv.n)->required();
  c_conv->add_option("--truncate", conv.truncate, "only divisors d <= y of f");
  c_conv->add_option("-o,--out", conv.out);
  add_table_options(c_conv, conv.table);

  auto* c_inv = app.add_subcommand("invert", "Dirichlet inverse on [1, N]");
  c_inv->add_option("spec", inv.spec)->required();
  c_inv->add_option("N", inv.n)->required();
  c_inv->add_option("-o,--out", inv.out);
  add_table_options(c_inv, inv.table);

  auto* c_density = app.add_subcommand("density", "Densities of sieved sets, sets of multiples and supports");
  c_density->require_subcommand(1);
  SieveArgs sieve;
  auto* c_sieve = c_density->add_subcommand("sieve", "Exact density of a residue-class sieve");
  c_sieve->add_option("entries", sieve.entries, "entries b:r1|r2|...");
  c_sieve->add_option("--file", sieve.file, "CSV of b,omega[,c_b] rows");
  c_sieve->add_option("--retain", sieve.retain, "keep only the first r entries and certify the rest");
  c_sieve->add_option("-o,--out", sieve.out);

  MultiplesArgs mult;
  auto* c_mult = c_density->add_subcommand("multiples", "Exact density of the set of multiples of a finite set");
  c_mult->add_option("set", mult.values, "elements, comma or space separated")->required();
  c_mult->add_option("-o,--out", mult.out);

  EulerArgs euler, cnu, deficiency;
  auto* c_euler = c_density->add_subcommand("euler", "Density of supp(nu) as a certified Euler product");
  c_euler->add_option("spec", euler.spec)->required();
  c_euler->add_option("--primes", euler.primes, "prime cutoff P")->capture_default_str();
  c_euler->add_option("--tail-limit", euler.tail_limit, "explicit primes summed for the certificate (0: auto)");
  c_euler->add_option("--zero-test", euler.zero_test)->capture_default_str();
  c_euler->add_option("-o,--out", euler.out);

  auto* c_cnu = c_density->add_subcommand("cnu", "The constant C_nu");
  c_cnu->add_option("spec", cnu.spec)->required();
  c_cnu->add_option("--primes", cnu.primes, "prime cutoff P")->capture_default_str();
  c_cnu->add_option("--zero-test", cnu.zero_test)->capture_default_str();
  c_cnu->add_option("-o,--out", cnu.out);

  auto* c_def = c_density->add_subcommand("deficiency", "Partial sums of 1/p over primes outside supp(nu)");
  c_def->add_option("spec", deficiency.spec)->required();
  c_def->add_option("--primes", deficiency.primes, "prime cutoff P")->capture_default_str();
  c_def->add_option("--checkpoints", deficiency.checkpoints)->delimiter(',');
  c_def->add_option("--zero-test", deficiency.zero_test)->capture_default_str();
  c_def->add_option("-o,--out", deficiency.out);

  EmpiricalArgs emp, mean;
  auto* c_emp = c_density->add_subcommand("empirical", "Counting density of supp(h) at checkpoints");
  c_emp->add_option("spec", emp.spec)->required();
  c_emp->add_option("N", emp.n)->required();
  c_emp->add_option("--checkpoints", emp.checkpoints)->delimiter(',');
  c_emp->add_option("-o,--out", emp.out);
  add_table_options(c_emp, emp.table);

  auto* c_mean = app.add_subcommand("mean-value", "Partial means of |h| at checkpoints");
  c_mean->add_option("spec", mean.spec)->required();
  c_mean->add_option("N", mean.n)->required();
  c_mean->add_option("--checkpoints", mean.checkpoints)->delimiter(',');
  c_mean->add_option("-o,--out", mean.out);
  add_table_options(c_mean, mean.table);

  PairArgs pair;
  auto* c_pair = app.add_subcommand("pair", "Build g = f * nu and run the requested analyses");
  c_pair->add_option("f", pair.f)->required();
  c_pair->add_option("nu", pair.nu)->required();
  c_pair->add_option("N", pair.n)->required();
  c_pair->add_option("--density-x", pair.density_x, "evaluation point x <= N (default N)");
  c_pair->add_option("--checkpoints", pair.checkpoints, "comma separated ladder below x")->delimiter(',');
  c_pair->add_flag("--mean-value", pair.mean_value, "partial means of |g|");
  c_pair->add_flag("--classes", pair.classes, "(S, T) class decomposition");
  c_pair->add_flag("--verify-bound", pair.verify_bound, "density lower bound C_nu / sum 1/n");
  c_pair->add_flag("--uncertainty", pair.uncertainty, "1/n partial sums over both supports");
  c_pair->add_flag("--convergence", pair.convergence, "lambda_y over the --truncate grid with drift bounds");
  c_pair->add_option("--truncate", pair.truncate, "truncation points y for g_y")->delimiter(',');
  c_pair->add_option("--primes", pair.primes, "prime cutoff for C_nu")->capture_default_str();
  c_pair->add_option("--slack", pair.slack, "absolute slack on density comparisons")->capture_default_str();
  c_pair->add_option("--f-support-tail", pair.f_support_tail, "unknown | finite | bounded:<T>");
  c_pair->add_option("--g-support-tail", pair.g_support_tail, "unknown | finite | bounded:<T>");
  c_pair->add_option("--f-weighted-tail", pair.f_weighted_tail, "unknown | finite | bounded:<T>");
  c_pair->add_flag("--no-roundtrip", pair.no_roundtrip, "skip the g * nu^-1 == f check");
  c_pair->add_option("--out-dir", pair.out_dir, "write report.csv and summary.txt here");
  add_table_options(c_pair, pair.table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_tab->parsed()) cmd_tabulate(tab, out);
    if (c_conv->parsed()) cmd_convolve(conv, out);
    if (c_inv->parsed()) cmd_invert(inv, out);
    if (c_sieve->parsed()) cmd_sieve(sieve, out);
    if (c_mult->parsed()) cmd_multiples(mult, out);
    if (c_euler->parsed()) cmd_euler(euler, out);
    if (c_cnu->parsed()) cmd_cnu(cnu, out);
    if (c_def->parsed()) cmd_deficiency(deficiency, out);
    if (c_emp->parsed()) cmd_empirical(emp, out);
    if (c_mean->parsed()) cmd_mean_value(mean, out);
    if (c_pair->parsed()) cmd_pair(pair, out);
  } catch (const SpecError& e) {
    return report_error(err, "spec error", e, 2);
  } catch (const HypothesisError& e) {
    return report_error(err, "hypothesis violation", e, 3);
  } catch (const ComplexityError& e) {
    return report_error(err, "complexity cap", e, 4);
  } catch (const std::exception& e) {
    return report_error(err, "error", e, 1);
  }
  return 0;
}

}  // namespace arithconv
