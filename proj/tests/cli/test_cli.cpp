#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arith/errors.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "spec_file.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "arithconv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = arithconv::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "arithconv_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string l;
  while (std::getline(ss, l)) out.push_back(l);
  return out;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("rule expressions") {
    arithconv::RuleSet rules;
    rules.add("p=2 & k>=2: 0");
    rules.add("p%4=1: 1/p^k");
    rules.add("p%4=3: -(k+1)/2");
    rules.add("otherwise: 2^(0-k) * 3 - 1");
    CHECK(rules(2, 3).rational() == arith::Rational(0));
    CHECK(rules(5, 2).rational() == arith::Rational(1, 25));
    CHECK(rules(7, 3).rational() == arith::Rational(-2));
    CHECK(rules(2, 1).rational() == arith::Rational(1, 2));

    arithconv::RuleSet partial;
    partial.add("k=1: 1");
    CHECK_THROWS_AS(partial(3, 2), arith::SpecError);
    arithconv::RuleSet bad;
    CHECK_THROWS_AS(bad.add("p=2 1"), arith::SpecError);
    CHECK_THROWS_AS(bad.add("q=2: 1"), arith::SpecError);
    CHECK_THROWS_AS(bad.add("p=2: 1 +"), arith::SpecError);
    CHECK_THROWS_AS(bad.add("p=2: 1/"), arith::SpecError);
  }

  TEST_CASE("spec file parsing") {
    std::istringstream in(
        "# odd squarefree\nname = odd_mu\nkind = multiplicative\nrule = p=2: 0\nrule = k>=2: 0\n"
        "rule = otherwise: -1\nunsupported_tail = finite 2\ngrowth = bounded\n");
    auto src = arithconv::parse_function_source(in, "odd.spec");
    CHECK(src.name == "odd_mu");
    REQUIRE(src.multiplicative());
    CHECK(src.spec->unsupported_tail->kind == arith::UnsupportedPrimeTail::Kind::kFinite);
    CHECK(src.spec->growth == arith::Growth::kBounded);
    auto t = src.tabulate(10, arith::ValueMode::kExact, {});
    CHECK(t.at(3).rational() == arith::Rational(-1));
    CHECK(t.at(6).rational() == arith::Rational(0));

    std::istringstream table("name = f\nkind = table\nsupport_tail = finite\ntable:\nn,value\n1,1\n2,1/2\n");
    auto tab = arithconv::parse_function_source(table, "f.spec");
    CHECK_FALSE(tab.multiplicative());
    CHECK(tab.support_tail.kind == arith::pairs::TailDeclaration::Kind::kFinite);
    CHECK(tab.tabulate(4, arith::ValueMode::kExact, {}).at(2).rational() == arith::Rational(1, 2));
    CHECK_THROWS_AS(tab.require_spec("nu"), arith::NotMultiplicative);

    std::istringstream bad("name = f\ncolour = red\n");
    try {
      arithconv::parse_function_source(bad, "bad.spec");
      FAIL("expected SpecError");
    } catch (const arith::SpecError& e) {
      CHECK(contains(e.what(), "bad.spec:2:"));
    }
  }

  TEST_CASE("tabulate examples") {
    auto mu = cli({"tabulate", "builtin:mu", "10"});
    CHECK(mu.code == 0);
    CHECK(contains(mu.out, "\n4,0\n"));
    CHECK(cli({"tabulate", "builtin:epsilon", "3"}).out == "n,value\n1,1\n2,0\n3,0\n");
    auto spec = write_file("skip2.spec", "name = skip2\nrules = p=2: 0; otherwise: 1\n");
    auto r = cli({"tabulate", spec, "6"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "6,0");
  }

  TEST_CASE("convolve and invert") {
    auto d = cli({"convolve", "builtin:one", "builtin:one", "6"});
    CHECK(lines(d.out).back() == "6,4");
    CHECK(cli({"invert", "builtin:one", "10"}).out == cli({"tabulate", "builtin:mu", "10"}).out);
    auto t = cli({"convolve", "builtin:one", "builtin:one", "12", "--truncate", "2"});
    CHECK(lines(t.out).back() == "12,2");
  }

  TEST_CASE("density examples") {
    auto m = cli({"density", "multiples", "2,3"});
    CHECK(m.code == 0);
    CHECK(contains(m.out, "multiples_density,2/3,"));
    auto s = cli({"density", "sieve", "2:0"});
    CHECK(contains(s.out, "sieve_density,1/2,0.5,exact,,,"));
    auto s2 = cli({"density", "sieve", "2:0", "3:0"});
    CHECK(contains(s2.out, "sieve_density,1/3,"));
    auto c = cli({"density", "cnu", "builtin:mu", "--primes", "100000"});
    CHECK(contains(c.out, "c_nu,0.6079271018540267,"));
    auto e = cli({"density", "euler", "builtin:mu", "--primes", "100000"});
    CHECK(e.code == 0);
    CHECK(contains(e.out, "support_density,0.6079"));
  }

  TEST_CASE("truncated sieve from a file") {
    auto path = write_file("squares.csv", "# unlisted_tail=0.0106\n4,0,1/4\n9,0,1/9\n25,0,1/25\n49,0,1/49\n121,0,1/121\n");
    auto r = cli({"density", "sieve", "--file", path, "--retain", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "sieve_density_truncated,768/1225,"));
  }

  TEST_CASE("every report row carries provenance columns") {
    auto dir = scratch() / "pair_eps_mu";
    fs::remove_all(dir);
    auto r = cli({"pair", "builtin:eps", "builtin:mu", "20000", "--classes", "--mean-value", "--verify-bound",
                  "--uncertainty", "--convergence", "--truncate", "1,10", "--f-support-tail", "finite",
                  "--f-weighted-tail", "finite", "--primes", "1000", "--out-dir", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "supp(g) density: 0.608"));
    CHECK(slurp(dir / "summary.txt") == r.out);
    const auto report = slurp(dir / "report.csv");
    CHECK(report.find('\r') == std::string::npos);
    std::size_t columns = 0;
    for (const auto& l : lines(report)) {
      if (l.empty()) continue;
      if (l[0] == '#') {
        columns = 0;
        continue;
      }
      const auto n = static_cast<std::size_t>(std::count(l.begin(), l.end(), ',')) + 1;
      if (columns == 0) {
        CHECK(l.substr(l.size() - 32) == "mode,threshold,cutoff,tail_bound");
        columns = n;
      } else {
        CHECK(n == columns);
      }
    }
    CHECK_FALSE(fs::exists(dir / "report.csv.tmp"));
  }

  TEST_CASE("pair examples") {
    auto inv = cli({"pair", "builtin:mu", "builtin:one", "1000", "--density-x", "1000"});
    CHECK(contains(inv.out, "supp(g) density: 0.001 (1/1000)"));
    auto id = cli({"pair", "builtin:eps", "builtin:id", "100000", "--mean-value"});
    CHECK(contains(id.out, "mean |g| trend: no finite mean value"));
  }

  TEST_CASE("outputs are byte deterministic") {
    const std::vector<std::string> args{"pair",     "builtin:liouville", "builtin:mu", "5000", "--classes",
                                        "--mode",   "floating",          "--mean-value"};
    CHECK(cli(args).out == cli(args).out);
    CHECK(cli({"tabulate", "builtin:recip_id", "50", "--mode", "floating"}).out ==
          cli({"tabulate", "builtin:recip_id", "50", "--mode", "floating"}).out);
  }

  TEST_CASE("exit codes") {
    CHECK(cli({"tabulate", "does-not-exist.spec", "10"}).code == 2);
    CHECK(cli({"tabulate", "builtin:nope", "10"}).code == 2);
    CHECK(cli({"density", "sieve", "3:5"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    auto gap = write_file("gap.spec", "name = gap\nrule = k=1: 1\n");
    auto g = cli({"tabulate", gap, "10"});
    CHECK(g.code == 2);
    CHECK(contains(g.err, "p=2, k=2"));

    auto pow2 = write_file("pow2.spec", "name = pow2\nrules = p=2: 1; otherwise: 0\n");
    auto h = cli({"pair", pow2, "builtin:mu", "100", "--verify-bound"});
    CHECK(h.code == 3);
    CHECK(contains(h.err, "undeclared"));
    auto table_f = write_file("tab.spec", "name = t\ntable:\n1,1\n2,1\n");
    CHECK(cli({"pair", table_f, "builtin:mu", "100", "--verify-bound", "--f-support-tail", "finite"}).code == 3);
    CHECK(cli({"pair", "builtin:one", table_f, "100"}).code == 3);
    CHECK(cli({"invert", table_f, "10"}).code == 0);
    auto zero_f = write_file("zero.spec", "name = z\ntable:\n3,0\n");
    CHECK(cli({"pair", zero_f, "builtin:mu", "10"}).code == 3);
    CHECK(cli({"pair", "builtin:eps", "builtin:id", "100", "--convergence", "--f-weighted-tail", "finite"}).code == 3);
    CHECK(cli({"density", "cnu", "builtin:epsilon"}).code == 3);
    auto badnum = write_file("badnum.spec", "name = b\nrule = otherwise: 1.2.3\n");
    CHECK(cli({"tabulate", badnum, "5"}).code == 2);
    CHECK(cli({"pair", "builtin:eps", "builtin:mu", "10", "--f-support-tail", "bounded:lots"}).code == 2);
    CHECK(cli({"pair", "builtin:eps", "builtin:mu", "10", "--f-support-tail", "bounded:1e-3"}).code == 0);

    CHECK(cli({"tabulate", "builtin:mu", "20000000"}).code == 4);
    CHECK(cli({"density", "multiples", "2,3,5,7,11,13,17,19,23,29,31,37,41,43,47,53,59,61,67,71,73"}).code == 4);
  }

  TEST_CASE("max N override from the environment") {
    setenv("ARITHCONV_MAX_N", "100", 1);
    CHECK(arithconv::max_table_size() == 100);
    CHECK(cli({"tabulate", "builtin:mu", "101"}).code == 4);
    CHECK(cli({"tabulate", "builtin:mu", "100"}).code == 0);
    setenv("ARITHCONV_MAX_N", "lots", 1);
    CHECK(cli({"tabulate", "builtin:mu", "10"}).code == 2);
    unsetenv("ARITHCONV_MAX_N");
    CHECK(arithconv::max_table_size() == arithconv::kDefaultMaxN);
  }
}
