#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hermite/cli.hpp"
#include "hermite/factorize.hpp"
#include "hermite/schemefile.hpp"

using namespace hermite;

namespace {

const std::string kScheme = std::string(HERMITE_SCHEMES_DIR) + "/h1.scheme";

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << content;
}

size_t count_lines(const std::string& text) {
  size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("certify reports the certificate") {
  auto r = run({"certify", "--scheme", kScheme, "--param", "theta=1/32",
                "--param", "omega=-1/10", "--order", "4", "--max-iter", "6"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "C4 certified with N=6 (norm 2311831/3200000)"));
  CHECK(contains(r.out, "spectral condition of order 4 holds"));
  CHECK(contains(r.out, "factor support: [-4, 2]"));

  auto kv = run({"certify", "--scheme", kScheme, "--param", "theta=1/32",
                 "--param", "omega=-1/10", "--order", "4", "--max-iter", "6",
                 "--kv"});
  CHECK(kv.code == 0);
  CHECK(contains(kv.out, "certified=true"));
  CHECK(contains(kv.out, "certificate.iterations=6"));
  CHECK(contains(kv.out, "certificate.norm=2311831/3200000"));
  CHECK(contains(kv.out, "parameters=omega=-1/10, theta=1/32"));
}

TEST_CASE("certify failures carry the stage") {
  auto capped = run({"certify", "--scheme", kScheme, "--param", "theta=1/32",
                     "--param", "omega=-1/10", "--order", "4", "--max-iter", "5"});
  CHECK(capped.code == 1);
  CHECK(contains(capped.out, "no contractivity certificate up to N=5"));

  auto bad = run({"certify", "--scheme", kScheme, "--param", "theta=1/16",
                  "--param", "omega=-1/10", "--order", "4"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "spectral condition of order 4 fails"));
}

TEST_CASE("reproduce prints the non-equivalence sentence") {
  auto r = run({"reproduce", "--scheme", kScheme, "--param", "theta=1/32",
                "--param", "omega=-1/10", "--degree", "4"});
  CHECK(r.code == 1);
  CHECK(contains(r.out,
                 "reproduction fails at degree 4; spectral condition of order 4 "
                 "holds"));

  auto ok = run({"reproduce", "--scheme", kScheme, "--param", "theta=1/32",
                 "--param", "omega=-1/10", "--degree", "3"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "reproduces polynomials up to degree 3"));
}

TEST_CASE("spectral prints the polynomial family") {
  auto r = run({"spectral", "--scheme", kScheme, "--param", "theta=1/32",
                "--param", "omega=0", "--order", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "P_4 = x^4/24 + 1/360"));

  auto kv = run({"spectral", "--scheme", kScheme, "--param", "theta=1/32",
                 "--param", "omega=0", "--order", "4", "--kv"});
  CHECK(kv.code == 0);
  CHECK(contains(kv.out, "satisfied=true"));
  CHECK(contains(kv.out, "P4=x^4/24 + 1/360"));

  auto fail = run({"spectral", "--scheme", kScheme, "--param", "theta=1/16",
                   "--param", "omega=-1/10", "--order", "4"});
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "spectral condition of order 4 fails"));
}

TEST_CASE("coeffs prints the tables") {
  auto g = run({"coeffs", "--gregory", "6"});
  CHECK(g.code == 0);
  CHECK(g.out ==
        "G_0 = 1\nG_1 = 1/2\nG_2 = -1/12\nG_3 = 1/24\nG_4 = -19/720\n"
        "G_5 = 3/160\nG_6 = -863/60480\n");

  auto s = run({"coeffs", "--stirling1", "5", "2", "--stirling2", "5", "3"});
  CHECK(s.code == 0);
  CHECK(s.out == "[5 2] = 50\n{5 3} = 25\n");

  auto none = run({"coeffs"});
  CHECK(none.code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"spectral", "--scheme", kScheme}).code == 2);
  CHECK(run({"certify", "--scheme", kScheme, "--param", "theta", "--order", "4"})
            .code == 2);
  CHECK(run({"certify", "--scheme", kScheme, "--param", "theta=1/32", "--order",
             "4", "--sweep", "omega=0:1"})
            .code == 2);
  CHECK(run({"certify", "--scheme", kScheme, "--param", "theta=1/32", "--order",
             "4", "--sweep", "omega=-0.1:-0.2:0.01"})
            .code == 2);
  CHECK(run({"spectral", "--scheme", temp_path("hermite_cli_missing.scheme"),
             "--order", "2"})
            .code == 2);
  CHECK(run({"factorize", "--scheme", kScheme, "--param", "theta=1/32",
             "--param", "omega=-1/10"})
            .code == 2);

  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "Usage"));
}

TEST_CASE("factorize writes factor schemes that round trip") {
  MatrixMask a = load_scheme(
      kScheme, {{"theta", Rational(1, 32)}, {"omega", Rational(-1, 10)}});

  std::string taylor_path = temp_path("hermite_cli_taylor.scheme");
  auto r = run({"factorize", "--scheme", kScheme, "--param", "theta=1/32",
                "--param", "omega=-1/10", "--taylor", "--out", taylor_path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "wrote "));
  TaylorFactorization t = factorize_taylor(a);
  REQUIRE(t.success());
  SchemeFile written = load_scheme_file(taylor_path);
  CHECK(written.name == "h1_taylor");
  CHECK(evaluate_scheme(written, {}) == *t.mask);

  std::string q_path = temp_path("hermite_cli_q4.scheme");
  auto r4 = run({"factorize", "--scheme", kScheme, "--param", "theta=1/32",
                 "--param", "omega=-1/10", "--order", "4", "--out", q_path});
  CHECK(r4.code == 0);
  FactorizeOutcome out4 = factorize_gregory(a, 4);
  REQUIRE(out4.success());
  SchemeFile w4 = load_scheme_file(q_path);
  CHECK(w4.name == "h1_q4");
  CHECK(evaluate_scheme(w4, {}) == out4.factorization->quotient());

  // without --out the rendering goes to stdout
  auto printed = run({"factorize", "--scheme", kScheme, "--param", "theta=1/32",
                      "--param", "omega=-1/10", "--taylor"});
  CHECK(printed.code == 0);
  CHECK(contains(printed.out, "name=h1_taylor"));
}

TEST_CASE("factorize reports non-divisible entries") {
  auto r = run({"factorize", "--scheme", kScheme, "--param", "theta=1/16",
                "--param", "omega=-1/10", "--order", "4"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "factorization fails at entry b21"));
}

TEST_CASE("contractivity of a scaled factor scheme") {
  std::string q_path = temp_path("hermite_cli_q4b.scheme");
  auto wrote = run({"factorize", "--scheme", kScheme, "--param", "theta=1/32",
                    "--param", "omega=-1/10", "--order", "4", "--out", q_path});
  REQUIRE(wrote.code == 0);

  auto good = run({"contractivity", "--scheme", q_path, "--max-iter", "8",
                   "--scale", "1/2"});
  CHECK(good.code == 0);
  CHECK(contains(good.out, "contractive: norm 2311831/3200000 < 1 at N=6"));

  auto bad = run({"contractivity", "--scheme", q_path, "--max-iter", "4",
                  "--scale", "1/2"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "not contractive up to N=4"));
}

TEST_CASE("refine emits decimal csv on the valid window") {
  std::string data_path = temp_path("hermite_cli_linear.csv");
  std::string content = "j,f,df\n";
  for (int j = -8; j <= 8; ++j)
    content += std::to_string(j) + "," + std::to_string(j) + ",1\n";
  write_file(data_path, content);

  auto r = run({"refine", "--scheme", kScheme, "--param", "theta=1/32",
                "--param", "omega=-1/10", "--levels", "1", "--data", data_path});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "level 1 valid window [-14, 14]"));
  CHECK(r.out.rfind("x,f,df\n", 0) == 0);
  CHECK(count_lines(r.out) == 30);  // header + 29 rows
  CHECK(contains(r.out, "-7,-7,1\n"));
  CHECK(contains(r.out, "0.5,0.5,1\n"));
  CHECK(contains(r.out, "7,7,1\n"));

  std::string out_path = temp_path("hermite_cli_refined.csv");
  auto w = run({"refine", "--scheme", kScheme, "--param", "theta=1/32",
                "--param", "omega=-1/10", "--levels", "1", "--data", data_path,
                "--out", out_path});
  CHECK(w.code == 0);
  CHECK(contains(w.out, "wrote "));
  std::ifstream f(out_path);
  std::stringstream buffer;
  buffer << f.rdbuf();
  CHECK(buffer.str() == r.out);
}

TEST_CASE("refine warns when the valid window is empty") {
  std::string data_path = temp_path("hermite_cli_single.csv");
  write_file(data_path, "0,1,0\n");
  auto r = run({"refine", "--scheme", kScheme, "--param", "theta=1/32",
                "--param", "omega=-1/10", "--levels", "3", "--data", data_path});
  CHECK(r.code == 0);
  CHECK(r.out == "x,f,df\n");
  CHECK(contains(r.err, "warning: the valid window at level 3 is empty"));
}

TEST_CASE("refine rejects malformed data files") {
  std::string two = temp_path("hermite_cli_two.csv");
  write_file(two, "1,2\n");
  CHECK(run({"refine", "--scheme", kScheme, "--param", "theta=1/32", "--param",
             "omega=-1/10", "--levels", "1", "--data", two})
            .code == 2);

  std::string dup = temp_path("hermite_cli_dup.csv");
  write_file(dup, "0,1,1\n0,2,2\n");
  CHECK(run({"refine", "--scheme", kScheme, "--param", "theta=1/32", "--param",
             "omega=-1/10", "--levels", "1", "--data", dup})
            .code == 2);

  std::string frac = temp_path("hermite_cli_frac.csv");
  write_file(frac, "0.5,1,1\n");
  CHECK(run({"refine", "--scheme", kScheme, "--param", "theta=1/32", "--param",
             "omega=-1/10", "--levels", "1", "--data", frac})
            .code == 2);

  CHECK(run({"refine", "--scheme", kScheme, "--param", "theta=1/32", "--param",
             "omega=-1/10", "--levels", "1", "--data",
             temp_path("hermite_cli_missing.csv")})
            .code == 2);
}

TEST_CASE("certify sweeps print one ordered line per value") {
  std::string expect =
      "omega=-51/500: C4 certified with N=6 (norm 1413862833332753/"
      "1562500000000000)\n"
      "omega=-1/10: C4 certified with N=6 (norm 2311831/3200000)\n";

  auto up = run({"certify", "--scheme", kScheme, "--param", "theta=1/32",
                 "--order", "4", "--max-iter", "6", "--sweep",
                 "omega=-0.102:-0.1:0.002"});
  CHECK(up.code == 0);
  CHECK(up.out == expect);

  auto down = run({"certify", "--scheme", kScheme, "--param", "theta=1/32",
                   "--order", "4", "--max-iter", "6", "--sweep",
                   "omega=-0.1:-0.102:-0.002"});
  CHECK(down.code == 0);
  CHECK(down.out == expect);
}

TEST_CASE("sweeps with a failing point exit nonzero") {
  auto r = run({"certify", "--scheme", kScheme, "--param", "theta=1/32",
                "--order", "4", "--max-iter", "6", "--sweep",
                "omega=-0.1:-0.096:0.004"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "omega=-1/10: C4 certified with N=6"));
  CHECK(contains(r.out,
                 "omega=-12/125: no contractivity certificate up to N=6 "
                 "(final norm 121051699635941/97656250000000)"));
}

TEST_SUITE_END();
