#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zetaverify/cli.hpp"

using zetaverify::cli::last_report_json;
using zetaverify::cli::run;

namespace {
int run_cli(std::initializer_list<std::string> args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = run(std::vector<std::string>(args), out, err);
  if (out_text) *out_text = out.str();
  return code;
}
}  // namespace

TEST_CASE("verify rep exits 0 and reports passing checks") {
  std::string text;
  int code = run_cli({"verify", "rep", "--max-ell", "5", "--format", "json"}, &text);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(text);
  CHECK(j["report"]["passed"].get<bool>());
  CHECK(j["report"]["results"].size() > 5);
  CHECK(j.contains("envelope") == false);  // timestamp lives beside report
  CHECK(j.contains("timestamp_unix_ms"));
}

TEST_CASE("corrupted-basis hook forces exit 1") {
  CHECK(run_cli({"verify", "rep", "--max-ell", "3", "--corrupt-basis"}) == 1);
}

TEST_CASE("verify barnes exits 0 at default precision") {
  std::string text;
  int code = run_cli({"verify", "barnes", "--count", "6", "--format", "text"}, &text);
  CHECK(code == 0);
  CHECK(text.find("[PASS]") != std::string::npos);
}

TEST_CASE("verify factorization: positive and negative controls") {
  CHECK(run_cli({"verify", "factorization", "--id", "sym2_x_sym2"}) == 0);
  CHECK(run_cli({"verify", "factorization", "--id", "triple_product"}) == 0);
  CHECK(run_cli({"verify", "factorization", "--id", "sym2_x_sym2", "--perturb"}) == 0);
  CHECK(run_cli({"verify", "factorization", "--id", "bogus"}) == 64);
}

TEST_CASE("verify membership (exact route) exits 0") {
  int code = run_cli({"verify", "membership", "--id", "rs", "--ell", "5", "--kappa", "3",
                      "--w-sigma", "0", "--w-pi", "1"});
  CHECK(code == 0);
  CHECK(run_cli({"verify", "membership", "--id", "adjoint", "--ell", "3"}) == 0);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run_cli({"eval", "whittaker", "--ell", "5", "--a1", "0", "--a2", "1"}) == 64);
  CHECK(run_cli({"eval", "whittaker", "--ell", "5"}) == 64);  // missing --a1/--a2
  CHECK(run_cli({"verify"}) == 64);
  CHECK(run_cli({"bogus"}) == 64);
}

TEST_CASE("eval whittaker prints the value with diagnostics") {
  std::string text;
  int code = run_cli({"eval", "whittaker", "--ell", "5", "--j", "3,0,2", "--a1", "1", "--a2",
                      "1", "--format", "json"},
                     &text);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(text);
  auto& res = j["report"]["results"][0];
  CHECK(res["value"]["im"].get<double>() ==
        doctest::Approx(7.3186773224242567e-8).epsilon(1e-10));
  CHECK(res["diagnostics"]["refine"].get<double>() < 1e-9);
}

TEST_CASE("reports are byte-identical across runs (determinism)") {
  std::string a, b;
  run_cli({"verify", "factorization", "--id", "sym2_x_sym2"}, &a);
  std::string report_a = last_report_json();
  run_cli({"verify", "factorization", "--id", "sym2_x_sym2"}, &b);
  std::string report_b = last_report_json();
  CHECK(report_a == report_b);
  CHECK(!report_a.empty());

  run_cli({"verify", "rep", "--max-ell", "3"});
  std::string rep_a = last_report_json();
  run_cli({"verify", "rep", "--max-ell", "3"});
  CHECK(rep_a == last_report_json());
}

TEST_CASE("out file receives the same payload") {
  namespace fs = std::filesystem;
  std::string path = "zv-cli-out-test.json";
  std::string text;
  run_cli({"verify", "factorization", "--id", "triple_product", "--out", path}, &text);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == text);
  fs::remove(path);
}
