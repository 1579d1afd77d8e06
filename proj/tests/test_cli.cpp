#include "doctest.h"

#include "qfp/cli.hpp"
#include "qfp/serialization.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qfp;
using namespace qfp::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "qfp");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("compute examples") {
  auto r = call({"compute", "fib", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1 + q + q^2 + q^3 + q^4\n");
  CHECK(call({"compute", "pell", "0"}).out == "0\n");
  r = call({"compute", "fib-hat", "3", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(R"({"coeffs":["1","0","1"]})"));
  r = call({"compute", "pell-hat", "2", "--format", "csv"});
  REQUIRE(lines(r.out).size() >= 2);
  CHECK(lines(r.out)[0] == "exponent,coefficient");
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"compute", "lucas", "3"}).code == kExitUsage);
  CHECK(call({"compute", "fib"}).code == kExitUsage);
  CHECK(call({"compute", "fib", "-1"}).code == kExitUsage);
  CHECK(call({"compute", "fib", "3", "--format", "xml"}).code == kExitUsage);
  CHECK(call({"verify", "--claims", "thm9.9"}).code == kExitUsage);
  CHECK(call({"verify", "--p-max", "0"}).code == kExitUsage);
  CHECK(call({"verify", "--jobs", "0"}).code == kExitUsage);
  CHECK(call({"table", "--p-max", "abc"}).code == kExitUsage);
  const auto r = call({"verify", "--claims", "nope"});
  CHECK(r.out.empty());
  CHECK(r.err.find("nope") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const auto r = call({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("parse_args defaults and claim lists") {
  std::ostringstream sink;
  auto c = parse_args({"qfp", "verify"}, sink);
  REQUIRE(c.has_value());
  CHECK(c->command == Command::verify);
  CHECK(c->p_max == 200);
  CHECK(c->n_max == 200);
  CHECK(c->jobs == 1);
  CHECK(c->format == Format::text);
  CHECK(c->claims.size() == all_claims().size());

  c = parse_args({"qfp", "verify", "--claims", "lemma3.2,thm1.1,thm1.1", "--format", "csv"}, sink);
  REQUIRE(c.has_value());
  CHECK(c->claims == std::vector<Claim>{Claim::thm1_1, Claim::lemma3_2});
  CHECK(c->format == Format::csv);

  c = parse_args({"qfp", "verify", "--claims", "all"}, sink);
  CHECK(c->claims.size() == all_claims().size());

  c = parse_args({"qfp", "compute", "pell-hat", "12", "--output", "x.txt"}, sink);
  CHECK(c->command == Command::compute);
  CHECK(c->sequence == SequenceVariant::pell_hat);
  CHECK(c->n == 12);
  CHECK(c->output_path == std::optional<std::string>{"x.txt"});
  CHECK_THROWS_AS(parse_args({"qfp", "verify", "--claims", "x"}, sink), UsageError);
}

TEST_CASE("verify examples") {
  auto r = call({"verify", "--claims", "thm1.3", "--p-max", "50"});
  CHECK(r.code == kExitOk);
  auto out = lines(r.out);
  REQUIRE(out.size() == 14 * 3 + 1);
  CHECK(out.back() == "42 reports, 42 passed (0 skipped), 0 failed");
  CHECK(out[0].rfind("PASS thm1.3/(1.9) p=3", 0) == 0);

  r = call({"verify", "--claims", "identity2.1", "--n-max", "100", "--format", "json"});
  CHECK(r.code == kExitOk);
  out = lines(r.out);
  REQUIRE(out.size() == 101);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto j = nlohmann::json::parse(out[i]);
    CHECK(j["claim_id"] == "identity(2.1)");
    CHECK(j["params"]["n"] == i);
    CHECK(j["passed"] == true);
  }

  r = call({"verify", "--claims", "thm1.1", "--p-max", "5", "--no-timing"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "PASS thm1.1/(1.4) p=3\n"
        "PASS thm1.1/(1.5) p=3\n"
        "SKIP thm1.1/(1.4) p=5  (p = 5 excluded)\n"
        "SKIP thm1.1/(1.5) p=5  (p = 5 excluded)\n"
        "4 reports, 4 passed (2 skipped), 0 failed\n");
}

TEST_CASE("verify output is reproducible without timing") {
  const std::vector<std::string> base{"verify", "--p-max", "40", "--n-max", "15", "--no-timing"};
  for (const char* format : {"json", "csv", "text"}) {
    auto a = base, b = base;
    a.insert(a.end(), {"--format", format});
    b.insert(b.end(), {"--format", format, "--jobs", "3"});
    const auto ra = call(a), rb = call(b);
    CAPTURE(format);
    CHECK(ra.code == kExitOk);
    CHECK(rb.code == kExitOk);
    CHECK(ra.out == rb.out);
  }
  auto r = call({"verify", "--claims", "classical", "--p-max", "13", "--format", "csv", "--no-timing"});
  const auto out = lines(r.out);
  REQUIRE(out.size() == 1 + 5 * 4);
  CHECK(out[0] == "claim_id,params,passed,skipped,oracle_agreed,elapsed_ms,lhs,rhs,note");
  CHECK(out[1] == "classical/(1.1),p=3,true,false,true,0,2,2,");
}

TEST_CASE("failing reports give exit 1") {
  VerificationReport good;
  good.claim_id = "lemma3.2";
  good.params["p"] = 3;
  good.passed = true;
  VerificationReport bad = good;
  bad.passed = false;
  bad.lhs = Polynomial{1, 2};
  bad.rhs = Polynomial{1};
  RunConfig config;
  config.timing = false;

  std::ostringstream ok_out;
  const std::vector<VerificationReport> ok{good};
  CHECK(write_reports(ok, config, ok_out) == kExitOk);

  std::ostringstream out;
  const std::vector<VerificationReport> mixed{good, bad};
  CHECK(write_reports(mixed, config, out) == kExitFailed);
  CHECK(out.str() ==
        "PASS lemma3.2 p=3\n"
        "FAIL lemma3.2 p=3\n"
        "    lhs: 1 + 2*q\n"
        "    rhs: 1\n"
        "2 reports, 1 passed (0 skipped), 1 failed\n");

  config.format = Format::json;
  std::ostringstream js;
  CHECK(write_reports(mixed, config, js) == kExitFailed);
  const auto second = nlohmann::json::parse(lines(js.str())[1]);
  CHECK(second["passed"] == false);
  CHECK(second["elapsed_ms"] == 0);
}

TEST_CASE("long sides are elided in text output") {
  VerificationReport bad;
  bad.claim_id = "identity(3.1)";
  bad.params["n"] = 1;
  std::vector<Integer> c(400, Integer(7));
  bad.lhs = Polynomial(std::move(c));
  RunConfig config;
  config.timing = false;
  std::ostringstream out;
  write_reports(std::vector<VerificationReport>{bad}, config, out);
  const auto l = lines(out.str());
  REQUIRE(l.size() == 4);
  CHECK(l[1].size() < 240);
  CHECK(l[1].find(" chars)") != std::string::npos);
}

TEST_CASE("table examples") {
  auto r = call({"table", "--p-max", "7", "--format", "csv"});
  CHECK(r.code == kExitOk);
  auto out = lines(r.out);
  REQUIRE(out.size() == 4);
  CHECK(out[1].rfind("3,", 0) == 0);
  CHECK(out[2] == "5,0,-1,,,,,,-1,-q^3,1,1");
  CHECK(out[3].rfind("7,", 0) == 0);

  r = call({"table", "--p-max", "3", "--format", "json"});
  out = lines(r.out);
  REQUIRE(out.size() == 1);
  const auto row = nlohmann::json::parse(out[0]);
  CHECK(row["p"] == 3);
  // -q^2 is not reduced for a degree 2 modulus; its canonical form is 1 + q.
  CHECK(row["fib_p"] == nlohmann::json::parse(R"({"coeffs":["1","1"]})"));
  CHECK(row["pell_p_scaled"] == nlohmann::json::parse(R"({"coeffs":["-1"]})"));

  r = call({"table", "--p-max", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  r = call({"table", "--p-max", "2", "--format", "csv"});
  CHECK(lines(r.out).size() == 1);
}

TEST_CASE("--output writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "qfp_cli_test_output.txt";
  std::filesystem::remove(path);
  const auto r = call({"compute", "fib", "5", "--output", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "1 + q + q^2 + q^3 + q^4\n");
  std::filesystem::remove(path);

  CHECK(call({"compute", "fib", "5", "--output", "/nonexistent-dir/x.txt"}).code == kExitUsage);
}
