#include <doctest.h>

#include <algorithm>
#include <string>

#include "core/errors.hpp"
#include "core/table.hpp"
#include "core/verify.hpp"

using namespace skewtab;

TEST_CASE("every suite passes at reduced depth") {
  VerifyOptions opt;
  opt.max_n = 7;
  for (const std::string& name : suite_names()) {
    if (name == "all") continue;
    const VerificationReport rep = run_suite(name, opt);
    INFO(name);
    CHECK(rep.passed());
    CHECK(rep.cases_run() > 0);
    CHECK(rep.suite() == name);
  }
}

TEST_CASE("combined suite aggregates") {
  VerifyOptions opt;
  opt.max_n = 5;
  const VerificationReport all = run_suite("all", opt);
  CHECK(all.passed());
  long total = 0;
  for (const std::string& name : suite_names())
    if (name != "all") total += run_suite(name, opt).cases_run();
  CHECK(all.cases_run() == total);
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_suite("bogus"), UnsupportedError);
}

TEST_CASE("report json carries the expected fields") {
  VerifyOptions opt;
  opt.max_n = 4;
  const std::string json = run_suite("prop1", opt).to_json();
  for (const char* key : {"\"suite\"", "\"cases_run\"", "\"failures\"", "\"failures_total\"",
                          "\"elapsed_ms\""})
    CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("table rendering") {
  const std::string csv = render_table(4, {2}, "csv");
  CHECK(csv.substr(0, csv.find('\n')) == "mu,f,f_skew_2");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + p(4) rows
  CHECK(csv.find("\"3,1\",3,2") != std::string::npos);
  CHECK(csv.find("\"4\",1,1") != std::string::npos);
  CHECK(csv.find("\"1,1,1,1\",1,0") != std::string::npos);

  // n = 1 with an oversized m: the skew column is the 0 marker
  const std::string tiny = render_table(1, {2}, "csv");
  CHECK(tiny == "mu,f,f_skew_2\n\"1\",1,0\n");

  // deterministic output
  CHECK(render_table(6, {2, 3, 4}, "csv") == render_table(6, {2, 3, 4}, "csv"));
  // m list is deduplicated and sorted
  CHECK(render_table(6, {4, 2, 3, 2}, "csv") == render_table(6, {2, 3, 4}, "csv"));

  const std::string json = render_table(4, {2}, "json");
  CHECK(json.find("\"rows\"") != std::string::npos);
  CHECK(json.find("\"f_skew_2\"") != std::string::npos);

  CHECK_THROWS_AS(render_table(0, {2}, "csv"), DomainError);
  CHECK_THROWS_AS(render_table(3, {2}, "yaml"), UnsupportedError);
}
