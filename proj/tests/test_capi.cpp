#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <string>

#include "skewtab/skewtab.h"

namespace {

struct Handle {
  skewtab_partition* p = nullptr;
  ~Handle() { skewtab_partition_free(p); }
};

struct Str {
  char* s = nullptr;
  ~Str() { skewtab_string_free(s); }
  std::string get() const { return s ? s : "<null>"; }
};

Handle parse(const char* text) {
  Handle h;
  REQUIRE(skewtab_partition_parse(text, &h.p) == SKEWTAB_OK);
  return h;
}

}  // namespace

TEST_CASE("c api: parse and stringify") {
  Handle mu = parse("3,1^3");
  Str text;
  CHECK(skewtab_partition_to_string(mu.p, &text.s) == SKEWTAB_OK);
  CHECK(text.get() == "3,1,1,1");

  skewtab_partition* bad = nullptr;
  CHECK(skewtab_partition_parse("2,3", &bad) == SKEWTAB_PARSE_ERROR);
  CHECK(bad == nullptr);
  CHECK(std::strlen(skewtab_last_error()) > 0);
  CHECK(skewtab_partition_parse(nullptr, &bad) == SKEWTAB_INVALID_ARGUMENT);
}

TEST_CASE("c api: hook count") {
  Handle mu = parse("3,2,1");
  Str value;
  CHECK(skewtab_hook_count(mu.p, &value.s) == SKEWTAB_OK);
  CHECK(value.get() == "16");
}

TEST_CASE("c api: skew counts per method") {
  Handle mu = parse("3,2,1");
  for (const char* method : {"closed", "determinant", "enumerate", "frobenius"}) {
    Str value;
    INFO(method);
    CHECK(skewtab_skew_count(mu.p, 3, method, 0, &value.s) == SKEWTAB_OK);
    CHECK(value.get() == "2");
  }
  Str value;
  CHECK(skewtab_skew_count(mu.p, 4, "closed", 0, &value.s) == SKEWTAB_DOMAIN_ERROR);
  CHECK(skewtab_skew_count(mu.p, 0, "closed", 0, &value.s) == SKEWTAB_DOMAIN_ERROR);
  CHECK(skewtab_skew_count(mu.p, 3, "bogus", 0, &value.s) == SKEWTAB_UNSUPPORTED);

  Handle wide = parse("8,8");
  CHECK(skewtab_skew_count(wide.p, 2, "enumerate", 5, &value.s) == SKEWTAB_CAP_EXCEEDED);
  CHECK(skewtab_skew_count(wide.p, 5, "closed", 0, &value.s) == SKEWTAB_UNSUPPORTED);
  Str det, frob;
  CHECK(skewtab_skew_count(wide.p, 5, "determinant", 0, &det.s) == SKEWTAB_OK);
  CHECK(skewtab_skew_count(wide.p, 5, "frobenius", 0, &frob.s) == SKEWTAB_OK);
  CHECK(det.get() == frob.get());
}

TEST_CASE("c api: kostka") {
  Handle mu = parse("3,2,1");
  Str value;
  CHECK(skewtab_kostka(mu.p, "3,1^3", 0, &value.s) == SKEWTAB_OK);
  CHECK(value.get() == "2");
  Str general;
  CHECK(skewtab_kostka(mu.p, "2,2,1,1", 0, &general.s) == SKEWTAB_OK);
  // K((3,2,1),(2,2,1,1)): counted independently by hand once, frozen here
  CHECK(general.get() == "4");
  Str bad;
  CHECK(skewtab_kostka(mu.p, "2,1", 0, &bad.s) == SKEWTAB_DOMAIN_ERROR);
  Handle two = parse("1,1");
  Str zero;
  CHECK(skewtab_kostka(two.p, "2", 0, &zero.s) == SKEWTAB_OK);
  CHECK(zero.get() == "0");
}

TEST_CASE("c api: characters") {
  Handle mu = parse("3,2,1");
  Str lassalle, mn;
  CHECK(skewtab_character(mu.p, "3,1^3", "lassalle", &lassalle.s) == SKEWTAB_OK);
  CHECK(lassalle.get() == "-2");
  CHECK(skewtab_character(mu.p, "3", "mn", &mn.s) == SKEWTAB_OK);
  CHECK(mn.get() == "-2");

  Handle small = parse("2,1");
  Str v;
  CHECK(skewtab_character(small.p, "2,1", "lassalle", &v.s) == SKEWTAB_OK);
  CHECK(v.get() == "0");
  Str unsupported;
  CHECK(skewtab_character(mu.p, "3,2,1", "lassalle", &unsupported.s) == SKEWTAB_UNSUPPORTED);
  Str mismatch;
  CHECK(skewtab_character(mu.p, "7", "mn", &mismatch.s) == SKEWTAB_DOMAIN_ERROR);
}

TEST_CASE("c api: table") {
  const unsigned ms[] = {2};
  Str csv;
  REQUIRE(skewtab_table(4, ms, 1, "csv", &csv.s) == SKEWTAB_OK);
  const std::string text = csv.get();
  CHECK(text.rfind("mu,f,f_skew_2\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  Str bad;
  CHECK(skewtab_table(4, ms, 1, "yaml", &bad.s) == SKEWTAB_UNSUPPORTED);
  CHECK(skewtab_table(0, ms, 1, "csv", &bad.s) == SKEWTAB_DOMAIN_ERROR);
}

TEST_CASE("c api: verify") {
  Str json;
  long failures = -1;
  CHECK(skewtab_verify("arith", 0, 0, &json.s, &failures) == SKEWTAB_OK);
  CHECK(failures == 0);
  CHECK(json.get().find("\"suite\": \"arith\"") != std::string::npos);
  Str bad;
  CHECK(skewtab_verify("bogus", 0, 0, &bad.s, &failures) == SKEWTAB_UNSUPPORTED);
}

TEST_CASE("c api: status names") {
  CHECK(std::string(skewtab_status_name(SKEWTAB_OK)) == "ok");
  CHECK(std::string(skewtab_status_name(SKEWTAB_CAP_EXCEEDED)) == "enumeration cap exceeded");
  CHECK(std::string(skewtab_version()).size() > 0);
}
