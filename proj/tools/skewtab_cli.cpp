// Command-line front end. Everything goes through the public C API in
// skewtab/skewtab.h; exact values are printed as decimal strings inside
// JSON objects. Exit codes: 0 success, 1 verification failure, 2 usage or
// input error.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewtab/skewtab.h"

namespace {

struct PartitionHandle {
  skewtab_partition* p = nullptr;
  ~PartitionHandle() { skewtab_partition_free(p); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { skewtab_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

int report_failure(skewtab_status status) {
  std::fprintf(stderr, "error (%s): %s\n", skewtab_status_name(status), skewtab_last_error());
  return 2;
}

int run_count(const std::string& mu_text, unsigned m, const std::string& method,
              unsigned enum_cap) {
  PartitionHandle mu;
  if (auto st = skewtab_partition_parse(mu_text.c_str(), &mu.p)) return report_failure(st);
  OwnedString canon, value;
  if (auto st = skewtab_partition_to_string(mu.p, &canon.s)) return report_failure(st);
  if (auto st = skewtab_skew_count(mu.p, m, method.c_str(), enum_cap, &value.s))
    return report_failure(st);
  nlohmann::ordered_json out{
      {"mu", canon.str()}, {"m", m}, {"method", method}, {"value", value.str()}};
  std::printf("%s\n", out.dump().c_str());
  return 0;
}

int run_kostka(const std::string& mu_text, const std::string& weight, unsigned enum_cap) {
  PartitionHandle mu;
  if (auto st = skewtab_partition_parse(mu_text.c_str(), &mu.p)) return report_failure(st);
  OwnedString canon, value;
  if (auto st = skewtab_partition_to_string(mu.p, &canon.s)) return report_failure(st);
  if (auto st = skewtab_kostka(mu.p, weight.c_str(), enum_cap, &value.s))
    return report_failure(st);
  nlohmann::ordered_json out{{"mu", canon.str()}, {"weight", weight}, {"value", value.str()}};
  std::printf("%s\n", out.dump().c_str());
  return 0;
}

int run_character(const std::string& mu_text, const std::string& cycle,
                  const std::string& method) {
  PartitionHandle mu;
  if (auto st = skewtab_partition_parse(mu_text.c_str(), &mu.p)) return report_failure(st);
  OwnedString canon, value;
  if (auto st = skewtab_partition_to_string(mu.p, &canon.s)) return report_failure(st);
  if (auto st = skewtab_character(mu.p, cycle.c_str(), method.c_str(), &value.s))
    return report_failure(st);
  nlohmann::ordered_json out{
      {"mu", canon.str()}, {"cycle_type", cycle}, {"method", method}, {"value", value.str()}};
  std::printf("%s\n", out.dump().c_str());
  return 0;
}

int run_table(unsigned n, const std::vector<unsigned>& ms, const std::string& format) {
  OwnedString text;
  if (auto st = skewtab_table(n, ms.data(), ms.size(), format.c_str(), &text.s))
    return report_failure(st);
  std::fputs(text.s, stdout);
  return 0;
}

int run_verify(const std::string& suite, int max_n, unsigned enum_cap) {
  OwnedString json;
  long failures = 0;
  if (auto st = skewtab_verify(suite.c_str(), max_n, enum_cap, &json.s, &failures))
    return report_failure(st);
  std::printf("%s\n", json.s);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact skew tableau counts, Kostka numbers and symmetric group characters"};
  app.require_subcommand(1);

  std::string mu_text, weight_text, cycle_text;
  std::string count_method = "closed", char_method = "mn", format = "csv", suite = "all";
  unsigned m = 2, table_n = 1, enum_cap = 0;
  int max_n = 0;
  std::vector<unsigned> m_list;

  auto* count = app.add_subcommand("count", "f^{mu/(m)} for a single partition");
  count->add_option("--mu", mu_text, "outer partition, e.g. 3,2,1")->required();
  count->add_option("--m", m, "cells removed from the first row")->required();
  count->add_option("--method", count_method, "closed|determinant|enumerate|frobenius");
  count->add_option("--enum-cap", enum_cap, "cell cap for --method enumerate");

  auto* kostka = app.add_subcommand("kostka", "Kostka number K(mu, weight)");
  kostka->add_option("--mu", mu_text, "shape, e.g. 3,2,1")->required();
  kostka->add_option("--weight", weight_text, "weight, e.g. 3,1^3")->required();
  kostka->add_option("--enum-cap", enum_cap, "cell cap for non-hook weights");

  auto* character = app.add_subcommand("character", "character value chi^mu(cycle type)");
  character->add_option("--mu", mu_text, "shape, e.g. 3,2,1")->required();
  character->add_option("--cycle-type", cycle_text, "cycle type, e.g. 3,1^3 (1s optional)")
      ->required();
  character->add_option("--method", char_method, "lassalle|mn");

  auto* table = app.add_subcommand("table", "f^mu and f^{mu/(m)} over all partitions of n");
  table->add_option("--n", table_n, "size of the partitions")->required();
  table->add_option("--m", m_list, "strip sizes, e.g. 2,3,4")->delimiter(',');
  table->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "arith|conjugate|prop1|characters|closed-forms|all");
  verify->add_option("--max-n", max_n, "largest n swept (0 = per-suite defaults)");
  verify->add_option("--enum-cap", enum_cap, "cell cap for enumeration-backed checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (count->parsed()) return run_count(mu_text, m, count_method, enum_cap);
  if (kostka->parsed()) return run_kostka(mu_text, weight_text, enum_cap);
  if (character->parsed()) return run_character(mu_text, cycle_text, char_method);
  if (table->parsed()) return run_table(table_n, m_list, format);
  if (verify->parsed()) return run_verify(suite, max_n, enum_cap);
  return 2;
}
