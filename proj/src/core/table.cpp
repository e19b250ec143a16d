#include "core/table.hpp"

#include <algorithm>

#include <json.hpp>

#include "core/closed_forms.hpp"
#include "core/errors.hpp"
#include "core/tableaux.hpp"

namespace skewtab {

namespace {

Int table_cell(const Partition& mu, unsigned m) {
  // covers m > n as well: mu_1 <= n < m
  if (mu.first_part() < m) return 0;
  return kostka_hook(mu, m);
}

}  // namespace

std::string render_table(unsigned long n, std::vector<unsigned> ms, std::string_view format) {
  if (n == 0) throw DomainError("table: n must be positive");
  for (unsigned m : ms)
    if (m == 0) throw DomainError("table: m values must be positive");
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

  const auto mus = generate_partitions(n);
  if (format == "csv") {
    std::string out = "mu,f";
    for (unsigned m : ms) out += ",f_skew_" + std::to_string(m);
    out += '\n';
    for (const auto& mu : mus) {
      out += '"' + mu.to_string() + '"';
      out += ',' + to_string(hook_count(mu));
      for (unsigned m : ms) out += ',' + to_string(table_cell(mu, m));
      out += '\n';
    }
    return out;
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = ms;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& mu : mus) {
      nlohmann::ordered_json row;
      row["mu"] = mu.to_string();
      row["f"] = to_string(hook_count(mu));
      for (unsigned m : ms) row["f_skew_" + std::to_string(m)] = to_string(table_cell(mu, m));
      rows.push_back(std::move(row));
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  throw UnsupportedError("table: unknown format '" + std::string(format) + "'");
}

}  // namespace skewtab
