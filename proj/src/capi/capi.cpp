#include "skewtab/skewtab.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/characters.hpp"
#include "core/closed_forms.hpp"
#include "core/errors.hpp"
#include "core/table.hpp"
#include "core/tableaux.hpp"
#include "core/verify.hpp"

struct skewtab_partition {
  skewtab::Partition value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* msg) { g_last_error = msg ? msg : ""; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
skewtab_status guarded(F&& body) noexcept {
  try {
    body();
    set_error("");
    return SKEWTAB_OK;
  } catch (const skewtab::ParseError& e) {
    set_error(e.what());
    return SKEWTAB_PARSE_ERROR;
  } catch (const skewtab::DomainError& e) {
    set_error(e.what());
    return SKEWTAB_DOMAIN_ERROR;
  } catch (const skewtab::UnsupportedError& e) {
    set_error(e.what());
    return SKEWTAB_UNSUPPORTED;
  } catch (const skewtab::CapExceededError& e) {
    set_error(e.what());
    return SKEWTAB_CAP_EXCEEDED;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SKEWTAB_INTERNAL_ERROR;
  } catch (...) {
    set_error("unknown error");
    return SKEWTAB_INTERNAL_ERROR;
  }
}

skewtab_status invalid(const char* msg) {
  set_error(msg);
  return SKEWTAB_INVALID_ARGUMENT;
}

// Weights (m,1^k) go through the closed forms; everything else is counted.
skewtab::Int kostka_dispatch(const skewtab::Partition& mu,
                             const std::vector<unsigned>& weight, unsigned cap) {
  bool hook_shape = !weight.empty();
  for (std::size_t i = 1; i < weight.size(); ++i)
    if (weight[i] != 1) hook_shape = false;
  if (hook_shape) {
    unsigned long total = weight[0] + (weight.size() - 1);
    if (total != mu.n())
      throw skewtab::DomainError("kostka: weight sums to " + std::to_string(total) +
                                 ", needs " + std::to_string(mu.n()));
    return skewtab::kostka_hook(mu, weight[0]);
  }
  return skewtab::kostka_enumerate(mu, skewtab::WeightVector{weight}, cap);
}

}  // namespace

extern "C" {

const char* skewtab_version(void) { return "1.0.0"; }

const char* skewtab_status_name(skewtab_status status) {
  switch (status) {
    case SKEWTAB_OK: return "ok";
    case SKEWTAB_INVALID_ARGUMENT: return "invalid argument";
    case SKEWTAB_PARSE_ERROR: return "parse error";
    case SKEWTAB_DOMAIN_ERROR: return "domain error";
    case SKEWTAB_UNSUPPORTED: return "unsupported";
    case SKEWTAB_CAP_EXCEEDED: return "enumeration cap exceeded";
    case SKEWTAB_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* skewtab_last_error(void) { return g_last_error.c_str(); }

void skewtab_string_free(char* s) { std::free(s); }

skewtab_status skewtab_partition_parse(const char* text, skewtab_partition** out) {
  if (!text || !out) return invalid("partition_parse: null argument");
  *out = nullptr;
  return guarded([&] {
    auto* handle = new skewtab_partition{skewtab::Partition::parse(text)};
    *out = handle;
  });
}

void skewtab_partition_free(skewtab_partition* p) { delete p; }

skewtab_status skewtab_partition_to_string(const skewtab_partition* p, char** out) {
  if (!p || !out) return invalid("partition_to_string: null argument");
  return guarded([&] { *out = dup_string(p->value.to_string()); });
}

skewtab_status skewtab_hook_count(const skewtab_partition* mu, char** out_value) {
  if (!mu || !out_value) return invalid("hook_count: null argument");
  return guarded([&] { *out_value = dup_string(skewtab::to_string(skewtab::hook_count(mu->value))); });
}

skewtab_status skewtab_skew_count(const skewtab_partition* mu, unsigned m,
                                  const char* method, unsigned enum_cap,
                                  char** out_value) {
  if (!mu || !method || !out_value) return invalid("skew_count: null argument");
  return guarded([&] {
    const skewtab::Partition& p = mu->value;
    const std::string how = method;
    if (m < 1 || m > p.n())
      throw skewtab::DomainError("skew_count: needs 1 <= m <= n, got m = " +
                                 std::to_string(m) + ", n = " + std::to_string(p.n()));
    if (p.first_part() < m)
      throw skewtab::DomainError("skew_count: first row shorter than m");
    const unsigned cap = enum_cap ? enum_cap : skewtab::kDefaultEnumCap;
    skewtab::Int value;
    if (how == "closed") {
      switch (m) {
        case 1: value = skewtab::hook_count(p); break;
        case 2: value = skewtab::skew_count_m2(p, skewtab::M2Variant::qform); break;
        case 3: value = skewtab::skew_count_m3(p, skewtab::M3Variant::qform); break;
        case 4: value = skewtab::skew_count_m4(p); break;
        default:
          throw skewtab::UnsupportedError(
              "skew_count: no closed form for m = " + std::to_string(m) +
              "; use determinant, enumerate or frobenius");
      }
    } else if (how == "determinant") {
      value = skewtab::aitken_count(skewtab::SkewShape(p, skewtab::Partition({m})));
    } else if (how == "enumerate") {
      value = skewtab::enumerate_skew_syt(skewtab::SkewShape(p, skewtab::Partition({m})), cap);
    } else if (how == "frobenius") {
      value = skewtab::frobenius_skew(p, skewtab::Partition({m}));
    } else {
      throw skewtab::UnsupportedError("skew_count: unknown method '" + how + "'");
    }
    *out_value = dup_string(skewtab::to_string(value));
  });
}

skewtab_status skewtab_kostka(const skewtab_partition* mu, const char* weight,
                              unsigned enum_cap, char** out_value) {
  if (!mu || !weight || !out_value) return invalid("kostka: null argument");
  return guarded([&] {
    const auto entries = skewtab::parse_weight(weight);
    const unsigned cap = enum_cap ? enum_cap : skewtab::kDefaultEnumCap;
    *out_value = dup_string(skewtab::to_string(kostka_dispatch(mu->value, entries, cap)));
  });
}

skewtab_status skewtab_character(const skewtab_partition* mu, const char* cycle_type,
                                 const char* method, char** out_value) {
  if (!mu || !cycle_type || !method) return invalid("character: null argument");
  if (!out_value) return invalid("character: null argument");
  return guarded([&] {
    const skewtab::Partition& p = mu->value;
    const skewtab::Partition cycle = skewtab::Partition::parse(cycle_type);
    const skewtab::CycleType cls(cycle, p.n());
    const std::string how = method;
    skewtab::Int value;
    if (how == "mn") {
      value = skewtab::chi_mn(p, cls);
    } else if (how == "lassalle") {
      std::vector<unsigned> stripped;
      for (unsigned part : cycle.parts())
        if (part >= 2) stripped.push_back(part);
      value = skewtab::chi_small(
          p, skewtab::support_from_cycle(skewtab::Partition(std::move(stripped))));
    } else {
      throw skewtab::UnsupportedError("character: unknown method '" + how + "'");
    }
    *out_value = dup_string(skewtab::to_string(value));
  });
}

skewtab_status skewtab_table(unsigned n, const unsigned* ms, size_t m_count,
                             const char* format, char** out_text) {
  if (!format || !out_text || (m_count > 0 && !ms)) return invalid("table: null argument");
  return guarded([&] {
    std::vector<unsigned> m_list(ms, ms + m_count);
    *out_text = dup_string(skewtab::render_table(n, std::move(m_list), format));
  });
}

skewtab_status skewtab_verify(const char* suite, int max_n, unsigned enum_cap,
                              char** out_json, long* out_failures) {
  if (!suite || !out_json || !out_failures) return invalid("verify: null argument");
  return guarded([&] {
    skewtab::VerifyOptions options;
    options.max_n = max_n;
    if (enum_cap) options.enum_cap = enum_cap;
    const skewtab::VerificationReport report = skewtab::run_suite(suite, options);
    *out_json = dup_string(report.to_json());
    *out_failures = report.failures_total();
  });
}

}  // extern "C"
