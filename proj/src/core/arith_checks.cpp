#include "core/arith_checks.hpp"

#include <chrono>
#include <sstream>

#include "core/errors.hpp"

namespace skewtab {

namespace {

std::string grid_point(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ",";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

std::string num(long v) { return std::to_string(v); }

void check_r_recurrence(VerificationReport& rep, const ArithGrid& g) {
  // R_{l+1}(t) = (t+1) R_l(t) - sum_{i=1..t} R_l(i)
  for (unsigned long l = 0; l <= g.l_max; ++l) {
    for (unsigned long t = 0; t <= g.t_max; ++t) {
      Int rhs = Int(t + 1) * power_sum_range(l, t);
      for (unsigned long i = 1; i <= t; ++i) rhs -= power_sum_range(l, i);
      rep.record("R-recurrence", grid_point({{"l", num(l)}, {"t", num(t)}}),
                 power_sum_range(l + 1, t), rhs);
    }
  }
}

void check_r_closed_form(VerificationReport& rep, const ArithGrid& g) {
  // R_l(t) = sum_{i=0..l} c_number(l,i) C(t,i+1)
  for (unsigned long l = 0; l <= g.l_max; ++l) {
    for (unsigned long t = 0; t <= g.t_max; ++t) {
      Int rhs = 0;
      for (unsigned long i = 0; i <= l; ++i)
        rhs += c_number(l, i) * binomial(static_cast<long>(t), static_cast<long>(i + 1));
      rep.record("R-closed-form", grid_point({{"l", num(l)}, {"t", num(t)}}),
                 power_sum_range(l, t), rhs);
    }
  }
}

void check_monomial_expansion(VerificationReport& rep, const ArithGrid& g) {
  // z^l = sum_{i=0..l} c_number(l,i) C(z-1,i), for all z; tested at the
  // grid's integer points and at its rational sample points.
  for (unsigned long l = 0; l <= g.l_max; ++l) {
    for (long z = g.z_min; z <= g.z_max; ++z) {
      Int rhs = 0;
      for (unsigned long i = 0; i <= l; ++i)
        rhs += c_number(l, i) * binomial(Int(z - 1), static_cast<long>(i));
      rep.record("monomial-expansion", grid_point({{"l", num(l)}, {"z", num(z)}}),
                 int_pow(z, l), rhs);
    }
    for (const Rat& z : g.z_samples) {
      Rat lhs = 1;
      for (unsigned long i = 0; i < l; ++i) lhs *= z;
      Rat rhs = 0;
      for (unsigned long i = 0; i <= l; ++i)
        rhs += Rat(c_number(l, i)) * binomial(Rat(z - 1), i);
      rep.record("monomial-expansion",
                 grid_point({{"l", num(l)}, {"z", to_string(z)}}), lhs, rhs);
    }
  }
}

void check_hockey_stick(VerificationReport& rep, const ArithGrid& g) {
  // sum_{k=0..l} C(k,m) = C(l+1,m+1)
  for (long l = 0; l <= static_cast<long>(g.hockey_max); ++l) {
    for (long m = 0; m <= static_cast<long>(g.hockey_max); ++m) {
      Int lhs = 0;
      for (long k = 0; k <= l; ++k) lhs += binomial(k, m);
      rep.record("hockey-stick", grid_point({{"l", num(l)}, {"m", num(m)}}), lhs,
                 binomial(l + 1, m + 1));
    }
  }
}

void check_c_recurrence(VerificationReport& rep, const ArithGrid& g) {
  // c_number(r,t) = t c_number(r-1,t-1) + (t+1) c_number(r-1,t) for r >= 1;
  // the t = 0 column loses its first term.
  for (unsigned long r = 1; r <= g.rec_max; ++r) {
    for (unsigned long t = 0; t <= g.rec_max; ++t) {
      Int rhs = Int(t + 1) * c_number(r - 1, t);
      if (t >= 1) rhs += Int(t) * c_number(r - 1, t - 1);
      rep.record("C-recurrence", grid_point({{"r", num(r)}, {"t", num(t)}}),
                 c_number(r, t), rhs);
    }
  }
}

}  // namespace

VerificationReport check_arith_identity(std::string_view identity, const ArithGrid& grid) {
  VerificationReport rep{std::string(identity)};
  const auto start = std::chrono::steady_clock::now();
  if (identity == "R-recurrence") {
    check_r_recurrence(rep, grid);
  } else if (identity == "R-closed-form") {
    check_r_closed_form(rep, grid);
  } else if (identity == "monomial-expansion") {
    check_monomial_expansion(rep, grid);
  } else if (identity == "hockey-stick") {
    check_hockey_stick(rep, grid);
  } else if (identity == "C-recurrence") {
    check_c_recurrence(rep, grid);
  } else {
    throw UnsupportedError("unknown identity: " + std::string(identity));
  }
  rep.set_elapsed_ms(std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count());
  return rep;
}

}  // namespace skewtab
