#include "core/verify.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "core/arith_checks.hpp"
#include "core/characters.hpp"
#include "core/closed_forms.hpp"
#include "core/content_stats.hpp"
#include "core/errors.hpp"
#include "core/partition.hpp"

namespace skewtab {

namespace {

constexpr int kDefaultSweepN = 12;   // formula-vs-determinant sweeps
constexpr int kDefaultWideN = 14;    // cheap structural sweeps
constexpr int kEnumerationCapN = 9;  // enumeration- and pairwise-backed sweeps
constexpr int kOrthogonalityCapN = 7;

int sweep_n(const VerifyOptions& opt) { return opt.max_n > 0 ? opt.max_n : kDefaultSweepN; }
int wide_n(const VerifyOptions& opt) { return opt.max_n > 0 ? opt.max_n : kDefaultWideN; }
int capped_n(const VerifyOptions& opt, int cap) { return std::min(sweep_n(opt), cap); }

std::string mu_str(const Partition& mu) { return "mu=(" + mu.to_string() + ")"; }

// Independent count of p(n) via the bounded-part recurrence
// p(n,k) = p(n-k,k) + p(n,k-1); never touches the generator.
long partition_count_oracle(int n) {
  std::vector<std::vector<long>> t(n + 1, std::vector<long>(n + 1, 0));
  for (int k = 0; k <= n; ++k) t[0][k] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k)
      t[m][k] = t[m][k - 1] + (m >= k ? t[m - k][k] : 0);
  return t[n][n];
}

VerificationReport suite_arith(const VerifyOptions&) {
  VerificationReport rep{"arith"};
  for (const char* id :
       {"R-recurrence", "R-closed-form", "monomial-expansion", "hockey-stick", "C-recurrence"})
    rep.merge(check_arith_identity(id));

  // stirling2: defining recurrence, and sum_k S(n,k) [x]_k = x^n
  for (unsigned long n = 1; n <= 20; ++n) {
    for (unsigned long k = 1; k <= n; ++k)
      rep.record("stirling-recurrence", "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                 stirling2(n, k), stirling2(n - 1, k - 1) + Int(k) * stirling2(n - 1, k));
    for (long x = 0; x <= 10; ++x) {
      Int sum = 0;
      for (unsigned long k = 0; k <= n; ++k)
        sum += stirling2(n, k) * falling_factorial(static_cast<unsigned long>(x), k);
      rep.record("stirling-power-expansion",
                 "n=" + std::to_string(n) + ",x=" + std::to_string(x), sum, int_pow(x, n));
    }
  }

  // c_number support and phi symmetry
  for (unsigned long r = 0; r <= 10; ++r)
    for (unsigned long t = r + 1; t <= 12; ++t)
      rep.record("c-number-vanishes", "r=" + std::to_string(r) + ",t=" + std::to_string(t),
                 c_number(r, t), Int(0));
  for (unsigned long l = 0; l <= 8; ++l)
    for (unsigned long h = 0; h <= l; ++h)
      for (unsigned long r = 0; r <= l; ++r)
        for (unsigned long t = 0; t <= l; ++t)
          rep.record("phi-symmetry",
                     "l=" + std::to_string(l) + ",h=" + std::to_string(h) + ",r=" +
                         std::to_string(r) + ",t=" + std::to_string(t),
                     phi(l, h, r, t), phi(l, l - h, t, r));
  return rep;
}

VerificationReport suite_conjugate(const VerifyOptions& opt) {
  VerificationReport rep{"conjugate"};
  const int main_n = sweep_n(opt);
  const int wide = wide_n(opt);
  const int reject_n = capped_n(opt, kEnumerationCapN);

  for (int n = 1; n <= wide; ++n) {
    const auto mus = generate_partitions(n);
    rep.record("partition-count", "n=" + std::to_string(n), Int(mus.size()),
               Int(partition_count_oracle(n)));
    for (const auto& mu : mus) {
      const Partition conj = mu.conjugate();
      rep.require("conjugate-involution", mu_str(mu), conj.conjugate() == mu);
      rep.record("conjugate-size", mu_str(mu), Int(conj.n()), Int(mu.n()));
      rep.record("conjugate-height", mu_str(mu), Int(conj.height()), Int(mu.first_part()));
      // sum_i mu_i (i-1) = sum_j C(mu'_j, 2)
      Int lhs = 0;
      for (unsigned i = 1; i <= mu.height(); ++i)
        lhs += Int(mu.parts()[i - 1]) * Int(i - 1);
      Int rhs = 0;
      for (unsigned p : conj.parts()) rhs += binomial(static_cast<long>(p), 2);
      rep.record("row-column-moment", mu_str(mu), lhs, rhs);
      rep.record("q-plus-00-counts-cells", mu_str(mu), q_plus(mu, 0, 0), Int(2 * mu.n()));
    }
  }

  for (int n = 1; n <= main_n; ++n) {
    for (const auto& mu : generate_partitions(n)) {
      for (unsigned r = 0; r <= 6; ++r) {
        for (unsigned t = 0; t <= 6; ++t) {
          const std::string at =
              mu_str(mu) + ",r=" + std::to_string(r) + ",t=" + std::to_string(t);
          rep.record("q-conjugate-form+", at, q_via_conjugate(mu, {Sign::plus, r, t}),
                     q_plus(mu, r, t));
          rep.record("q-conjugate-form-", at, q_via_conjugate(mu, {Sign::minus, r, t}),
                     q_minus(mu, r, t));
          rep.record("q-plus-symmetry", at, q_plus(mu, r, t), q_plus(mu, t, r));
          rep.record("q-minus-antisymmetry", at, q_minus(mu, r, t) + q_minus(mu, t, r),
                     Int(0));
        }
        rep.record("q-minus-diagonal", mu_str(mu) + ",r=" + std::to_string(r),
                   q_minus(mu, r, r), Int(0));
      }
      rep.merge(conjugate_identity_holds(mu, mu.conjugate(), 6, 6));
    }
  }

  // every non-conjugate candidate must fail on the height-bounded grid
  for (int n = 1; n <= reject_n; ++n) {
    const auto mus = generate_partitions(n);
    for (const auto& mu : mus) {
      const Partition conj = mu.conjugate();
      for (const auto& cand : mus) {
        if (cand == conj) continue;
        const unsigned g = std::max(mu.height(), cand.height());
        rep.require("conjugate-reject",
                    mu_str(mu) + ",candidate=(" + cand.to_string() + ")",
                    !conjugate_identity_holds(mu, cand, g, g).passed(),
                    "no failing (r,t) on the grid");
      }
    }
  }
  return rep;
}

VerificationReport suite_prop1(const VerifyOptions& opt) {
  VerificationReport rep{"prop1"};
  const int main_n = sweep_n(opt);
  for (int n = 1; n <= main_n; ++n) {
    for (const auto& mu : generate_partitions(n)) {
      for (unsigned l = 0; l <= 8; ++l)
        rep.record("power-sum-expansion", mu_str(mu) + ",l=" + std::to_string(l),
                   p_via_q(mu, l), content_power_sum(mu, l));
      // the simplified low-degree forms
      rep.record("p0-q-form", mu_str(mu), q_plus(mu, 0, 0), 2 * content_power_sum(mu, 0));
      rep.record("p1-q-form", mu_str(mu), q_minus(mu, 1, 0), content_power_sum(mu, 1));
      rep.record("p2-q-form", mu_str(mu),
                 q_plus(mu, 0, 1) + 2 * q_plus(mu, 0, 2) - q_plus(mu, 1, 1),
                 content_power_sum(mu, 2));
      rep.record("p3-q-form", mu_str(mu),
                 q_minus(mu, 1, 0) + 6 * q_minus(mu, 2, 0) + 6 * q_minus(mu, 3, 0) -
                     6 * q_minus(mu, 2, 1),
                 content_power_sum(mu, 3));
    }
  }
  return rep;
}

VerificationReport suite_characters(const VerifyOptions& opt) {
  VerificationReport rep{"characters"};
  const int main_n = sweep_n(opt);
  const int orth_n = capped_n(opt, kOrthogonalityCapN);
  constexpr SmallSupport kSupports[] = {SmallSupport::m2,  SmallSupport::m3,
                                        SmallSupport::m4,  SmallSupport::m5,
                                        SmallSupport::m6,  SmallSupport::two_two};

  for (int n = 2; n <= main_n; ++n) {
    for (const auto& mu : generate_partitions(n)) {
      for (SmallSupport s : kSupports) {
        if (mu.n() < support_weight(s)) continue;
        const Partition stripped = Partition::parse(support_name(s));
        const Int mn = chi_mn(mu, CycleType(stripped, mu.n()));
        rep.record("chi-closed-vs-mn", mu_str(mu) + ",cycle=(" + support_name(s) + ")",
                   chi_small(mu, s), mn);
        if (s == SmallSupport::m2 || s == SmallSupport::m3 || s == SmallSupport::m4 ||
            s == SmallSupport::two_two)
          rep.record("chi-qform-vs-closed", mu_str(mu) + ",cycle=(" + support_name(s) + ")",
                     chi_small_qform(mu, s), chi_small(mu, s));
      }
    }
  }

  // negative control: the superseded p_3 coefficient must disagree with
  // the recursion for every n in 6..10, exactly on shapes with p_3 != 0
  for (int n = 6; n <= std::min(main_n, 10); ++n) {
    long mismatches = 0;
    for (const auto& mu : generate_partitions(n)) {
      const Rat wrong = detail::chi_m6_uncorrected(mu);
      const Int right = chi_mn(mu, CycleType(Partition({6}), mu.n()));
      const bool differs = wrong != Rat(right);
      if (differs) ++mismatches;
      rep.require("remark-mismatch-iff-p3", mu_str(mu),
                  differs == (content_power_sum(mu, 3) != 0));
    }
    rep.require("remark-regression", "n=" + std::to_string(n), mismatches >= 1,
                "uncorrected coefficient produced no mismatch");
  }

  for (int n = 1; n <= orth_n; ++n) {
    const auto mus = generate_partitions(n);
    for (const auto& mu : mus) {
      for (const auto& nu : mus) {
        Rat sum = 0;
        for (const auto& lam : mus)
          sum += Rat(chi_mn(mu, CycleType(lam, n)) * chi_mn(nu, CycleType(lam, n))) /
                 Rat(lam.z_factor());
        rep.record("character-orthogonality",
                   mu_str(mu) + ",nu=(" + nu.to_string() + ")", sum,
                   Rat(mu == nu ? 1 : 0));
      }
    }
  }

  for (int n = 1; n <= main_n; ++n) {
    Int sum = 0;
    for (const auto& mu : generate_partitions(n))
      sum += exact_div(factorial(n), mu.z_factor(), "class size");
    rep.record("class-sizes-sum", "n=" + std::to_string(n), sum, factorial(n));
  }
  return rep;
}

VerificationReport suite_closed_forms(const VerifyOptions& opt) {
  VerificationReport rep{"closed-forms"};
  const int main_n = sweep_n(opt);
  const int enum_n = capped_n(opt, kEnumerationCapN);
  const unsigned cap = opt.enum_cap ? opt.enum_cap : kDefaultEnumCap;

  // ground-truth oracles agree with each other
  for (int n = 1; n <= enum_n; ++n) {
    Int square_mass = 0;
    for (const auto& mu : generate_partitions(n)) {
      const Int f = hook_count(mu);
      square_mass += f * f;
      rep.record("hook-vs-enumeration", mu_str(mu), f,
                 enumerate_skew_syt(SkewShape(mu, {}), cap));
      rep.record("hook-vs-determinant", mu_str(mu), f, aitken_count(SkewShape(mu, {})));
      for (unsigned v = 1; v <= 4; ++v) {
        const Partition inner({v});
        if (!mu.contains(inner)) continue;
        const SkewShape shape(mu, inner);
        rep.record("enumeration-vs-determinant",
                   mu_str(mu) + ",inner=(" + std::to_string(v) + ")",
                   enumerate_skew_syt(shape, cap), aitken_count(shape));
      }
    }
    rep.record("syt-square-mass", "n=" + std::to_string(n), square_mass, factorial(n));
  }

  // the closed forms, every printed variant, against the oracles
  for (int n = 2; n <= main_n; ++n) {
    for (const auto& mu : generate_partitions(n)) {
      if (mu.first_part() >= 2 && n >= 2) {
        const Int knuth = skew_count_m2(mu, M2Variant::knuth);
        rep.record("m2-variants-schur", mu_str(mu), skew_count_m2(mu, M2Variant::schur), knuth);
        rep.record("m2-variants-qform", mu_str(mu), skew_count_m2(mu, M2Variant::qform), knuth);
        rep.record("m2-vs-determinant", mu_str(mu), knuth,
                   aitken_count(SkewShape(mu, Partition({2}))));
        rep.record("m2-vs-frobenius", mu_str(mu), knuth, frobenius_skew(mu, Partition({2})));
        if (n <= enum_n)
          rep.record("m2-vs-enumeration", mu_str(mu), knuth,
                     enumerate_skew_syt(SkewShape(mu, Partition({2})), cap));
      }
      if (mu.first_part() >= 3 && n >= 3) {
        const Int expanded = skew_count_m3(mu, M3Variant::expanded);
        rep.record("m3-variants-qform", mu_str(mu), skew_count_m3(mu, M3Variant::qform),
                   expanded);
        rep.record("m3-variants-conjugate", mu_str(mu),
                   skew_count_m3(mu, M3Variant::conjugate_form), expanded);
        rep.record("m3-vs-determinant", mu_str(mu), expanded,
                   aitken_count(SkewShape(mu, Partition({3}))));
        rep.record("m3-vs-frobenius", mu_str(mu), expanded, frobenius_skew(mu, Partition({3})));
        if (n <= enum_n)
          rep.record("m3-vs-enumeration", mu_str(mu), expanded,
                     enumerate_skew_syt(SkewShape(mu, Partition({3})), cap));
      }
      if (mu.first_part() >= 4 && n >= 4) {
        const Int closed = skew_count_m4(mu);
        rep.record("m4-vs-determinant", mu_str(mu), closed,
                   aitken_count(SkewShape(mu, Partition({4}))));
        rep.record("m4-vs-frobenius", mu_str(mu), closed, frobenius_skew(mu, Partition({4})));
        if (n <= enum_n)
          rep.record("m4-vs-enumeration", mu_str(mu), closed,
                     enumerate_skew_syt(SkewShape(mu, Partition({4})), cap));
      }
    }
  }

  // Kostka reduction K(mu,(m,1^{n-m})) = f^{mu/(m)}
  for (int n = 1; n <= enum_n; ++n) {
    for (const auto& mu : generate_partitions(n)) {
      for (unsigned m = 1; m <= static_cast<unsigned>(n); ++m) {
        WeightVector w;
        w.entries.push_back(m);
        w.entries.insert(w.entries.end(), n - m, 1u);
        const Int by_enumeration = kostka_enumerate(mu, w, cap);
        rep.record("kostka-closed-vs-enumeration",
                   mu_str(mu) + ",m=" + std::to_string(m), kostka_hook(mu, m),
                   by_enumeration);
        if (mu.first_part() >= m)
          rep.record("kostka-reduction", mu_str(mu) + ",m=" + std::to_string(m),
                     by_enumeration,
                     enumerate_skew_syt(SkewShape(mu, Partition({m})), cap));
        else
          rep.record("kostka-row-too-short", mu_str(mu) + ",m=" + std::to_string(m),
                     by_enumeration, Int(0));
      }
    }
  }

  // Frobenius expansion vs the determinant, with and without containment
  for (int n = 1; n <= enum_n; ++n) {
    for (const auto& mu : generate_partitions(n)) {
      for (unsigned m = 1; m <= 4 && m <= static_cast<unsigned>(n); ++m) {
        for (const auto& lam : generate_partitions(m)) {
          const std::string at = mu_str(mu) + ",lam=(" + lam.to_string() + ")";
          if (mu.contains(lam))
            rep.record("frobenius-vs-determinant", at, frobenius_skew(mu, lam),
                       aitken_count(SkewShape(mu, lam)));
          else
            rep.record("frobenius-outside-shape", at, frobenius_skew(mu, lam), Int(0));
        }
      }
    }
  }
  return rep;
}

VerificationReport timed(VerificationReport (*suite)(const VerifyOptions&),
                         const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep = suite(opt);
  rep.set_elapsed_ms(std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count());
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith", "conjugate", "prop1", "characters",
                                              "closed-forms", "all"};
  return names;
}

VerificationReport run_suite(std::string_view suite, const VerifyOptions& options) {
  if (suite == "arith") return timed(suite_arith, options);
  if (suite == "conjugate") return timed(suite_conjugate, options);
  if (suite == "prop1") return timed(suite_prop1, options);
  if (suite == "characters") return timed(suite_characters, options);
  if (suite == "closed-forms") return timed(suite_closed_forms, options);
  if (suite == "all") {
    VerificationReport rep{"all"};
    for (const auto& name : suite_names())
      if (name != "all") rep.merge(run_suite(name, options));
    return rep;
  }
  throw UnsupportedError("unknown suite: " + std::string(suite));
}

}  // namespace skewtab
