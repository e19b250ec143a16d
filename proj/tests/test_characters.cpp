#include <doctest.h>

#include "core/characters.hpp"
#include "core/content_stats.hpp"
#include "core/errors.hpp"
#include "core/tableaux.hpp"

using namespace skewtab;

namespace {

CycleType padded(const char* parts, unsigned long degree) {
  return CycleType(Partition::parse(parts), degree);
}

}  // namespace

TEST_CASE("chi_mn basics") {
  CHECK(chi_mn(Partition::parse("2,1"), padded("1,1,1", 3)) == 2);
  CHECK(chi_mn(Partition::parse("1,1,1"), padded("2,1", 3)) == -1);
  // trivial representation
  for (const char* cls : {"1^5", "2,1^3", "3,2", "5", "4,1"})
    CHECK(chi_mn(Partition::parse("5"), padded(cls, 5)) == 1);
  // sign representation: parity of the permutation
  CHECK(chi_mn(Partition::parse("1^4"), padded("2,1,1", 4)) == -1);
  CHECK(chi_mn(Partition::parse("1^4"), padded("2,2", 4)) == 1);
  CHECK(chi_mn(Partition::parse("1^4"), padded("3,1", 4)) == 1);
  CHECK(chi_mn(Partition::parse("1^4"), padded("4", 4)) == -1);
  // degree is f^mu
  for (unsigned long n = 1; n <= 8; ++n)
    for (const Partition& mu : generate_partitions(n))
      CHECK(chi_mn(mu, CycleType(Partition::parse("1^" + std::to_string(n)), n)) ==
            hook_count(mu));
  // implicit fixed-point padding gives the same values
  CHECK(chi_mn(Partition::parse("3,2,1"), padded("3", 6)) ==
        chi_mn(Partition::parse("3,2,1"), padded("3,1,1,1", 6)));
  CHECK_THROWS_AS(chi_mn(Partition::parse("2,1"), padded("2,1", 4)), DomainError);
}

TEST_CASE("chi_mn against the S_4 character table") {
  // rows: shape; columns: cycle types 1^4, 2·1^2, 2^2, 3·1, 4
  const char* classes[] = {"1^4", "2,1,1", "2,2", "3,1", "4"};
  const long table[5][5] = {
      {1, 1, 1, 1, 1},     // (4)
      {3, 1, -1, 0, -1},   // (3,1)
      {2, 0, 2, -1, 0},    // (2,2)
      {3, -1, -1, 0, 1},   // (2,1,1)
      {1, -1, 1, 1, -1},   // (1,1,1,1)
  };
  const auto shapes = generate_partitions(4);
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(chi_mn(shapes[i], padded(classes[j], 4)) == table[i][j]);
}

TEST_CASE("chi_small worked examples") {
  CHECK(chi_small(Partition::parse("2,1"), SmallSupport::m2) == 0);
  CHECK(chi_small(Partition::parse("2,1"), SmallSupport::m3) == -1);
  CHECK(chi_small(Partition::parse("3,2,1"), SmallSupport::m3) == -2);
  CHECK_THROWS_AS(chi_small(Partition::parse("2,1"), SmallSupport::m4), DomainError);
}

TEST_CASE("chi_small agrees with the recursion on every support") {
  constexpr SmallSupport all[] = {SmallSupport::m2, SmallSupport::m3, SmallSupport::m4,
                                  SmallSupport::m5, SmallSupport::m6, SmallSupport::two_two};
  for (unsigned long n = 2; n <= 9; ++n) {
    for (const Partition& mu : generate_partitions(n)) {
      for (SmallSupport s : all) {
        if (n < support_weight(s)) continue;
        CHECK(chi_small(mu, s) ==
              chi_mn(mu, CycleType(Partition::parse(support_name(s)), n)));
      }
    }
  }
}

TEST_CASE("q-form characters") {
  CHECK(chi_small_qform(Partition::parse("3,2,1"), SmallSupport::m2) == 0);
  CHECK(chi_small_qform(Partition::parse("3,2,1"), SmallSupport::m3) == -2);
  // single row: the trivial character, value forced by the recursion
  CHECK(chi_small_qform(Partition::parse("4"), SmallSupport::m2) == 1);
  CHECK(chi_mn(Partition::parse("4"), padded("2", 4)) == 1);
  CHECK_THROWS_AS(chi_small_qform(Partition::parse("6,1"), SmallSupport::m5),
                  UnsupportedError);

  constexpr SmallSupport qforms[] = {SmallSupport::m2, SmallSupport::m3, SmallSupport::m4,
                                     SmallSupport::two_two};
  for (unsigned long n = 2; n <= 9; ++n)
    for (const Partition& mu : generate_partitions(n))
      for (SmallSupport s : qforms) {
        if (n < support_weight(s)) continue;
        CHECK(chi_small_qform(mu, s) == chi_small(mu, s));
      }
}

TEST_CASE("support tags") {
  CHECK(support_from_cycle(Partition::parse("2")) == SmallSupport::m2);
  CHECK(support_from_cycle(Partition::parse("2,2")) == SmallSupport::two_two);
  CHECK(support_from_cycle(Partition::parse("6")) == SmallSupport::m6);
  CHECK_THROWS_AS(support_from_cycle(Partition::parse("3,2")), UnsupportedError);
  CHECK_THROWS_AS(support_from_cycle(Partition()), UnsupportedError);
  CHECK(support_weight(SmallSupport::two_two) == 4);
}

TEST_CASE("frobenius_skew") {
  CHECK(frobenius_skew(Partition::parse("3,2,1"), Partition::parse("3")) == 2);
  CHECK(frobenius_skew(Partition::parse("3,2,1"), Partition::parse("2")) == 8);
  CHECK(frobenius_skew(Partition::parse("2,2"), Partition::parse("3")) == 0);  // not contained
  CHECK(frobenius_skew(Partition::parse("3,1"), Partition()) ==
        hook_count(Partition::parse("3,1")));
  CHECK_THROWS_AS(frobenius_skew(Partition::parse("2,1"), Partition::parse("4")), DomainError);

  for (unsigned long n = 1; n <= 7; ++n) {
    for (const Partition& mu : generate_partitions(n)) {
      for (unsigned long m = 1; m <= 3 && m <= n; ++m) {
        for (const Partition& lam : generate_partitions(m)) {
          if (mu.contains(lam))
            CHECK(frobenius_skew(mu, lam) == aitken_count(SkewShape(mu, lam)));
          else
            CHECK(frobenius_skew(mu, lam) == 0);
        }
      }
    }
  }
}

TEST_CASE("orthogonality of the irreducible characters") {
  for (unsigned long n = 1; n <= 5; ++n) {
    const auto all = generate_partitions(n);
    for (const Partition& mu : all) {
      for (const Partition& nu : all) {
        Rat sum = 0;
        for (const Partition& lam : all)
          sum += Rat(chi_mn(mu, CycleType(lam, n)) * chi_mn(nu, CycleType(lam, n))) /
                 Rat(lam.z_factor());
        CHECK(sum == Rat(mu == nu ? 1 : 0));
      }
    }
  }
}

TEST_CASE("uncorrected m6 coefficient is detectably wrong") {
  for (unsigned long n = 6; n <= 8; ++n) {
    long mismatches = 0;
    for (const Partition& mu : generate_partitions(n)) {
      const Rat wrong = detail::chi_m6_uncorrected(mu);
      const Int right = chi_mn(mu, CycleType(Partition::parse("6"), n));
      const bool differs = wrong != Rat(right);
      CHECK(differs == (content_power_sum(mu, 3) != 0));
      if (differs) ++mismatches;
    }
    CHECK(mismatches >= 1);
  }
}
