#include <doctest.h>

#include "helpers.hpp"
#include "qrank/cfrac.hpp"
#include "qrank/complexity.hpp"
#include "qrank/muir.hpp"
#include "qrank/primes.hpp"

using namespace qrank;
using qrank::test::ints;
using qrank::test::throws_code;

namespace {
PeriodicCF cf_of(long d) { return expand_sqrt(BigInt(d)); }
}  // namespace

TEST_CASE("midpoint classes of the small primes") {
  auto c = classify_midpoint(cf_of(11));
  CHECK(c.kind == Midpoint::Culminating);
  CHECK(c.k == 1);
  c = classify_midpoint(cf_of(19));
  CHECK(c.kind == Midpoint::AlmostCulminating);
  CHECK(c.k == 3);
  c = classify_midpoint(cf_of(31));
  CHECK(c.kind == Midpoint::Culminating);
  CHECK(c.k == 4);
  // sqrt(6) = [2; 2,4]: x1 = 2 = x0.  sqrt(21) = [4; 1,1,2,1,1,8]: neither.
  CHECK(classify_midpoint(cf_of(6)).kind == Midpoint::Culminating);
  CHECK(classify_midpoint(cf_of(21)).kind == Midpoint::Neither);
  CHECK(throws_code([] { classify_midpoint(cf_of(13)); }, Errc::OddPeriod));
  CHECK(to_string(Midpoint::AlmostCulminating) == "almost-culminating");
}

TEST_CASE("closed-form complexity") {
  CHECK(complexity_closed(3) == 2);
  CHECK(complexity_closed(7) == 1);
  CHECK(complexity_closed(83) == 2);
  CHECK(throws_code([] { complexity_closed(13); }, Errc::WrongResidue));
  CHECK(throws_code([] { complexity_closed(15); }, Errc::NotPrime));
}

TEST_CASE("family membership") {
  auto f = family_match(cf_of(11));
  REQUIRE(f);
  CHECK(to_string(*f) == "P6-culminating(n=0,x1=3,D=11)");
  f = family_match(cf_of(47));
  REQUIRE(f);
  CHECK(to_string(*f) == "P4-almost-culminating(x0=6,D=47)");
  f = family_match(cf_of(23));
  REQUIRE(f);
  CHECK(f->kind == FamilyKind::P4AlmostCulminating);
  CHECK(f->x0 == 4);
  CHECK_FALSE(family_match(cf_of(43)));  // period 10
}

TEST_CASE("family generators regenerate their patterns") {
  for (long n = 1; n <= 5; ++n) {
    for (long x1 = 1; x1 <= 5; ++x1) {
      const long x0 = n * (2 * x1 * x1 + 1) + x1;
      const long D = x0 * x0 + 4 * n * x1 + 2;
      const PeriodicCF cf = cf_of(D);
      CHECK(cf.period == ints({x1, 2 * x1, x0, 2 * x1, x1, 2 * x0}));
      const auto f = family_match(cf);
      REQUIRE(f);
      CHECK(f->n == n);
      CHECK(f->x1 == x1);
    }
  }
  for (long s = 1; s <= 10; ++s) {
    const long x0 = 3 * s + 1;
    const PeriodicCF cf = cf_of(x0 * x0 + 2 * s + 1);
    CHECK(cf.period == ints({2, 1, 3 * s, 1, 2, 2 * x0}));
    REQUIRE(family_match(cf));
    CHECK(family_match(cf)->s == s);
  }
  for (long x0 = 2; x0 <= 30; ++x0) {
    const PeriodicCF cf = cf_of((x0 + 1) * (x0 + 1) - 2);
    CHECK(cf.period == ints({1, x0 - 1, 1, 2 * x0}));
  }
}

TEST_CASE("brute-force dimension on the smallest tuple") {
  DimensionParams params;
  params.window = 3;
  params.completion = 60;
  const DimensionResult r = dimension_bruteforce(cf_of(3), params);
  CHECK(r.dimension == 2);
  CHECK(r.free_indices == std::vector<std::size_t>{0, 1});
  CHECK(r.completion == 60);
  // Both coordinates of sqrt(11) = [3; 3,6] move freely as well.
  CHECK(dimension_bruteforce(cf_of(11), params).dimension == 2);
}

TEST_CASE("brute-force dimension is deterministic and bounded by k + 1") {
  for (long p : {7L, 19L, 23L, 31L, 47L}) {
    const PeriodicCF cf = cf_of(p);
    const DimensionResult a = dimension_bruteforce(cf);
    const DimensionResult b = dimension_bruteforce(cf);
    CHECK(a.dimension == b.dimension);
    CHECK(a.free_indices == b.free_indices);
    CHECK(a.dimension <= cf.period_length() / 2 + 1);
    CHECK(a.completion >= 2 * cf.a0() + 4);
  }
}

TEST_CASE("brute-force search argument checks") {
  DimensionParams tiny;
  tiny.completion = 3;
  CHECK(throws_code([&] { dimension_bruteforce(cf_of(47), tiny); }, Errc::WindowTooSmall));
  CHECK(throws_code([] { dimension_bruteforce(cf_of(13)); }, Errc::OddPeriod));
  DimensionParams zero;
  zero.window = 0;
  CHECK(throws_code([&] { dimension_bruteforce(cf_of(7), zero); }, Errc::InvalidArgument));
}

TEST_CASE("complexity report carries both estimates") {
  const ComplexityReport r = complexity_report(19, true);
  CHECK(r.closed_form == 2);
  REQUIRE(r.brute_force);
  CHECK(r.search_params.completion > 0);
  CHECK_FALSE(complexity_report(19, false).brute_force);
}

TEST_CASE("Weber step probe finds no doubled counterexample") {
  for (long p : {3L, 11L}) {
    const auto xs = tuple_from_cf(cf_of(p));
    const WeberProbe probe = weber_step_probe(xs, 20);
    CHECK(probe.counterexamples.empty());
    CHECK(probe.weber_form_prime <= probe.genuine_prime);
    for (const auto& e : probe.extensions) {
      CHECK(e.m > 0);
      if (e.genuine) CHECK(e.D > 0);
    }
  }
  CHECK(throws_code([] { weber_step_probe(ints({1, 2, 3}), 5); }, Errc::NotASolution));
}
