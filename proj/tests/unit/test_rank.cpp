#include <doctest.h>

#include "helpers.hpp"
#include "qrank/primes.hpp"
#include "qrank/rank.hpp"

using namespace qrank;
using qrank::test::throws_code;

namespace {

// Class number of Q(sqrt(-p)) for a prime p = 3 mod 4, p > 3, from the
// analytic class number formula h = -(1/p) sum_{n<p} (n/p) n.
long dirichlet_h(long p) {
  long sum = 0;
  for (long n = 1; n < p; ++n) {
    long r = 1, base = n % p, e = (p - 1) / 2;  // Euler's criterion
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    sum += (r == 1 ? n : -n);
  }
  return -sum / p;
}

}  // namespace

TEST_CASE("q_rank by residue") {
  CHECK(q_rank(3) == 1);
  CHECK(q_rank(7) == 0);
  CHECK(q_rank(59) == 1);
  CHECK(throws_code([] { q_rank(13); }, Errc::WrongResidue));
}

TEST_CASE("class numbers") {
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-4) == 1);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-47) == 5);
  CHECK(class_number(-59) == 3);
  CHECK(class_number(-71) == 7);
  CHECK(class_number(-163) == 1);
  CHECK(class_number(-20) == 2);
  CHECK(class_number(-84) == 4);
  CHECK(class_number(-12) == 1);  // non-fundamental: only (1,0,3) is primitive
  CHECK(throws_code([] { class_number(-5); }, Errc::InvalidDiscriminant));
  CHECK(throws_code([] { class_number(5); }, Errc::InvalidDiscriminant));
  CHECK(throws_code([] { class_number(0); }, Errc::InvalidDiscriminant));
}

TEST_CASE("class numbers match the analytic formula") {
  for (std::uint64_t p : primes_in_class(7, 3000, 4, 3)) {
    CHECK(class_number(-static_cast<std::int64_t>(p)) == static_cast<std::uint64_t>(dirichlet_h(p)));
  }
}

TEST_CASE("imaginary field discriminants") {
  CHECK(imaginary_field_discriminant(3) == -3);
  CHECK(imaginary_field_discriminant(1) == -4);
  CHECK(imaginary_field_discriminant(5) == -20);
  CHECK(imaginary_field_discriminant(2) == -8);
  CHECK(throws_code([] { imaginary_field_discriminant(12); }, Errc::NotSquareFree));
}

TEST_CASE("Mordell-Weil rank and verdicts") {
  CHECK(mordell_weil_rank(3).mw_rank == 2);
  CHECK(mordell_weil_rank(7).mw_rank == 0);
  const RankRecord r = mordell_weil_rank(59);
  CHECK(r.h_K == 3);
  CHECK(r.mw_rank == 6);
  CHECK(verify_conjecture(3, 2).holds);
  CHECK(verify_conjecture(7, 1).holds);
  CHECK_FALSE(verify_conjecture(7, 2).holds);
  CHECK(verify_conjecture(7, 2).q_rank == 0);
}
