#include <doctest.h>

#include "helpers.hpp"
#include "qrank/cfrac.hpp"
#include "qrank/primes.hpp"

using namespace qrank;
using qrank::test::ints;
using qrank::test::throws_code;

namespace {

PeriodicCF cf_of(long d) { return expand_sqrt(BigInt(d)); }

}  // namespace

TEST_CASE("expand_sqrt on small radicands") {
  CHECK(to_string(cf_of(3)) == "[1; 1,2]");
  CHECK(to_string(cf_of(19)) == "[4; 2,1,3,1,2,8]");
  CHECK(to_string(cf_of(2)) == "[1; 2]");
  CHECK(to_string(cf_of(83)) == "[9; 9,18]");
  CHECK(to_string(cf_of(94)) == "[9; 1,2,3,1,1,5,1,8,1,5,1,1,3,2,1,18]");
  CHECK(cf_of(61).period_length() == 11);
}

TEST_CASE("expand_sqrt rejects squares and small inputs") {
  CHECK(throws_code([] { expand_sqrt(BigInt(4)); }, Errc::PerfectSquareInput));
  CHECK(throws_code([] { expand_sqrt(BigInt(1)); }, Errc::NonPositiveInput));
  CHECK(throws_code([] { expand_sqrt(BigInt(-7)); }, Errc::NonPositiveInput));
}

TEST_CASE("period structure: trailing 2a0 and palindromic interior") {
  for (long d = 2; d < 3000; ++d) {
    if (is_perfect_square(BigInt(d))) continue;
    const PeriodicCF cf = cf_of(d);
    const auto& w = cf.period;
    REQUIRE(!w.empty());
    CHECK(w.back() == 2 * cf.a0());
    for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i] == w[w.size() - 2 - i]);
    CHECK_FALSE(is_repetition(w));
  }
}

TEST_CASE("text form round trip") {
  const PeriodicCF cf = parse_cf("[4; 2,1,3,1,2,8]");
  CHECK(cf == cf_of(19));
  CHECK(parse_cf(" [ 4 ;2, 1,3 ,1,2,8 ] ") == cf);
  const PeriodicCF headed = parse_cf("[0,2; 1,3]");
  CHECK(headed.head == ints({0, 2}));
  CHECK(to_string(headed) == "[0,2; 1,3]");
  CHECK(throws_code([] { parse_cf("[4; 2,1"); }, Errc::ParseError));
  CHECK(throws_code([] { parse_cf("[4; 0,8]"); }, Errc::ParseError));
  CHECK(throws_code([] { parse_cf("[4; 8] x"); }, Errc::ParseError));
}

TEST_CASE("term indexes head then period") {
  const PeriodicCF cf = cf_of(7);  // [2; 1,1,1,4]
  CHECK(cf.term(0) == 2);
  CHECK(cf.term(1) == 1);
  CHECK(cf.term(4) == 4);
  CHECK(cf.term(5) == 1);
  CHECK(cf.term(8) == 4);
}

TEST_CASE("expand_surd") {
  const QuadraticSurd phi{1, 2, 5};
  const PeriodicCF g = expand_surd(phi);
  CHECK(g.head == ints({1}));
  CHECK(g.period == ints({1}));

  const PeriodicCF t = expand_surd(QuadraticSurd{1, 2, 13});
  CHECK(t.head == ints({2}));
  CHECK(t.period == ints({3}));

  CHECK(expand_surd(QuadraticSurd::sqrt_of(3)) == cf_of(3));
  CHECK(expand_surd(QuadraticSurd::sqrt_of(1000003)) == cf_of(1000003));

  // A pre-period: 1/(sqrt(2) - 1) + 5 = 6 + sqrt(2) = [7; 2]; sqrt(2)/3 < 1.
  CHECK(to_string(expand_surd(QuadraticSurd{6, 1, 2})) == "[7; 2]");
  const PeriodicCF third = expand_surd(QuadraticSurd{0, 3, 2});  // 0.4714...
  CHECK(third.a0() == 0);
  CHECK(reconstruct_surd(third) == QuadraticSurd{0, 3, 2});

  CHECK(throws_code([] { expand_surd(QuadraticSurd{1, 2, 9}); }, Errc::RationalInput));
  CHECK(throws_code([] { expand_surd(QuadraticSurd{-3, 1, 2}); }, Errc::NonPositiveInput));
}

TEST_CASE("convergents of sqrt(19), sqrt(7), sqrt(3)") {
  const ConvergentTable t = convergents(cf_of(19), 4);
  CHECK(t.A == ints({4, 9, 13, 48}));
  CHECK(t.B == ints({1, 2, 3, 11}));

  const ConvergentTable s7 = convergents(cf_of(7), 2);
  CHECK(s7.A == ints({2, 3}));
  CHECK(s7.B == ints({1, 1}));
  CHECK(s7.A[1] * s7.A[1] - 7 * s7.B[1] * s7.B[1] == 2);

  const ConvergentTable s3 = convergents(cf_of(3), 1);
  CHECK(s3.A == ints({1}));
  CHECK(s3.B == ints({1}));
  CHECK(s3.A[0] * s3.A[0] - 3 * s3.B[0] * s3.B[0] == -2);
}

TEST_CASE("determinant identity and Q table") {
  for (long d : {2L, 13L, 19L, 94L, 991L, 1000003L}) {
    const BigInt D(d);
    const ConvergentTable t = convergents(cf_of(d), 40);
    const ConvergentTable s = sqrt_convergents(D, 40);
    CHECK(t.A == s.A);
    CHECK(t.B == s.B);
    CHECK(t.Q == s.Q);
    for (std::size_t i = 1; i < t.A.size(); ++i) {
      const BigInt det = t.A[i] * t.B[i - 1] - t.A[i - 1] * t.B[i];
      CHECK(det == (i % 2 == 1 ? 1 : -1));
      // A_{i-1}^2 - D B_{i-1}^2 = (-1)^i Q_i
      const BigInt n = t.A[i - 1] * t.A[i - 1] - D * t.B[i - 1] * t.B[i - 1];
      CHECK(n == (i % 2 == 0 ? t.Q[i] : BigInt(-t.Q[i])));
    }
  }
}

TEST_CASE("reconstruct_surd inverts the expansion") {
  CHECK(reconstruct_surd(parse_cf("[1; 1,2]")) == QuadraticSurd::sqrt_of(3));
  CHECK(reconstruct_surd(parse_cf("[6; 1,5,1,12]")) == QuadraticSurd::sqrt_of(47));
  CHECK(reconstruct_surd(parse_cf("[1; 1]")) == QuadraticSurd{1, 2, 5});
  for (long d = 2; d < 500; ++d) {
    if (is_perfect_square(BigInt(d))) continue;
    CHECK(reconstruct_surd(cf_of(d)) == QuadraticSurd::sqrt_of(d));
  }
  for (const char* text : {"[2; 3]", "[0,2; 1,3]", "[5,1,1; 4,7,2]", "[3; 1,1,1,1,6]"}) {
    const PeriodicCF cf = parse_cf(text);
    CHECK(expand_surd(reconstruct_surd(cf)) == cf);
  }
  CHECK(throws_code([] { reconstruct_surd(PeriodicCF{{ints({1})}, {}}); }, Errc::DegeneratePeriod));
}

TEST_CASE("surd equality and reduction") {
  CHECK(QuadraticSurd{2, 4, 20} == QuadraticSurd{1, 2, 5});
  CHECK(QuadraticSurd{-2, -4, 20} == QuadraticSurd{-1, -2, 5});
  CHECK_FALSE(QuadraticSurd{-1, -2, 5} == QuadraticSurd{1, 2, 5});  // (1 - sqrt 5)/2
  CHECK_FALSE(QuadraticSurd{1, 2, 5} == QuadraticSurd{1, 2, 13});
  CHECK(to_string(QuadraticSurd{1, 2, 5}) == "(1 + sqrt(5))/2");
  CHECK(QuadraticSurd{1, 2, 5}.approx() == doctest::Approx(1.6180339887));
}
