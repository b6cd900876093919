#include <doctest.h>

#include "helpers.hpp"
#include "qrank/cfrac.hpp"
#include "qrank/muir.hpp"
#include "qrank/poly.hpp"
#include "qrank/primes.hpp"

using namespace qrank;
using qrank::test::ints;
using qrank::test::throws_code;

TEST_CASE("polynomial arithmetic and canonical text") {
  const auto vars = make_vars({"x", "y"});
  const MultiPoly x = MultiPoly::variable(vars, 0);
  const MultiPoly y = MultiPoly::variable(vars, 1);
  const MultiPoly one = MultiPoly::constant(vars, 1);
  CHECK(to_string((x + y).pow(2)) == "x^2 + 2*x*y + y^2");
  CHECK(to_string((x - y) * (x + y)) == "x^2 - y^2");
  CHECK(to_string(x * y - one) == "x*y - 1");
  CHECK(to_string(-x) == "-x");
  CHECK(to_string(x - x) == "0");
  CHECK((x - x).is_zero());
  CHECK(((x + one) * (x - one)).coefficient({2, 0}) == 1);
  CHECK(((x + one) * (x - one)).coefficient({0, 0}) == -1);
  CHECK(((x + one) * (x - one)).coefficient({1, 0}) == 0);

  const MultiPoly f = (x + y).pow(3) - x * y * BigInt(5);
  CHECK(f.evaluate(ints({2, -1})) == 1 + 10);
  CHECK(f.substitute(1, x) == x.pow(3) * BigInt(8) - x.pow(2) * BigInt(5));
}

TEST_CASE("grlex order: degree first, then earlier exponents") {
  GrlexGreater g;
  CHECK(g({2, 0}, {1, 0}));
  CHECK(g({0, 2}, {1, 0}));
  CHECK(g({2, 0}, {1, 1}));
  CHECK_FALSE(g({1, 1}, {2, 0}));
  CHECK_FALSE(g({1, 1}, {1, 1}));
}

TEST_CASE("numeric continuants") {
  CHECK(continuant(std::span<const BigInt>{}) == 1);
  CHECK(continuant(ints({7})) == 7);
  CHECK(continuant(ints({2, 3})) == 7);
  // K(a0..an) is the numerator of [a0; a1..an]: [4; 2,1,3] = 48/11.
  CHECK(continuant(ints({4, 2, 1, 3})) == 48);
  CHECK(continuant(ints({2, 1, 3})) == 11);
}

TEST_CASE("Muir symbols for P = 4 print as in the worked example") {
  CHECK(to_string(muir_A(4, 1, 1)) == "x1*x2 + 1");
  CHECK(to_string(muir_B(4, 1, 1)) == "x2");
  CHECK(to_string(muir_A(4, 2, 1)) == "x1*x2*x3 + x1 + x3");
  CHECK(to_string(muir_A(4, -1, 1)) == "1");
  CHECK(to_string(muir_B(4, -1, 1)) == "0");
}

TEST_CASE("symbolic and numeric Muir symbols agree") {
  const auto xs = ints({4, 2, 1, 3, 1, 2, 8, 5});  // P = 6, then m
  for (int i = -1; i <= 4; ++i) {
    for (std::size_t j = 1; j + i <= 6 && j <= 3; ++j) {
      CHECK(muir_A(6, i, j).evaluate(xs) == muir_A(std::span<const BigInt>(xs).first(7), i, j));
      CHECK(muir_B(6, i, j).evaluate(xs) == muir_B(std::span<const BigInt>(xs).first(7), i, j));
    }
  }
}

TEST_CASE("continuant equation residual and solve_m") {
  CHECK(continuant_residual(ints({1, 1, 2}), BigInt(2)) == 0);
  CHECK(continuant_residual(ints({6, 1, 5, 1, 12}), BigInt(6)) == 0);
  CHECK(continuant_residual(ints({6, 1, 5, 1, 12}), BigInt(5)) != 0);
  CHECK(solve_m(ints({1, 1, 2})) == BigInt(2));
  CHECK(solve_m(ints({6, 1, 5, 1, 12})) == BigInt(6));
  // Culminating P = 4 point [2; 1,2,1,4] has no integral m.
  CHECK_FALSE(solve_m(ints({2, 1, 2, 1, 4})));

  const auto m19 = solve_m(ints({4, 2, 1, 3, 1, 2, 8}));
  REQUIRE(m19);
  CHECK(continuant_residual(ints({4, 2, 1, 3, 1, 2, 8}), *m19) == 0);
  CHECK(throws_code([] { solve_m(ints({1})); }, Errc::InvalidArgument));
}

TEST_CASE("continuant equation polynomial vanishes on the period tuples") {
  for (long p : {3L, 7L, 11L, 19L, 23L, 47L, 59L}) {
    const PeriodicCF cf = expand_sqrt(BigInt(p));
    std::vector<BigInt> point = tuple_from_cf(cf);
    const auto m = solve_m(point);
    REQUIRE(m);
    point.push_back(*m);
    const MultiPoly f = continuant_equation(cf.period_length());
    CHECK(f.evaluate(point) == 0);
    CHECK(d_polynomial(cf.period_length()).evaluate(point) == p);
  }
}

TEST_CASE("d_from_solution and the round trip") {
  CHECK(d_from_solution(ints({1, 1, 2}), BigInt(2)) == 3);
  CHECK(d_from_solution(ints({6, 1, 5, 1, 12}), BigInt(6)) == 47);
  CHECK(d_from_solution(ints({3, 3, 6}), *solve_m(ints({3, 3, 6}))) == 11);
  CHECK(throws_code([] { d_from_solution(ints({1, 1, 2}), BigInt(3)); }, Errc::NotASolution));
  CHECK(throws_code([] { d_from_solution(ints({1, 1, 1}), BigInt(1)); }, Errc::OddXp));

  for (long D = 2; D < 2000; ++D) {
    if (is_perfect_square(BigInt(D))) continue;
    const PeriodicCF cf = expand_sqrt(BigInt(D));
    if (cf.period_length() % 2 != 0) continue;  // odd periods give m = 0
    const auto xs = tuple_from_cf(cf);
    const auto m = solve_m(xs);
    REQUIRE(m);
    CHECK(d_from_solution(xs, *m) == D);
    CHECK(cf_from_tuple(xs) == cf);
    CHECK(is_palindromic(xs));
  }
}

TEST_CASE("odd periods give m = 0") {
  // sqrt(13) = [3; 1,1,1,1,6]: the numerator vanishes.
  CHECK(continuant_residual(ints({3, 1, 1, 1, 1, 6}), BigInt(0)) == 0);
  CHECK_FALSE(solve_m(ints({3, 1, 1, 1, 1, 6})));
}

TEST_CASE("odd x_P branch is expressed as an exact surd") {
  // [1; 1] = (1 + sqrt 5)/2: x_P = 1 = 2*x0 - 1.
  CHECK(surd_from_tuple(ints({1, 1})) == QuadraticSurd{1, 2, 5});
  CHECK(surd_from_tuple(ints({2, 3})) == QuadraticSurd{1, 2, 13});
}
