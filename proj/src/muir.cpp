#include "qrank/muir.hpp"

#include <string>

#include "qrank/error.hpp"

namespace qrank {
namespace {

void check_symbolic_period(std::size_t P) {
  if (P < 1 || P > kMaxSymbolicPeriod) {
    throw Error(Errc::OutOfRange, "symbolic Muir symbols support 1 <= P <= " +
                                      std::to_string(kMaxSymbolicPeriod) + ", got P = " + std::to_string(P));
  }
}

void check_symbol_indices(std::size_t P, int i, std::size_t j) {
  if (i < -1) throw Error(Errc::OutOfRange, "Muir symbol index i must be >= -1");
  if (i >= 0 && j + static_cast<std::size_t>(i) > P) {
    throw Error(Errc::OutOfRange, "Muir symbol reaches past x" + std::to_string(P));
  }
}

std::size_t period_of(std::span<const BigInt> xs) {
  if (xs.size() < 3) throw Error(Errc::InvalidArgument, "tuple needs P >= 2 (at least 3 entries)");
  return xs.size() - 1;
}

}  // namespace

BigInt continuant(std::span<const BigInt> values) {
  BigInt cur = 1, prev = 0;
  for (const auto& v : values) {
    BigInt next = v * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MultiPoly continuant(std::span<const MultiPoly> values, const MultiPoly::Vars& vars) {
  MultiPoly cur = MultiPoly::constant(vars, 1);
  MultiPoly prev(vars);
  for (const auto& v : values) {
    MultiPoly next = v * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MultiPoly::Vars muir_vars(std::size_t P) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= P; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("m");
  return make_vars(std::move(names));
}

namespace {

MultiPoly symbolic_slice(std::size_t P, std::size_t first, std::size_t last) {
  check_symbolic_period(P);
  const auto vars = muir_vars(P);
  std::vector<MultiPoly> items;
  for (std::size_t k = first; k < last; ++k) items.push_back(MultiPoly::variable(vars, k));
  return continuant(items, vars);
}

}  // namespace

MultiPoly muir_A(std::size_t P, int i, std::size_t j) {
  check_symbolic_period(P);
  check_symbol_indices(P, i, j);
  if (i == -1) return MultiPoly::constant(muir_vars(P), 1);
  return symbolic_slice(P, j, j + static_cast<std::size_t>(i) + 1);
}

MultiPoly muir_B(std::size_t P, int i, std::size_t j) {
  check_symbolic_period(P);
  check_symbol_indices(P, i, j);
  if (i == -1) return MultiPoly(muir_vars(P));
  return symbolic_slice(P, j + 1, j + static_cast<std::size_t>(i) + 1);
}

BigInt muir_A(std::span<const BigInt> xs, int i, std::size_t j) {
  check_symbol_indices(xs.size() - 1, i, j);
  if (i == -1) return 1;
  return continuant(xs.subspan(j, static_cast<std::size_t>(i) + 1));
}

BigInt muir_B(std::span<const BigInt> xs, int i, std::size_t j) {
  check_symbol_indices(xs.size() - 1, i, j);
  if (i == -1) return 0;
  return continuant(xs.subspan(j + 1, static_cast<std::size_t>(i)));
}

MultiPoly continuant_equation(std::size_t P) {
  check_symbolic_period(P);
  if (P < 2) throw Error(Errc::OutOfRange, "the continuant equation needs P >= 2");
  const auto vars = muir_vars(P);
  const int p = static_cast<int>(P);
  MultiPoly xP = MultiPoly::variable(vars, P);
  MultiPoly m = MultiPoly::variable(vars, P + 1);
  MultiPoly f = xP - m * muir_A(P, p - 2, 1);
  MultiPoly ab = muir_A(P, p - 3, 1) * muir_B(P, p - 3, 1);
  return P % 2 == 0 ? f + ab : f - ab;
}

MultiPoly apply_palindrome(const MultiPoly& f, std::size_t P) {
  check_symbolic_period(P);
  const auto& vars = f.vars();
  MultiPoly out = f.substitute(P, MultiPoly::variable(vars, 0) * BigInt(2));
  for (std::size_t i = 1; i < P; ++i) {
    const std::size_t mirror = P - i;
    if (mirror > i) out = out.substitute(mirror, MultiPoly::variable(vars, i));
  }
  return out;
}

MultiPoly d_polynomial(std::size_t P) {
  check_symbolic_period(P);
  if (P < 2) throw Error(Errc::OutOfRange, "the D formula needs P >= 2");
  const auto vars = muir_vars(P);
  const int p = static_cast<int>(P);
  MultiPoly x0 = MultiPoly::variable(vars, 0);
  MultiPoly m = MultiPoly::variable(vars, P + 1);
  MultiPoly b = muir_B(P, p - 3, 1);
  MultiPoly f = x0 * x0 + m * muir_A(P, p - 3, 1);
  f = P % 2 == 0 ? f - b * b : f + b * b;
  return apply_palindrome(f, P);
}

std::vector<BigInt> tuple_from_cf(const PeriodicCF& cf) {
  if (cf.head.size() != 1) throw Error(Errc::InvalidArgument, "expected a head of exactly a0");
  std::vector<BigInt> xs;
  xs.reserve(cf.period.size() + 1);
  xs.push_back(cf.a0());
  xs.insert(xs.end(), cf.period.begin(), cf.period.end());
  return xs;
}

PeriodicCF cf_from_tuple(std::span<const BigInt> xs) {
  if (xs.size() < 2) throw Error(Errc::InvalidArgument, "tuple needs at least x0 and x1");
  PeriodicCF cf;
  cf.head.push_back(xs[0]);
  cf.period.assign(xs.begin() + 1, xs.end());
  return cf;
}

bool is_palindromic(std::span<const BigInt> xs) {
  if (xs.size() < 2) return false;
  const std::size_t P = xs.size() - 1;
  for (std::size_t i = 1; i < P; ++i) {
    if (xs[i] != xs[P - i]) return false;
  }
  return true;
}

BigInt continuant_residual(std::span<const BigInt> xs, const BigInt& m) {
  const std::size_t P = period_of(xs);
  const int p = static_cast<int>(P);
  BigInt r = xs[P] - m * muir_A(xs, p - 2, 1);
  BigInt ab = muir_A(xs, p - 3, 1) * muir_B(xs, p - 3, 1);
  return P % 2 == 0 ? BigInt(r + ab) : BigInt(r - ab);
}

std::optional<BigInt> solve_m(std::span<const BigInt> xs) {
  const std::size_t P = period_of(xs);
  const int p = static_cast<int>(P);
  const BigInt den = muir_A(xs, p - 2, 1);
  if (den == 0) throw Error(Errc::ZeroDenominator, "A_{P-2,1} vanishes");
  BigInt ab = muir_A(xs, p - 3, 1) * muir_B(xs, p - 3, 1);
  BigInt num = P % 2 == 0 ? BigInt(xs[P] + ab) : BigInt(xs[P] - ab);
  if (num % den != 0) return std::nullopt;
  BigInt m = num / den;
  if (m <= 0) return std::nullopt;
  return m;
}

BigInt d_from_solution(std::span<const BigInt> xs, const BigInt& m) {
  const std::size_t P = period_of(xs);
  const int p = static_cast<int>(P);
  if (xs[P] % 2 != 0) {
    throw Error(Errc::OddXp, "x_P = " + to_string(xs[P]) + " is odd; use surd_from_tuple for that branch");
  }
  if (continuant_residual(xs, m) != 0) throw Error(Errc::NotASolution, "tuple and m do not solve the continuant equation");
  BigInt half = xs[P] / 2;
  BigInt b = muir_B(xs, p - 3, 1);
  BigInt D = half * half + m * muir_A(xs, p - 3, 1);
  return P % 2 == 0 ? BigInt(D - b * b) : BigInt(D + b * b);
}

QuadraticSurd surd_from_tuple(std::span<const BigInt> xs) {
  return reconstruct_surd(cf_from_tuple(xs));
}

}  // namespace qrank
