#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qrank/bigint.hpp"
#include "qrank/cfrac.hpp"
#include "qrank/poly.hpp"

namespace qrank {

/// Symbolic Muir symbols are built for periods up to this length; continuant
/// term counts grow like Fibonacci numbers.
inline constexpr std::size_t kMaxSymbolicPeriod = 16;

/// Euler continuant: K() = 1, K(v1) = v1,
/// K(v1..vn) = vn*K(v1..v(n-1)) + K(v1..v(n-2)).
BigInt continuant(std::span<const BigInt> values);
MultiPoly continuant(std::span<const MultiPoly> values, const MultiPoly::Vars& vars);

/// Variables x0..xP followed by m.
MultiPoly::Vars muir_vars(std::size_t P);

/// A_{i,j} = K(x_j..x_{j+i}), B_{i,j} = K(x_{j+1}..x_{j+i}); A_{-1,j} = 1,
/// B_{-1,j} = 0.
MultiPoly muir_A(std::size_t P, int i, std::size_t j);
MultiPoly muir_B(std::size_t P, int i, std::size_t j);
BigInt muir_A(std::span<const BigInt> xs, int i, std::size_t j);
BigInt muir_B(std::span<const BigInt> xs, int i, std::size_t j);

/// x_P - m*A_{P-2,1} + (-1)^P A_{P-3,1} B_{P-3,1} over muir_vars(P).
MultiPoly continuant_equation(std::size_t P);

/// Imposes x_i = x_{P-i} (1 <= i < P) and x_P = 2 x0 on a polynomial over
/// muir_vars(P), eliminating the mirrored coordinates.
MultiPoly apply_palindrome(const MultiPoly& f, std::size_t P);

/// x0^2 + m*A_{P-3,1} - (-1)^P B_{P-3,1}^2 with the palindrome imposed.
MultiPoly d_polynomial(std::size_t P);

/// A candidate point (x0, ..., xP) and multiplier m of the continuant equation.
struct SolutionTuple {
  std::vector<BigInt> xs;
  BigInt m;
};

/// (a0, p1, ..., pk) read off a purely periodic tail.
std::vector<BigInt> tuple_from_cf(const PeriodicCF& cf);
PeriodicCF cf_from_tuple(std::span<const BigInt> xs);

/// x_i = x_{P-i} for 1 <= i <= P-1.
bool is_palindromic(std::span<const BigInt> xs);

BigInt continuant_residual(std::span<const BigInt> xs, const BigInt& m);

/// The m solving the continuant equation, when it is a positive integer.
std::optional<BigInt> solve_m(std::span<const BigInt> xs);

/// D = x_P^2/4 + m*A_{P-3,1} - (-1)^P B_{P-3,1}^2 on the x_P = 2 x0 branch.
BigInt d_from_solution(std::span<const BigInt> xs, const BigInt& m);

/// The value [x0; x1, ..., xP] as an exact surd; covers the x_P = 2 x0 - 1
/// branch where the closed D formula is not integral.
QuadraticSurd surd_from_tuple(std::span<const BigInt> xs);

}  // namespace qrank
