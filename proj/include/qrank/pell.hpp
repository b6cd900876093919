#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "qrank/bigint.hpp"

namespace qrank {

struct PellSolution {
  BigInt x;
  BigInt y;
  int rhs = 0;
};

/// Least-y positive solution of x^2 - D y^2 = rhs, rhs in {1, -1, 2, -2}.
/// For D >= 5 every solution is a convergent of sqrt(D) and two periods
/// suffice; D in {2, 3} falls back to exhaustive search over small y.
std::optional<PellSolution> pell_minimal(const BigInt& D, int rhs);

struct PrimeClass {
  std::uint64_t p = 0;
  unsigned residue8 = 0;
  int solvable_rhs = 0;                // the one of -1, 2, -2 that is solvable
  std::array<bool, 3> solvable{};      // in the order -1, 2, -2
  std::size_t period_len = 0;
};

/// Exactly one of x^2 - p y^2 = -1, 2, -2 is solvable for an odd prime p.
PrimeClass trichotomy(std::uint64_t p);

struct PeriodParity {
  std::size_t period_len = 0;
  std::size_t period_mod4 = 0;
};

PeriodParity period_parity_check(std::uint64_t p);

/// Throws NotPrime / EvenPrime / WrongResidue unless p is a prime = 3 mod 4.
void require_prime_3mod4(std::uint64_t p);

}  // namespace qrank
