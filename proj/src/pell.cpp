#include "qrank/pell.hpp"

#include <string>

#include "qrank/cfrac.hpp"
#include "qrank/error.hpp"
#include "qrank/primes.hpp"

namespace qrank {
namespace {

// For D in {2, 3} the fundamental unit has y <= 2, so any minimal solution
// of |rhs| <= 2 has y below this bound.
constexpr unsigned long kSmallDSearchBound = 16;

}  // namespace

std::optional<PellSolution> pell_minimal(const BigInt& D, int rhs) {
  if (rhs != 1 && rhs != -1 && rhs != 2 && rhs != -2) {
    throw Error(Errc::UnsupportedRhs, "rhs must be one of 1, -1, 2, -2; got " + std::to_string(rhs));
  }
  if (D < 2) throw Error(Errc::NonPositiveInput, "expected D >= 2, got " + to_string(D));
  if (is_perfect_square(D)) throw Error(Errc::PerfectSquareInput, to_string(D) + " is a perfect square");

  if (D < 5) {
    for (unsigned long y = 1; y <= kSmallDSearchBound; ++y) {
      BigInt x2 = D * y * y + rhs;
      if (x2 > 0 && is_perfect_square(x2)) return PellSolution{isqrt(x2), BigInt(y), rhs};
    }
    return std::nullopt;
  }

  const PeriodicCF cf = expand_sqrt(D);
  const ConvergentTable t = sqrt_convergents(D, 2 * cf.period_length());
  for (std::size_t i = 0; i < t.A.size(); ++i) {
    if (t.A[i] * t.A[i] - D * t.B[i] * t.B[i] == rhs) return PellSolution{t.A[i], t.B[i], rhs};
  }
  return std::nullopt;
}

PrimeClass trichotomy(std::uint64_t p) {
  if (p == 2) throw Error(Errc::EvenPrime, "2 is excluded");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  PrimeClass out;
  out.p = p;
  out.residue8 = static_cast<unsigned>(p % 8);
  const BigInt D = big_u(p);
  constexpr std::array<int, 3> kRhs{-1, 2, -2};
  int count = 0;
  for (std::size_t i = 0; i < kRhs.size(); ++i) {
    out.solvable[i] = pell_minimal(D, kRhs[i]).has_value();
    if (out.solvable[i]) {
      out.solvable_rhs = kRhs[i];
      ++count;
    }
  }
  out.period_len = expand_sqrt(D).period_length();
  if (count != 1) {
    throw std::logic_error("trichotomy violated for p = " + std::to_string(p));
  }
  if ((out.period_len % 2 == 1) != out.solvable[0]) {
    throw std::logic_error("period parity disagrees with x^2 - p y^2 = -1 for p = " + std::to_string(p));
  }
  return out;
}

void require_prime_3mod4(std::uint64_t p) {
  if (p == 2) throw Error(Errc::EvenPrime, "2 is excluded");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p % 4 != 3) {
    throw Error(Errc::WrongResidue, std::to_string(p) + " = " + std::to_string(p % 4) + " mod 4, expected 3");
  }
}

PeriodParity period_parity_check(std::uint64_t p) {
  require_prime_3mod4(p);
  PeriodParity out;
  out.period_len = expand_sqrt(big_u(p)).period_length();
  out.period_mod4 = out.period_len % 4;
  return out;
}

}  // namespace qrank
