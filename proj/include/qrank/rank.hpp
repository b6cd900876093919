#pragma once

#include <cstdint>

namespace qrank {

/// Mordell-Weil rank of E(p) divided by 2 h_K: 1 for p = 3 mod 8, 0 for p = 7 mod 8.
int q_rank(std::uint64_t p);

/// Number of reduced primitive forms (a, b, c) with b^2 - 4ac = disc:
/// |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd(a, b, c) = 1.
std::uint64_t class_number(std::int64_t disc);

/// Discriminant of Q(sqrt(-D)) for square-free D >= 1.
std::int64_t imaginary_field_discriminant(std::uint64_t D);

struct RankRecord {
  std::uint64_t p = 0;
  int q_rank = 0;
  std::uint64_t h_K = 0;
  std::uint64_t mw_rank = 0;  // 2 * h_K * q_rank
};

RankRecord mordell_weil_rank(std::uint64_t p);

struct Verdict {
  std::uint64_t p = 0;
  int q_rank = 0;
  int complexity = 0;
  bool holds = false;  // q_rank + 1 == complexity
};

Verdict verify_conjecture(std::uint64_t p, int complexity);

}  // namespace qrank
