#include "qrank/rank.hpp"

#include <numeric>
#include <string>

#include "qrank/error.hpp"
#include "qrank/pell.hpp"
#include "qrank/primes.hpp"

namespace qrank {

int q_rank(std::uint64_t p) {
  require_prime_3mod4(p);
  return p % 8 == 3 ? 1 : 0;
}

std::uint64_t class_number(std::int64_t disc) {
  if (disc >= 0) throw Error(Errc::InvalidDiscriminant, "discriminant must be negative");
  const std::int64_t r = ((disc % 4) + 4) % 4;
  if (r != 0 && r != 1) {
    throw Error(Errc::InvalidDiscriminant, std::to_string(disc) + " is not 0 or 1 mod 4");
  }
  const std::int64_t n = -disc;
  std::uint64_t count = 0;
  // Reduced forms have 3a^2 <= |disc|.
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    // b = disc (mod 2); b ranges over -a < b <= a.
    std::int64_t b = (n % 2 == 0) ? 0 : 1;
    while (b > -a) b -= 2;
    if (b <= -a) b += 2;
    for (; b <= a; b += 2) {
      const std::int64_t num = b * b + n;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (a == c)) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

std::int64_t imaginary_field_discriminant(std::uint64_t D) {
  if (D == 0 || !is_square_free(D)) throw Error(Errc::NotSquareFree, std::to_string(D) + " is not square-free");
  const auto d = static_cast<std::int64_t>(D);
  return D % 4 == 3 ? -d : -4 * d;
}

RankRecord mordell_weil_rank(std::uint64_t p) {
  RankRecord out;
  out.p = p;
  out.q_rank = q_rank(p);
  out.h_K = class_number(-static_cast<std::int64_t>(p));
  out.mw_rank = 2 * out.h_K * static_cast<std::uint64_t>(out.q_rank);
  return out;
}

Verdict verify_conjecture(std::uint64_t p, int complexity) {
  Verdict v;
  v.p = p;
  v.q_rank = q_rank(p);
  v.complexity = complexity;
  v.holds = v.q_rank + 1 == complexity;
  return v;
}

}  // namespace qrank
