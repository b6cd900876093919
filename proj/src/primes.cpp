#include "qrank/primes.hpp"

#include <array>

namespace qrank {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) noexcept {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_class(std::uint64_t from, std::uint64_t to,
                                           std::uint64_t modulus, std::uint64_t residue) {
  std::vector<std::uint64_t> out;
  if (modulus == 0 || from > to) return out;
  residue %= modulus;
  std::uint64_t start = from - from % modulus + residue;
  if (start < from) {
    if (start > UINT64_MAX - modulus) return out;
    start += modulus;
  }
  for (std::uint64_t n = start; n <= to; n += modulus) {
    if (is_prime(n)) out.push_back(n);
    if (n > UINT64_MAX - modulus) break;
  }
  return out;
}

bool is_square_free(std::uint64_t n) noexcept { return n != 0 && square_part_root(n) == 1; }

std::uint64_t square_part_root(std::uint64_t n) noexcept {
  if (n == 0) return 0;
  std::uint64_t root = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      root *= p;
    }
  }
  return root;
}

}  // namespace qrank
