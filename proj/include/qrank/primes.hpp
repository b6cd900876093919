#pragma once

#include <cstdint>
#include <vector>

namespace qrank {

/// Deterministic primality test for the full 64-bit range: trial division by
/// small primes, then strong-pseudoprime tests to the first twelve prime bases.
bool is_prime(std::uint64_t n) noexcept;

/// Primes p with from <= p <= to and p % modulus == residue, ascending.
std::vector<std::uint64_t> primes_in_class(std::uint64_t from, std::uint64_t to,
                                           std::uint64_t modulus, std::uint64_t residue);

bool is_square_free(std::uint64_t n) noexcept;

/// Largest square s^2 dividing n, returned as s; n / s^2 is square-free.
std::uint64_t square_part_root(std::uint64_t n) noexcept;

}  // namespace qrank
