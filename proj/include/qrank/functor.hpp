#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrank/bigint.hpp"
#include "qrank/cfrac.hpp"

namespace qrank {

/// 2x2 integer matrix (a b; c d) acting on a lattice basis.
struct EndoMatrix {
  BigInt a, b, c, d;
  friend bool operator==(const EndoMatrix&, const EndoMatrix&) = default;
};

std::string to_string(const EndoMatrix& M);

/// (a, b, c, d) -> (a, b, -c, -d).
EndoMatrix teichmuller_map(const EndoMatrix& M);

enum class OrderCase {
  OneMod4,       // D = 1 mod 4: alpha = (2m + fn)/2 + n*f*sqrt(-D)/2
  TwoThreeMod4,  // D = 2, 3 mod 4: alpha = m + n*f*sqrt(-D)
};

OrderCase order_case(std::uint64_t D);

/// alpha = m + n*(f*omega) in the order of conductor f.
struct OrderMultiplier {
  BigInt m;
  BigInt n;
  std::uint64_t D = 0;
  std::uint64_t f = 1;
  OrderCase branch = OrderCase::TwoThreeMod4;
};

OrderMultiplier make_multiplier(std::uint64_t D, std::uint64_t f, const BigInt& m, const BigInt& n);

BigInt multiplier_trace(const OrderMultiplier& mult);
/// alpha * conj(alpha) on the imaginary side; throws NonIntegralEntry when the
/// D = 1 mod 4 branch is not integral for this (f, n).
BigInt multiplier_norm(const OrderMultiplier& mult);
bool has_integral_norm(const OrderMultiplier& mult);

/// (trace, -1, norm, 0).
EndoMatrix multiplier_matrix(const OrderMultiplier& mult);

/// The same coordinates (m, n) read in the real order Z + f*omega*Z, with
/// omega = (1 + sqrt(D))/2 or sqrt(D): (trace, -1, norm, 0) over Q(sqrt(D)).
EndoMatrix real_multiplier_matrix(const OrderMultiplier& mult);

/// Non-rational multiplier (n != 0) of least norm, closed form:
/// D = 1 mod 4: (m, n) = (-f/2, 1) for even f, (-f, 2) for odd f;
/// D = 2, 3 mod 4: (m, n) = (0, 1). Ties resolve to n > 0.
OrderMultiplier primitive_multiplier(std::uint64_t D, std::uint64_t f);

struct MinimizerSearch {
  BigInt min_norm;
  std::vector<OrderMultiplier> minimizers;  // every (m, n) attaining min_norm
};

/// Exhaustive minimization of the norm over n != 0, |m|, |n| <= bound, integral entries.
MinimizerSearch minimize_multiplier_exhaustive(std::uint64_t D, std::uint64_t f, std::uint64_t bound);

struct FunctorImage {
  OrderMultiplier multiplier;
  EndoMatrix cm_matrix;
  EndoMatrix rm_matrix;
  std::uint64_t D = 0;
  std::uint64_t f = 0;
};

/// Pushes the primitive multiplier through the functor and reads (D, f) back
/// off the image: the image matrix (0, -1, -N, 0) has eigenvalues +-sqrt(N),
/// N = f^2 D n^2 / 4 (or f^2 D n^2), so D is the square-free kernel of N and
/// f follows from n.
FunctorImage functor_params(std::uint64_t D, std::uint64_t f);

/// omega of the real order: (1 + sqrt(D))/2 when D = 1 mod 4, else sqrt(D).
QuadraticSurd real_order_generator(std::uint64_t D);

}  // namespace qrank
