#include "qrank/functor.hpp"

#include <algorithm>
#include <string>

#include "qrank/error.hpp"
#include "qrank/primes.hpp"

namespace qrank {
namespace {

void require_params(std::uint64_t D, std::uint64_t f) {
  if (D < 2) throw Error(Errc::InvalidArgument, "D must be >= 2");
  if (!is_square_free(D)) throw Error(Errc::NotSquareFree, std::to_string(D) + " is not square-free");
  if (f < 1) throw Error(Errc::InvalidArgument, "conductor f must be >= 1");
}

// 4 * norm on the imaginary side: (2m + fn)^2 + f^2 D n^2, or 4(m^2 + f^2 D n^2).
BigInt four_norm(const OrderMultiplier& a) {
  const BigInt fD = big_u(a.f) * big_u(a.f) * big_u(a.D);
  if (a.branch == OrderCase::OneMod4) {
    const BigInt t = 2 * a.m + big_u(a.f) * a.n;
    return t * t + fD * a.n * a.n;
  }
  return 4 * (a.m * a.m + fD * a.n * a.n);
}

}  // namespace

std::string to_string(const EndoMatrix& M) {
  return "(" + to_string(M.a) + "," + to_string(M.b) + "," + to_string(M.c) + "," + to_string(M.d) + ")";
}

EndoMatrix teichmuller_map(const EndoMatrix& M) { return {M.a, M.b, -M.c, -M.d}; }

OrderCase order_case(std::uint64_t D) { return D % 4 == 1 ? OrderCase::OneMod4 : OrderCase::TwoThreeMod4; }

OrderMultiplier make_multiplier(std::uint64_t D, std::uint64_t f, const BigInt& m, const BigInt& n) {
  require_params(D, f);
  return {m, n, D, f, order_case(D)};
}

BigInt multiplier_trace(const OrderMultiplier& a) {
  return a.branch == OrderCase::OneMod4 ? BigInt(2 * a.m + big_u(a.f) * a.n) : BigInt(2 * a.m);
}

bool has_integral_norm(const OrderMultiplier& a) { return four_norm(a) % 4 == 0; }

BigInt multiplier_norm(const OrderMultiplier& a) {
  const BigInt n4 = four_norm(a);
  if (n4 % 4 != 0) {
    throw Error(Errc::NonIntegralEntry, "norm " + to_string(n4) + "/4 is not an integer for f = " +
                                            std::to_string(a.f) + ", n = " + to_string(a.n));
  }
  return n4 / 4;
}

EndoMatrix multiplier_matrix(const OrderMultiplier& a) {
  if (a.m == 0 && a.n == 0) throw Error(Errc::InvalidArgument, "zero multiplier");
  return {multiplier_trace(a), -1, multiplier_norm(a), 0};
}

EndoMatrix real_multiplier_matrix(const OrderMultiplier& a) {
  if (a.m == 0 && a.n == 0) throw Error(Errc::InvalidArgument, "zero multiplier");
  // Over Q(sqrt(D)) the conjugate flips the sign of sqrt(D): the f^2 D n^2 term
  // enters the norm with a minus sign.
  const BigInt fD = big_u(a.f) * big_u(a.f) * big_u(a.D);
  BigInt n4;
  if (a.branch == OrderCase::OneMod4) {
    const BigInt t = 2 * a.m + big_u(a.f) * a.n;
    n4 = t * t - fD * a.n * a.n;
  } else {
    n4 = 4 * (a.m * a.m - fD * a.n * a.n);
  }
  if (n4 % 4 != 0) throw Error(Errc::NonIntegralEntry, "real norm is not an integer");
  return {multiplier_trace(a), -1, n4 / 4, 0};
}

OrderMultiplier primitive_multiplier(std::uint64_t D, std::uint64_t f) {
  require_params(D, f);
  if (order_case(D) == OrderCase::OneMod4) {
    if (f % 2 == 0) return make_multiplier(D, f, -big_u(f / 2), 1);
    return make_multiplier(D, f, -big_u(f), 2);
  }
  return make_multiplier(D, f, 0, 1);
}

MinimizerSearch minimize_multiplier_exhaustive(std::uint64_t D, std::uint64_t f, std::uint64_t bound) {
  require_params(D, f);
  if (bound < 1) throw Error(Errc::InvalidArgument, "search bound must be >= 1");
  // Branch and bound over the full window |m|, |n| <= bound, n != 0. For fixed
  // n the norm is a convex quadratic in m minimized at m = -fn/2, and it is at
  // least f^2 D n^2 / 4 whatever m is, so once that lower bound exceeds the best
  // norm seen no larger |n| can tie it. Every skipped point is provably worse.
  MinimizerSearch out;
  bool have = false;
  BigInt best4;
  const BigInt fD = big_u(f) * big_u(f) * big_u(D);
  const auto b = static_cast<std::int64_t>(bound);
  auto visit = [&](std::int64_t m, std::int64_t n) {
    OrderMultiplier a = make_multiplier(D, f, m, n);
    const BigInt n4 = four_norm(a);
    if (have && n4 > best4) return false;  // beyond the minimum along this ray
    if (n4 % 4 != 0) return true;           // non-integral: skip but keep scanning
    if (!have || n4 < best4) {
      have = true;
      best4 = n4;
      out.minimizers.clear();
    }
    out.minimizers.push_back(a);
    return true;
  };
  for (std::int64_t absn = 1; absn <= b; ++absn) {
    if (have && fD * absn * absn > best4) break;
    for (std::int64_t n : {absn, -absn}) {
      const auto fn = static_cast<std::int64_t>(f) * n;
      // floor(-fn/2): the centre of the parabola in m
      const std::int64_t centre = fn >= 0 ? -((fn + 1) / 2) : (-fn) / 2;
      for (std::int64_t m = std::max(centre, -b); m <= b; ++m)
        if (!visit(m, n) && m > centre + 1) break;
      for (std::int64_t m = std::min(centre - 1, b); m >= -b; --m)
        if (!visit(m, n) && m < centre - 2) break;
    }
  }
  out.min_norm = best4 / 4;
  return out;
}

FunctorImage functor_params(std::uint64_t D, std::uint64_t f) {
  FunctorImage img;
  img.multiplier = primitive_multiplier(D, f);
  img.cm_matrix = multiplier_matrix(img.multiplier);
  img.rm_matrix = teichmuller_map(img.cm_matrix);

  // The image must be the matrix of the same coordinates over the real order.
  if (img.rm_matrix != real_multiplier_matrix(img.multiplier)) {
    throw std::logic_error("functor image disagrees with the real-order multiplier for D = " +
                           std::to_string(D) + ", f = " + std::to_string(f));
  }
  if (img.rm_matrix.a != 0 || img.rm_matrix.d != 0 || img.rm_matrix.b != -1) {
    throw std::logic_error("primitive multiplier image is not of the form (0, -1, -N, 0)");
  }
  // Characteristic polynomial x^2 - N: the real multiplier is g*sqrt(D'), N = g^2 D'.
  const std::uint64_t N = to_u64(-img.rm_matrix.c);
  const std::uint64_t g = square_part_root(N);
  const std::uint64_t kernel = N / (g * g);
  const std::uint64_t n = to_u64(abs(img.multiplier.n));
  // g = n f / 2 on the D = 1 mod 4 branch, g = n f otherwise.
  const std::uint64_t scaled = order_case(kernel) == OrderCase::OneMod4 ? 2 * g : g;
  if (n == 0 || scaled % n != 0) throw std::logic_error("cannot recover the conductor from the image");
  img.D = kernel;
  img.f = scaled / n;
  return img;
}

QuadraticSurd real_order_generator(std::uint64_t D) {
  require_params(D, 1);
  if (order_case(D) == OrderCase::OneMod4) return {1, 2, big_u(D)};
  return QuadraticSurd::sqrt_of(big_u(D));
}

}  // namespace qrank
