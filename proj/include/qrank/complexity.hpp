#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrank/bigint.hpp"
#include "qrank/cfrac.hpp"

namespace qrank {

enum class Midpoint { Culminating, AlmostCulminating, Neither };

std::string_view to_string(Midpoint kind);

/// Shape of the middle of an even period P = 2k of sqrt(D).
struct MidpointClass {
  Midpoint kind = Midpoint::Neither;
  std::size_t k = 0;
};

/// Culminating: x_k = x0. Almost-culminating: x_k = x0 - 1 and x_{k-1} = 1
/// (needs k >= 2). Throws OddPeriod for odd periods.
MidpointClass classify_midpoint(const PeriodicCF& cf);

/// 2 for p = 3 mod 8, 1 for p = 7 mod 8.
int complexity_closed(std::uint64_t p);

enum class FamilyKind { P6Culminating, P6AlmostCulminating, P4AlmostCulminating };

std::string_view to_string(FamilyKind kind);

/// Membership of sqrt(D) in one of the base parametric families:
///   [x0; x1, 2x1, x0, 2x1, x1, 2x0], x0 = n(2x1^2+1) + x1, D = x0^2 + 4n x1 + 2
///     (n = 0 collapses to [x1; x1, 2x1]),
///   [3s+1; 2, 1, 3s, 1, 2, 6s+2],   D = (3s+1)^2 + 2s + 1,
///   [x0; 1, x0-1, 1, 2x0],          D = (x0+1)^2 - 2.
struct FamilyMatch {
  FamilyKind kind{};
  BigInt n;   // P6Culminating
  BigInt x1;  // P6Culminating
  BigInt s;   // P6AlmostCulminating
  BigInt x0;  // P4AlmostCulminating
  BigInt D;
};

std::string to_string(const FamilyMatch& f);

std::optional<FamilyMatch> family_match(const PeriodicCF& cf);

/// How the other free coordinates behave while one coordinate is shifted.
enum class CompletionMode {
  CoVary,  // other representatives may change within [1, W]
  Fixed,   // only the shifted coordinate (and its mirror) changes
};

struct DimensionParams {
  unsigned window = 3;                 // shifts s in [-window, window]
  std::uint64_t completion = 0;        // W; 0 selects max(2*x0 + 4, largest entry)
  bool roundtrip = false;              // require D to regenerate the tuple
  CompletionMode mode = CompletionMode::CoVary;
  unsigned covary_depth = 1;           // middle coordinates co-varied besides x0
};

struct DimensionResult {
  unsigned dimension = 0;
  std::vector<std::size_t> free_indices;  // representatives x_i, 0 <= i <= k, that passed
  std::uint64_t completion = 0;           // the W actually used
};

/// Counts representatives x0..xk of the palindromic period of sqrt(D) such
/// that every admissible shift x_i* + s (|s| <= window, x_i* + s >= 1) extends
/// to a solution of the continuant equation with an integral m > 0.
DimensionResult dimension_bruteforce(const PeriodicCF& cf, const DimensionParams& params = {});

struct ComplexityReport {
  int closed_form = 0;
  std::optional<int> brute_force;
  std::vector<std::size_t> free_variable_indices;
  DimensionParams search_params;
};

ComplexityReport complexity_report(std::uint64_t p, bool with_brute, const DimensionParams& params = {});

struct WeberExtension {
  BigInt y_first;
  BigInt y_mid;
  BigInt m;
  BigInt D;
  bool genuine = false;        // the extended tuple is the minimal expansion of sqrt(D)
  bool d_prime = false;
  bool weber_form = false;     // y_mid = 2*y_first + 1 and x1 = 1
  bool doubled = false;        // y_mid = 2*y_first
};

struct WeberProbe {
  std::vector<WeberExtension> extensions;   // every solving insertion in the window
  std::size_t genuine_prime = 0;            // genuine extensions with prime D
  std::size_t weber_form_prime = 0;         // ... of which satisfy y_mid = 2 y_first + 1, x1 = 1
  std::vector<WeberExtension> counterexamples;  // genuine, prime D, y_mid = 2 y_first
};

/// Inserts y_first after x0 and y_mid before the midpoint,
/// [x0; y, x1..x_{k-1}, z, x_k, z, x_{k-1}..x1, y, 2x0], for y, z in [1, W].
WeberProbe weber_step_probe(const std::vector<BigInt>& xs, std::uint64_t window);

}  // namespace qrank
