#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrank/cfrac.hpp"
#include "qrank/complexity.hpp"

namespace qrank {

struct ReportOptions {
  bool brute = false;         // run dimension_bruteforce alongside the closed form
  DimensionParams dimension;  // search parameters when brute is set
};

/// Everything known about E(p) and the torus of sqrt(p) for a prime p = 3 mod 4.
struct PrimeReport {
  std::uint64_t p = 0;
  unsigned residue8 = 0;
  PeriodicCF cf;
  std::string cf_text;
  std::size_t period_len = 0;
  MidpointClass midpoint;
  std::optional<FamilyMatch> family;
  int q_rank = 0;
  std::uint64_t h_K = 0;
  std::uint64_t mw_rank = 0;
  int c_closed = 0;
  std::optional<int> c_brute;
  std::vector<std::size_t> free_indices;  // only with brute
  std::uint64_t completion = 0;           // W used by the brute search
  bool conjecture_ok = false;
  std::vector<std::string> failures;      // violated internal invariants

  bool invariants_ok() const { return failures.empty(); }
};

/// Throws NotPrime / EvenPrime / WrongResidue for inputs outside the domain.
PrimeReport build_report(std::uint64_t p, const ReportOptions& options = {});

/// Reports for every prime p = 3 mod 4 with p < max, ascending. Throws
/// InvalidArgument for max < 3.
std::vector<PrimeReport> table(std::uint64_t max, const ReportOptions& options = {});

nlohmann::ordered_json to_json(const PrimeReport& r);
std::string to_text(const PrimeReport& r);

std::string csv_header();
std::string to_csv_row(const PrimeReport& r);
void write_csv(std::ostream& out, const std::vector<PrimeReport>& rows);

/// Exploratory record for an arbitrary non-square D >= 2. The conjecture only
/// speaks about primes p = 3 mod 4, so no verdict is attached.
struct GeneralReport {
  std::uint64_t D = 0;
  PeriodicCF cf;
  std::size_t period_len = 0;
  std::optional<MidpointClass> midpoint;  // even periods only
  std::optional<FamilyMatch> family;
  std::optional<BigInt> m;                // solve_m on the period tuple
  std::optional<int> c_brute;
  std::vector<std::size_t> free_indices;
};

GeneralReport build_general_report(std::uint64_t D, const ReportOptions& options = {});
nlohmann::ordered_json to_json(const GeneralReport& r);
std::string to_text(const GeneralReport& r);

}  // namespace qrank
