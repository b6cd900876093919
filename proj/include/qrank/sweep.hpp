#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "qrank/report.hpp"

namespace qrank {

struct SweepOptions {
  std::uint64_t from = 3;
  std::uint64_t to = 3;
  unsigned jobs = 1;
  std::size_t chunk = 256;  // primes per work unit
  ReportOptions report;
};

struct SweepSummary {
  std::uint64_t primes = 0;
  std::uint64_t conjecture_failures = 0;
  std::uint64_t invariant_failures = 0;
  std::vector<std::uint64_t> failed;  // primes with any failure, ascending
};

/// Builds a report for every prime p = 3 mod 4 in [from, to] on `jobs`
/// workers and hands them to `sink` in ascending order of p, whatever the
/// completion order. Throws InvalidArgument for an empty range or from < 3.
SweepSummary sweep(const SweepOptions& options, const std::function<void(const PrimeReport&)>& sink);

/// sweep() writing one JSON object per line.
SweepSummary sweep_jsonl(const SweepOptions& options, std::ostream& out);

}  // namespace qrank
