#include "qrank/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "qrank/error.hpp"
#include "qrank/primes.hpp"

namespace qrank {

SweepSummary sweep(const SweepOptions& options, const std::function<void(const PrimeReport&)>& sink) {
  if (options.from < 3) throw Error(Errc::InvalidArgument, "sweep start must be >= 3");
  if (options.from > options.to) {
    throw Error(Errc::InvalidArgument, "empty range [" + std::to_string(options.from) + ", " +
                                           std::to_string(options.to) + "]");
  }
  const std::vector<std::uint64_t> primes = primes_in_class(options.from, options.to, 4, 3);
  const std::size_t chunk = std::max<std::size_t>(options.chunk, 1);
  const std::size_t n_chunks = (primes.size() + chunk - 1) / chunk;
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(n_chunks, 1))));

  // Workers claim chunks in index order and park finished ones here; the
  // calling thread drains them strictly in order. A bounded look-ahead keeps
  // memory flat on long ranges.
  std::mutex mu;
  std::condition_variable ready, room;
  std::map<std::size_t, std::vector<PrimeReport>> done;
  std::atomic<std::size_t> next{0};
  std::size_t emitted = 0;
  std::exception_ptr error;
  const std::size_t lookahead = 4 * jobs;

  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      {
        std::unique_lock lock(mu);
        room.wait(lock, [&] { return c < emitted + lookahead || error; });
        if (error) return;
      }
      std::vector<PrimeReport> out;
      try {
        const std::size_t lo = c * chunk, hi = std::min(primes.size(), lo + chunk);
        out.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) out.push_back(build_report(primes[i], options.report));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        ready.notify_all();
        room.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      done.emplace(c, std::move(out));
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);

  SweepSummary summary;
  try {
    while (emitted < n_chunks) {
      std::vector<PrimeReport> batch;
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return done.count(emitted) != 0 || error; });
        if (error) break;
        batch = std::move(done[emitted]);
        done.erase(emitted);
      }
      for (const PrimeReport& r : batch) {
        ++summary.primes;
        if (!r.conjecture_ok) ++summary.conjecture_failures;
        if (!r.invariants_ok()) ++summary.invariant_failures;
        if (!r.conjecture_ok || !r.invariants_ok()) summary.failed.push_back(r.p);
        sink(r);
      }
      std::lock_guard lock(mu);
      ++emitted;
      room.notify_all();
    }
  } catch (...) {
    std::lock_guard lock(mu);
    if (!error) error = std::current_exception();
    room.notify_all();
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return summary;
}

SweepSummary sweep_jsonl(const SweepOptions& options, std::ostream& out) {
  return sweep(options, [&](const PrimeReport& r) { out << to_json(r).dump() << '\n'; });
}

}  // namespace qrank
