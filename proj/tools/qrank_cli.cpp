// qrank: command-line front end for the qrank library.
//
//   qrank expand D               continued fraction of sqrt(D)
//   qrank report p               full report for a prime p = 3 mod 4
//   qrank table MAX              CSV, one row per prime p = 3 mod 4, p < MAX
//   qrank sweep FROM TO          JSON lines over [FROM, TO], parallel
//   qrank functor D F            primitive multiplier and functor image
//
// Exit codes: 0 success, 1 invariant or conjecture failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrank/cfrac.hpp"
#include "qrank/error.hpp"
#include "qrank/functor.hpp"
#include "qrank/report.hpp"
#include "qrank/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct SearchFlags {
  bool brute = false;
  unsigned window = 3;
  std::uint64_t completion = 0;
  bool roundtrip = false;
  bool fixed = false;
  unsigned covary_depth = 1;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--brute", brute, "Also run the brute-force dimension search");
    cmd->add_option("--window", window, "Shift window S for the brute-force search")->capture_default_str();
    cmd->add_option("--completion", completion, "Completion bound W (0 = adaptive 2*x0+4)")->capture_default_str();
    cmd->add_flag("--roundtrip", roundtrip, "Require completions to regenerate the tuple from D");
    cmd->add_flag("--fixed", fixed, "Keep the other coordinates fixed instead of co-varying them");
    cmd->add_option("--covary-depth", covary_depth, "Middle coordinates co-varied besides x0")->capture_default_str();
  }

  qrank::ReportOptions options() const {
    qrank::ReportOptions o;
    o.brute = brute;
    o.dimension.window = window;
    o.dimension.completion = completion;
    o.dimension.roundtrip = roundtrip;
    o.dimension.mode = fixed ? qrank::CompletionMode::Fixed : qrank::CompletionMode::CoVary;
    o.dimension.covary_depth = covary_depth;
    return o;
  }
};

std::string multiplier_text(const qrank::OrderMultiplier& a) {
  return "(m,n)=(" + qrank::to_string(a.m) + "," + qrank::to_string(a.n) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions, Q-rank and complexity of real-multiplication tori"};
  app.require_subcommand(1);

  bool json = false;
  SearchFlags search;

  std::string expand_d;
  auto* expand = app.add_subcommand("expand", "Print the continued fraction of sqrt(D)");
  expand->add_option("D", expand_d, "Non-square integer D >= 2")->required();
  expand->add_flag("--json", json, "JSON output");

  std::uint64_t report_p = 0;
  bool experimental = false;
  auto* report = app.add_subcommand("report", "Report for a prime p = 3 mod 4");
  report->add_option("p", report_p, "Prime p = 3 mod 4")->required();
  report->add_flag("--json", json, "JSON output");
  report->add_flag("--experimental", experimental, "Accept any non-square D; no conjecture verdict");
  search.attach(report);

  std::uint64_t table_max = 0;
  auto* table = app.add_subcommand("table", "CSV table of all primes p = 3 mod 4 below MAX");
  table->add_option("MAX", table_max, "Exclusive upper bound, >= 3")->required();
  search.attach(table);

  std::uint64_t sweep_from = 0, sweep_to = 0;
  unsigned jobs = 1;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "JSON lines for all primes p = 3 mod 4 in [FROM, TO]");
  sweep->add_option("FROM", sweep_from, "Inclusive lower bound, >= 3")->required();
  sweep->add_option("TO", sweep_to, "Inclusive upper bound")->required();
  sweep->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  sweep->add_option("-o,--out", out_path, "Output file (default: standard output)");
  search.attach(sweep);

  std::uint64_t functor_d = 0, functor_f = 1;
  std::uint64_t functor_bound = 0;
  auto* functor = app.add_subcommand("functor", "Primitive multiplier and functor image for (D, f)");
  functor->add_option("D", functor_d, "Square-free D >= 2")->required();
  functor->add_option("f", functor_f, "Conductor f >= 1")->capture_default_str();
  functor->add_option("--bound", functor_bound, "Exhaustive search bound (default 4*f*D)");
  functor->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*expand) {
      const qrank::PeriodicCF cf = qrank::expand_sqrt(qrank::parse_bigint(expand_d));
      if (json) {
        nlohmann::ordered_json j;
        j["D"] = expand_d;
        j["cf"] = qrank::to_string(cf);
        j["period_len"] = cf.period_length();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << qrank::to_string(cf) << '\n';
      }
      return kOk;
    }

    if (*report) {
      if (experimental) {
        const qrank::GeneralReport r = qrank::build_general_report(report_p, search.options());
        std::cout << (json ? qrank::to_json(r).dump() + "\n" : qrank::to_text(r));
        return kOk;
      }
      const qrank::PrimeReport r = qrank::build_report(report_p, search.options());
      std::cout << (json ? qrank::to_json(r).dump() + "\n" : qrank::to_text(r));
      return r.invariants_ok() ? kOk : kFailure;
    }

    if (*table) {
      const auto rows = qrank::table(table_max, search.options());
      qrank::write_csv(std::cout, rows);
      for (const auto& r : rows)
        if (!r.invariants_ok()) return kFailure;
      return kOk;
    }

    if (*sweep) {
      qrank::SweepOptions o;
      o.from = sweep_from;
      o.to = sweep_to;
      o.jobs = jobs;
      o.report = search.options();
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw qrank::Error(qrank::Errc::InvalidArgument, "cannot open " + out_path);
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      const qrank::SweepSummary s = qrank::sweep_jsonl(o, out);
      out.flush();
      std::ostream& log = out_path.empty() ? std::cerr : std::cout;
      log << "primes=" << s.primes << " conjecture_failures=" << s.conjecture_failures
          << " invariant_failures=" << s.invariant_failures;
      if (!s.failed.empty()) {
        log << " failed=";
        for (std::size_t i = 0; i < s.failed.size() && i < 20; ++i) log << (i ? "," : "") << s.failed[i];
        if (s.failed.size() > 20) log << ",...";
      }
      log << '\n';
      return s.failed.empty() ? kOk : kFailure;
    }

    if (*functor) {
      const qrank::FunctorImage img = qrank::functor_params(functor_d, functor_f);
      const std::uint64_t bound = functor_bound ? functor_bound : 4 * functor_f * functor_d;
      const qrank::MinimizerSearch search_result =
          qrank::minimize_multiplier_exhaustive(functor_d, functor_f, bound);
      const qrank::BigInt norm = qrank::multiplier_norm(img.multiplier);
      const bool confirmed = search_result.min_norm == norm;
      if (json) {
        nlohmann::ordered_json j;
        j["D"] = functor_d;
        j["f"] = functor_f;
        j["m"] = qrank::to_string(img.multiplier.m);
        j["n"] = qrank::to_string(img.multiplier.n);
        j["trace"] = qrank::to_string(qrank::multiplier_trace(img.multiplier));
        j["norm"] = qrank::to_string(norm);
        j["cm_matrix"] = qrank::to_string(img.cm_matrix);
        j["rm_matrix"] = qrank::to_string(img.rm_matrix);
        j["image_D"] = img.D;
        j["image_f"] = img.f;
        j["search_bound"] = bound;
        j["search_min_norm"] = qrank::to_string(search_result.min_norm);
        j["search_minimizers"] = search_result.minimizers.size();
        j["confirmed"] = confirmed;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "multiplier   " << multiplier_text(img.multiplier) << " trace "
                  << qrank::to_string(qrank::multiplier_trace(img.multiplier)) << " norm " << qrank::to_string(norm)
                  << '\n'
                  << "cm matrix    " << qrank::to_string(img.cm_matrix) << '\n'
                  << "rm matrix    " << qrank::to_string(img.rm_matrix) << '\n'
                  << "image (D,f)  (" << img.D << "," << img.f << ")\n"
                  << "exhaustive   |m|,|n| <= " << bound << ": min norm " << qrank::to_string(search_result.min_norm)
                  << ", " << search_result.minimizers.size() << " minimizers, "
                  << (confirmed ? "confirmed" : "MISMATCH") << '\n';
      }
      const bool ok = confirmed && img.D == functor_d && img.f == functor_f;
      return ok ? kOk : kFailure;
    }
  } catch (const qrank::Error& e) {
    std::cerr << "qrank: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qrank: internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
