#include "qrank/report.hpp"

#include <iomanip>
#include <sstream>

#include "qrank/error.hpp"
#include "qrank/muir.hpp"
#include "qrank/pell.hpp"
#include "qrank/primes.hpp"
#include "qrank/rank.hpp"

namespace qrank {
namespace {

// Structural facts every prime p = 3 mod 4 must satisfy; each violation is
// recorded rather than thrown so that a sweep can report all of them.
void check_invariants(PrimeReport& r) {
  auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };
  const std::size_t P = r.period_len;
  if (P % 2 != 0) {
    fail("odd period " + std::to_string(P));
    return;
  }
  if ((P % 4 == 2) != (r.residue8 == 3)) {
    fail("period " + std::to_string(P) + " mod 4 disagrees with p mod 8 = " + std::to_string(r.residue8));
  }
  if (r.midpoint.kind == Midpoint::Neither) fail("midpoint is neither culminating nor almost-culminating");

  // Q_k = 2, equivalently A_{k-1}^2 - p B_{k-1}^2 = (-1)^k 2.
  const std::size_t k = P / 2;
  const BigInt p = big_u(r.p);
  ConvergentTable t = sqrt_convergents(p, k);
  if (t.Q[k] != 2) fail("Q_k = " + to_string(t.Q[k]) + ", expected 2");
  const BigInt lhs = t.A[k - 1] * t.A[k - 1] - p * t.B[k - 1] * t.B[k - 1];
  if (lhs != (k % 2 == 0 ? 2 : -2)) fail("A_{k-1}^2 - p B_{k-1}^2 = " + to_string(lhs));

  // The period tuple solves the continuant equation and gives p back.
  const std::vector<BigInt> xs = tuple_from_cf(r.cf);
  if (auto m = solve_m(xs)) {
    if (d_from_solution(xs, *m) != p) fail("d_from_solution does not return p");
  } else {
    fail("solve_m found no positive integral m");
  }

  if (!r.conjecture_ok) fail("q_rank + 1 != complexity");
  if (r.c_brute && *r.c_brute != r.c_closed) {
    fail("brute-force complexity " + std::to_string(*r.c_brute) + " != closed form " +
         std::to_string(r.c_closed));
  }
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string indices_text(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace

PrimeReport build_report(std::uint64_t p, const ReportOptions& options) {
  require_prime_3mod4(p);
  PrimeReport r;
  r.p = p;
  r.residue8 = static_cast<unsigned>(p % 8);
  r.cf = expand_sqrt(big_u(p));
  r.cf_text = to_string(r.cf);
  r.period_len = r.cf.period_length();
  if (r.period_len % 2 == 0) r.midpoint = classify_midpoint(r.cf);
  r.family = family_match(r.cf);

  const RankRecord rank = mordell_weil_rank(p);
  r.q_rank = rank.q_rank;
  r.h_K = rank.h_K;
  r.mw_rank = rank.mw_rank;

  const ComplexityReport c = complexity_report(p, options.brute, options.dimension);
  r.c_closed = c.closed_form;
  r.c_brute = c.brute_force;
  r.free_indices = c.free_variable_indices;
  if (options.brute) r.completion = c.search_params.completion;
  r.conjecture_ok = verify_conjecture(p, r.c_closed).holds;

  check_invariants(r);
  return r;
}

std::vector<PrimeReport> table(std::uint64_t max, const ReportOptions& options) {
  if (max < 3) throw Error(Errc::InvalidArgument, "table bound must be >= 3");
  std::vector<PrimeReport> rows;
  for (std::uint64_t p : primes_in_class(3, max - 1, 4, 3)) rows.push_back(build_report(p, options));
  return rows;
}

nlohmann::ordered_json to_json(const PrimeReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["residue8"] = r.residue8;
  j["cf"] = r.cf_text;
  j["period_len"] = r.period_len;
  j["midpoint"] = to_string(r.midpoint.kind);
  j["midpoint_k"] = r.midpoint.k;
  j["family"] = r.family ? nlohmann::ordered_json(to_string(*r.family)) : nlohmann::ordered_json(nullptr);
  j["q_rank"] = r.q_rank;
  j["h_K"] = r.h_K;
  j["mw_rank"] = r.mw_rank;
  j["c_closed"] = r.c_closed;
  if (r.c_brute) {
    j["c_brute"] = *r.c_brute;
    j["free_indices"] = r.free_indices;
    j["completion"] = r.completion;
  } else {
    j["c_brute"] = nullptr;
  }
  j["conjecture_ok"] = r.conjecture_ok;
  j["invariants_ok"] = r.invariants_ok();
  if (!r.failures.empty()) j["failures"] = r.failures;
  return j;
}

std::string to_text(const PrimeReport& r) {
  std::ostringstream os;
  auto row = [&](const char* key, const std::string& value) {
    os << std::left << std::setw(14) << key << value << '\n';
  };
  row("p", std::to_string(r.p));
  row("residue8", std::to_string(r.residue8));
  row("cf", r.cf_text);
  row("period_len", std::to_string(r.period_len));
  row("midpoint", std::string(to_string(r.midpoint.kind)) + " (k=" + std::to_string(r.midpoint.k) + ")");
  row("family", r.family ? to_string(*r.family) : "-");
  row("q_rank", std::to_string(r.q_rank));
  row("h_K", std::to_string(r.h_K));
  row("mw_rank", std::to_string(r.mw_rank));
  row("c_closed", std::to_string(r.c_closed));
  if (r.c_brute) {
    row("c_brute", std::to_string(*r.c_brute) + " free " + indices_text(r.free_indices) + " W=" +
                       std::to_string(r.completion));
  } else {
    row("c_brute", "-");
  }
  row("conjecture_ok", r.conjecture_ok ? "true" : "false");
  row("invariants", r.invariants_ok() ? "ok" : "FAILED");
  for (const auto& f : r.failures) row("  failure", f);
  return os.str();
}

std::string csv_header() {
  return "p,residue8,cf,period_len,midpoint,q_rank,h_K,mw_rank,c_closed,c_brute,conjecture_ok";
}

std::string to_csv_row(const PrimeReport& r) {
  std::ostringstream os;
  os << r.p << ',' << r.residue8 << ',' << csv_quote(r.cf_text) << ',' << r.period_len << ','
     << to_string(r.midpoint.kind) << ',' << r.q_rank << ',' << r.h_K << ',' << r.mw_rank << ','
     << r.c_closed << ',';
  if (r.c_brute) os << *r.c_brute;
  os << ',' << (r.conjecture_ok ? "true" : "false");
  return os.str();
}

void write_csv(std::ostream& out, const std::vector<PrimeReport>& rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) out << to_csv_row(r) << '\n';
}

GeneralReport build_general_report(std::uint64_t D, const ReportOptions& options) {
  GeneralReport r;
  r.D = D;
  r.cf = expand_sqrt(big_u(D));
  r.period_len = r.cf.period_length();
  r.family = family_match(r.cf);
  const std::vector<BigInt> xs = tuple_from_cf(r.cf);
  if (r.period_len >= 2) r.m = solve_m(xs);
  if (r.period_len % 2 == 0) {
    r.midpoint = classify_midpoint(r.cf);
    if (options.brute) {
      DimensionResult d = dimension_bruteforce(r.cf, options.dimension);
      r.c_brute = static_cast<int>(d.dimension);
      r.free_indices = std::move(d.free_indices);
    }
  }
  return r;
}

nlohmann::ordered_json to_json(const GeneralReport& r) {
  nlohmann::ordered_json j;
  j["D"] = r.D;
  j["cf"] = to_string(r.cf);
  j["period_len"] = r.period_len;
  j["midpoint"] = r.midpoint ? nlohmann::ordered_json(std::string(to_string(r.midpoint->kind)))
                             : nlohmann::ordered_json(nullptr);
  j["family"] = r.family ? nlohmann::ordered_json(to_string(*r.family)) : nlohmann::ordered_json(nullptr);
  j["m"] = r.m ? nlohmann::ordered_json(to_string(*r.m)) : nlohmann::ordered_json(nullptr);
  j["c_brute"] = r.c_brute ? nlohmann::ordered_json(*r.c_brute) : nlohmann::ordered_json(nullptr);
  if (r.c_brute) j["free_indices"] = r.free_indices;
  j["experimental"] = true;
  return j;
}

std::string to_text(const GeneralReport& r) {
  std::ostringstream os;
  auto row = [&](const char* key, const std::string& value) {
    os << std::left << std::setw(14) << key << value << '\n';
  };
  row("D", std::to_string(r.D));
  row("cf", to_string(r.cf));
  row("period_len", std::to_string(r.period_len));
  row("midpoint", r.midpoint ? std::string(to_string(r.midpoint->kind)) : "-");
  row("family", r.family ? to_string(*r.family) : "-");
  row("m", r.m ? to_string(*r.m) : "-");
  row("c_brute", r.c_brute ? std::to_string(*r.c_brute) + " free " + indices_text(r.free_indices) : "-");
  row("note", "experimental: no conjecture verdict outside primes = 3 mod 4");
  return os.str();
}

}  // namespace qrank
