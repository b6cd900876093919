#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "qrank/report.hpp"
#include "qrank/sweep.hpp"

using namespace qrank;
using qrank::test::throws_code;

TEST_CASE("prime reports") {
  const PrimeReport r = build_report(43);
  CHECK(r.q_rank == 1);
  CHECK(r.c_closed == 2);
  CHECK(r.conjecture_ok);
  CHECK(r.invariants_ok());
  CHECK(r.cf_text == "[6; 1,1,3,1,5,1,3,1,1,12]");
  CHECK_FALSE(r.c_brute);

  const PrimeReport s = build_report(79);
  CHECK(s.q_rank == 0);
  CHECK(s.c_closed == 1);
  CHECK(s.conjecture_ok);
  CHECK(s.h_K == 5);

  CHECK(throws_code([] { build_report(13); }, Errc::WrongResidue));
  CHECK(throws_code([] { build_report(2); }, Errc::EvenPrime));
  CHECK(throws_code([] { build_report(15); }, Errc::NotPrime));
}

TEST_CASE("csv rows") {
  CHECK(csv_header() == "p,residue8,cf,period_len,midpoint,q_rank,h_K,mw_rank,c_closed,c_brute,conjecture_ok");
  CHECK(to_csv_row(build_report(3)) == "3,3,\"[1; 1,2]\",2,culminating,1,1,2,2,,true");
  ReportOptions brute;
  brute.brute = true;
  brute.dimension.completion = 60;
  CHECK(to_csv_row(build_report(3, brute)) == "3,3,\"[1; 1,2]\",2,culminating,1,1,2,2,2,true");
}

TEST_CASE("table bounds") {
  CHECK(table(4).size() == 1);
  CHECK(table(100).size() == 13);
  CHECK(table(3).empty());
  CHECK(throws_code([] { table(2); }, Errc::InvalidArgument));
}

TEST_CASE("json has the documented keys in order") {
  const auto j = to_json(build_report(7));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"p", "residue8", "cf", "period_len", "midpoint", "midpoint_k", "family",
                                         "q_rank", "h_K", "mw_rank", "c_closed", "c_brute", "conjecture_ok",
                                         "invariants_ok"});
  CHECK(j["c_brute"].is_null());
  CHECK(j["family"] == "P4-almost-culminating(x0=2,D=7)");
}

TEST_CASE("text report lists every field") {
  const std::string t = to_text(build_report(19));
  CHECK(t.find("cf            [4; 2,1,3,1,2,8]") != std::string::npos);
  CHECK(t.find("conjecture_ok true") != std::string::npos);
}

TEST_CASE("general reports carry no verdict") {
  const GeneralReport g = build_general_report(14);
  CHECK(g.period_len == 4);
  REQUIRE(g.midpoint);
  CHECK(g.midpoint->kind == Midpoint::AlmostCulminating);
  CHECK(g.m);
  CHECK(to_json(g)["experimental"] == true);
  const GeneralReport odd = build_general_report(13);
  CHECK_FALSE(odd.midpoint);
}

TEST_CASE("sweep output is ordered and independent of the worker count") {
  SweepOptions o;
  o.from = 3;
  o.to = 5000;
  o.chunk = 7;
  std::string outputs[3];
  const unsigned jobs[3] = {1, 3, 8};
  for (int i = 0; i < 3; ++i) {
    o.jobs = jobs[i];
    std::ostringstream os;
    const SweepSummary s = sweep_jsonl(o, os);
    CHECK(s.primes == 339);
    CHECK(s.conjecture_failures == 0);
    CHECK(s.invariant_failures == 0);
    outputs[i] = os.str();
  }
  CHECK(outputs[0] == outputs[1]);
  CHECK(outputs[0] == outputs[2]);

  std::uint64_t last = 0;
  o.jobs = 4;
  sweep(o, [&](const PrimeReport& r) {
    CHECK(r.p > last);
    last = r.p;
  });
  CHECK(last == 4999);
}

TEST_CASE("sweep argument checks") {
  SweepOptions o;
  o.from = 10;
  o.to = 9;
  CHECK(throws_code([&] { sweep(o, [](const PrimeReport&) {}); }, Errc::InvalidArgument));
  o.from = 1;
  o.to = 9;
  CHECK(throws_code([&] { sweep(o, [](const PrimeReport&) {}); }, Errc::InvalidArgument));
  o.from = 8;
  o.to = 10;
  CHECK(sweep(o, [](const PrimeReport&) {}).primes == 0);
}
