#include "qrank/cfrac.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <utility>

#include "qrank/error.hpp"

namespace qrank {
namespace {

// Sign of (p + sqrt(d)) / q for d not a perfect square.
int surd_sign(const QuadraticSurd& s) {
  int numerator_sign = (s.p >= 0 || s.d > s.p * s.p) ? 1 : -1;
  return sgn(s.q) > 0 ? numerator_sign : -numerator_sign;
}

// floor((p + sqrt(d)) / q) given r = floor(sqrt(d)) and d irrational.
BigInt floor_of(const BigInt& p, const BigInt& q, const BigInt& r) {
  return sgn(q) > 0 ? floor_div(p + r, q) : floor_div(p + r + 1, q);
}

// K(w[first..last)), the continuant of a contiguous slice.
BigInt slice_continuant(const std::vector<BigInt>& w, std::size_t first, std::size_t last) {
  BigInt cur = 1, prev = 0;
  for (std::size_t i = first; i < last; ++i) {
    BigInt next = w[i] * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

BigInt read_int(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  std::string token(text.substr(start, pos - start));
  return parse_bigint(token);
}

void expect(std::string_view text, std::size_t& pos, char c) {
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != c) {
    throw Error(Errc::ParseError, std::string("expected '") + c + "' at offset " +
                                      std::to_string(pos) + " in '" + std::string(text) + "'");
  }
  ++pos;
}

}  // namespace

QuadraticSurd QuadraticSurd::canonical() const {
  if (q == 0) throw Error(Errc::ZeroDenominator, "surd with zero denominator");
  if (d < 0) throw Error(Errc::InvalidArgument, "negative radicand");
  BigInt diff = d - p * p;
  if (diff % q == 0) return *this;
  BigInt aq = abs(q);
  return {p * aq, q * aq, d * q * q};
}

QuadraticSurd QuadraticSurd::reduced() const {
  BigInt g = gcd(p, q);
  BigInt h = 1;
  BigInt rem = g;
  for (unsigned long t = 2; t < 1000000 && BigInt(t) * t <= rem; ++t) {
    bool can_grow = true;
    while (rem % t == 0) {
      rem /= t;
      BigInt trial = h * t;
      if (can_grow && d % (trial * trial) == 0) {
        h = trial;
      } else {
        can_grow = false;
      }
    }
  }
  if (rem > 1) {
    BigInt trial = h * rem;
    if (d % (trial * trial) == 0) h = trial;
  }
  QuadraticSurd out{p / h, q / h, d / (h * h)};
  return out;
}

double QuadraticSurd::approx() const {
  return (p.get_d() + std::sqrt(d.get_d())) / q.get_d();
}

bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
  return sgn(a.q) == sgn(b.q) && a.p * b.q == b.p * a.q && a.d * b.q * b.q == b.d * a.q * a.q;
}

std::string to_string(const QuadraticSurd& s) {
  std::string out = "(" + to_string(s.p) + " + sqrt(" + to_string(s.d) + "))";
  if (s.q != 1) out += "/" + to_string(s.q);
  return out;
}

const BigInt& PeriodicCF::term(std::size_t i) const {
  if (i < head.size()) return head[i];
  return period[(i - head.size()) % period.size()];
}

std::string to_string(const PeriodicCF& cf) {
  std::string out = "[";
  for (std::size_t i = 0; i < cf.head.size(); ++i) {
    if (i) out += ",";
    out += to_string(cf.head[i]);
  }
  out += ";";
  for (std::size_t i = 0; i < cf.period.size(); ++i) {
    out += i ? "," : " ";
    out += to_string(cf.period[i]);
  }
  out += "]";
  return out;
}

PeriodicCF parse_cf(std::string_view text) {
  PeriodicCF cf;
  std::size_t pos = 0;
  expect(text, pos, '[');
  cf.head.push_back(read_int(text, pos));
  skip_space(text, pos);
  while (pos < text.size() && text[pos] == ',') {
    ++pos;
    cf.head.push_back(read_int(text, pos));
    skip_space(text, pos);
  }
  expect(text, pos, ';');
  cf.period.push_back(read_int(text, pos));
  skip_space(text, pos);
  while (pos < text.size() && text[pos] == ',') {
    ++pos;
    cf.period.push_back(read_int(text, pos));
    skip_space(text, pos);
  }
  expect(text, pos, ']');
  skip_space(text, pos);
  if (pos != text.size()) throw Error(Errc::ParseError, "trailing text in '" + std::string(text) + "'");
  for (std::size_t i = 1; i < cf.head.size(); ++i) {
    if (cf.head[i] < 1) throw Error(Errc::ParseError, "partial quotients after a0 must be positive");
  }
  for (const auto& a : cf.period) {
    if (a < 1) throw Error(Errc::ParseError, "period entries must be positive");
  }
  return cf;
}

PeriodicCF expand_sqrt(const BigInt& D) {
  if (D < 2) throw Error(Errc::NonPositiveInput, "expected D >= 2, got " + to_string(D));
  if (is_perfect_square(D)) throw Error(Errc::PerfectSquareInput, to_string(D) + " is a perfect square");
  const BigInt a0 = isqrt(D);
  PeriodicCF cf;
  cf.head.push_back(a0);
  // Complete quotients (P + sqrt(D)) / Q of sqrt(D) are reduced from index 1
  // on; the period closes at the first return to Q = 1.
  BigInt P = 0, Q = 1, a = a0;
  do {
    P = a * Q - P;
    Q = (D - P * P) / Q;
    a = (a0 + P) / Q;
    cf.period.push_back(a);
  } while (Q != 1);
  return cf;
}

PeriodicCF expand_surd(const QuadraticSurd& s) {
  if (s.q == 0) throw Error(Errc::ZeroDenominator, "surd with zero denominator");
  if (s.d < 0) throw Error(Errc::InvalidArgument, "negative radicand");
  if (s.is_rational()) throw Error(Errc::RationalInput, to_string(s) + " is rational");
  if (surd_sign(s) <= 0) throw Error(Errc::NonPositiveInput, to_string(s) + " is not positive");

  const QuadraticSurd c = s.canonical();
  const BigInt root = isqrt(c.d);
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  std::vector<BigInt> terms;
  BigInt P = c.p, Q = c.q;
  while (true) {
    auto [it, inserted] = seen.emplace(std::make_pair(P, Q), terms.size());
    if (!inserted) {
      const std::size_t start = it->second;
      PeriodicCF cf;
      // a0 stays in the head even when the expansion is purely periodic.
      const std::size_t head_len = std::max<std::size_t>(start, 1);
      cf.head.assign(terms.begin(), terms.begin() + head_len);
      for (std::size_t i = head_len; i < head_len + (terms.size() - start); ++i) {
        cf.period.push_back(terms[start + (i - start) % (terms.size() - start)]);
      }
      return cf;
    }
    BigInt a = floor_of(P, Q, root);
    terms.push_back(a);
    P = a * Q - P;
    Q = (c.d - P * P) / Q;
  }
}

ConvergentTable convergents(const PeriodicCF& cf, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "convergent count must be >= 1");
  if (cf.period.empty()) throw Error(Errc::InvalidArgument, "empty period");
  ConvergentTable t;
  t.A.reserve(n);
  t.B.reserve(n);
  BigInt A1 = 1, A2 = 0, B1 = 0, B2 = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt& a = cf.term(i);
    BigInt A = a * A1 + A2;
    BigInt B = a * B1 + B2;
    A2 = std::move(A1);
    B2 = std::move(B1);
    A1 = A;
    B1 = B;
    t.A.push_back(std::move(A));
    t.B.push_back(std::move(B));
  }
  const QuadraticSurd x = reconstruct_surd(cf).canonical();
  BigInt P = x.p, Q = x.q;
  const BigInt root = isqrt(x.d);
  for (std::size_t i = 0; i <= n; ++i) {
    t.Q.push_back(Q);
    BigInt a = floor_of(P, Q, root);
    P = a * Q - P;
    Q = (x.d - P * P) / Q;
  }
  return t;
}

ConvergentTable sqrt_convergents(const BigInt& D, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "convergent count must be >= 1");
  if (D < 2) throw Error(Errc::NonPositiveInput, "expected D >= 2, got " + to_string(D));
  if (is_perfect_square(D)) throw Error(Errc::PerfectSquareInput, to_string(D) + " is a perfect square");
  ConvergentTable t;
  const BigInt a0 = isqrt(D);
  BigInt P = 0, Q = 1, a = a0;
  BigInt A1 = 1, A2 = 0, B1 = 0, B2 = 1;
  t.Q.push_back(Q);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt A = a * A1 + A2;
    BigInt B = a * B1 + B2;
    A2 = std::move(A1);
    B2 = std::move(B1);
    A1 = A;
    B1 = B;
    t.A.push_back(std::move(A));
    t.B.push_back(std::move(B));
    P = a * Q - P;
    Q = (D - P * P) / Q;
    a = (a0 + P) / Q;
    t.Q.push_back(Q);
  }
  return t;
}

QuadraticSurd reconstruct_surd(const PeriodicCF& cf) {
  if (cf.period.empty()) throw Error(Errc::DegeneratePeriod, "empty period");
  if (cf.head.empty()) throw Error(Errc::DegeneratePeriod, "missing a0");
  for (const auto& a : cf.period) {
    if (a < 1) throw Error(Errc::DegeneratePeriod, "non-positive period entry " + to_string(a));
  }
  const auto& w = cf.period;
  const std::size_t k = w.size();
  // Tail y = [w1; w2, ..., wk, y] solves qk*y^2 + (qk1 - pk)*y - pk1 = 0.
  const BigInt pk = slice_continuant(w, 0, k);
  const BigInt pk1 = slice_continuant(w, 0, k - 1);
  const BigInt qk = slice_continuant(w, 1, k);
  const BigInt qk1 = k >= 2 ? slice_continuant(w, 1, k - 1) : BigInt(0);
  const BigInt disc = (qk1 - pk) * (qk1 - pk) + 4 * qk * pk1;
  if (is_perfect_square(disc)) throw Error(Errc::DegeneratePeriod, "tail fixed point is rational");
  const BigInt u = pk - qk1;
  const BigInt v = 2 * qk;

  // x = (Ar*y + Ar1) / (Br*y + Br1) over the head, then rationalize.
  BigInt Ar = 1, Ar1 = 0, Br = 0, Br1 = 1;
  for (const auto& h : cf.head) {
    BigInt A = h * Ar + Ar1;
    BigInt B = h * Br + Br1;
    Ar1 = std::move(Ar);
    Br1 = std::move(Br);
    Ar = std::move(A);
    Br = std::move(B);
  }
  const BigInt alpha = Ar * u + Ar1 * v;
  const BigInt beta = Br * u + Br1 * v;
  const BigInt X = alpha * beta - Ar * Br * disc;
  const BigInt coef = Ar * beta - alpha * Br;
  const BigInt Y = beta * beta - Br * Br * disc;
  if (Y == 0 || coef == 0) throw Error(Errc::DegeneratePeriod, "degenerate fixed point");
  QuadraticSurd out = sgn(coef) > 0 ? QuadraticSurd{X, Y, coef * coef * disc}
                                    : QuadraticSurd{-X, -Y, coef * coef * disc};
  return out.reduced();
}

bool is_repetition(const std::vector<BigInt>& word) {
  const std::size_t n = word.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = word[i] == word[i - len];
    if (repeats) return true;
  }
  return false;
}

}  // namespace qrank
