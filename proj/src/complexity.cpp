#include "qrank/complexity.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "qrank/error.hpp"
#include "qrank/muir.hpp"
#include "qrank/pell.hpp"
#include "qrank/primes.hpp"

namespace qrank {

std::string_view to_string(Midpoint kind) {
  switch (kind) {
    case Midpoint::Culminating: return "culminating";
    case Midpoint::AlmostCulminating: return "almost-culminating";
    case Midpoint::Neither: return "neither";
  }
  return "neither";
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::P6Culminating: return "P6-culminating";
    case FamilyKind::P6AlmostCulminating: return "P6-almost-culminating";
    case FamilyKind::P4AlmostCulminating: return "P4-almost-culminating";
  }
  return "";
}

MidpointClass classify_midpoint(const PeriodicCF& cf) {
  const std::size_t P = cf.period_length();
  if (P == 0 || P % 2 != 0) {
    throw Error(Errc::OddPeriod, "period length " + std::to_string(P) + " is not even");
  }
  MidpointClass out;
  out.k = P / 2;
  const BigInt& x0 = cf.a0();
  const BigInt& xk = cf.period[out.k - 1];
  if (xk == x0) {
    out.kind = Midpoint::Culminating;
  } else if (out.k >= 2 && xk == x0 - 1 && cf.period[out.k - 2] == 1) {
    out.kind = Midpoint::AlmostCulminating;
  } else {
    out.kind = Midpoint::Neither;
  }
  return out;
}

int complexity_closed(std::uint64_t p) {
  require_prime_3mod4(p);
  return p % 8 == 3 ? 2 : 1;
}

std::string to_string(const FamilyMatch& f) {
  std::string out(to_string(f.kind));
  switch (f.kind) {
    case FamilyKind::P6Culminating:
      out += "(n=" + to_string(f.n) + ",x1=" + to_string(f.x1);
      break;
    case FamilyKind::P6AlmostCulminating:
      out += "(s=" + to_string(f.s);
      break;
    case FamilyKind::P4AlmostCulminating:
      out += "(x0=" + to_string(f.x0);
      break;
  }
  out += ",D=" + to_string(f.D) + ")";
  return out;
}

std::optional<FamilyMatch> family_match(const PeriodicCF& cf) {
  if (cf.head.size() != 1) return std::nullopt;
  const auto& w = cf.period;
  const BigInt& x0 = cf.a0();
  if (w.empty() || w.back() != 2 * x0) return std::nullopt;

  if (w.size() == 2 && w[0] == x0) {
    FamilyMatch f;
    f.kind = FamilyKind::P6Culminating;
    f.n = 0;
    f.x1 = x0;
    f.D = x0 * x0 + 2;
    return f;
  }
  if (w.size() == 6) {
    const BigInt& x1 = w[0];
    if (w[1] == 2 * x1 && w[2] == x0 && w[3] == 2 * x1 && w[4] == x1) {
      const BigInt step = 2 * x1 * x1 + 1;
      const BigInt rest = x0 - x1;
      if (rest > 0 && rest % step == 0) {
        FamilyMatch f;
    f.kind = FamilyKind::P6Culminating;
        f.n = rest / step;
        f.x1 = x1;
        f.D = x0 * x0 + 4 * f.n * x1 + 2;
        return f;
      }
    }
    if (w[0] == 2 && w[1] == 1 && w[3] == 1 && w[4] == 2 && (x0 - 1) % 3 == 0 && x0 >= 4) {
      const BigInt s = (x0 - 1) / 3;
      if (w[2] == 3 * s) {
        FamilyMatch f;
    f.kind = FamilyKind::P6AlmostCulminating;
        f.s = s;
        f.D = x0 * x0 + 2 * s + 1;
        return f;
      }
    }
  }
  if (w.size() == 4 && w[0] == 1 && w[1] == x0 - 1 && w[2] == 1 && x0 >= 2) {
    FamilyMatch f;
    f.kind = FamilyKind::P4AlmostCulminating;
    f.x0 = x0;
    f.D = (x0 + 1) * (x0 + 1) - 2;
    return f;
  }
  return std::nullopt;
}

namespace {

// Entries of the middle word x1..x_{P-1} depend only on the half h[1..k].
struct MiddleStats {
  BigInt den;  // A_{P-2,1} = K(x1..x_{P-1})
  BigInt a;    // A_{P-3,1} = K(x1..x_{P-2})
  BigInt b;    // B_{P-3,1} = K(x2..x_{P-2})
};

// Quadratic in one coordinate: f(v) = c0 + c1*v + c2*v*(v-1)/2 style Newton form.
struct Quadratic {
  BigInt f0, d1, d2;  // f(0), f(1)-f(0), f(2)-2f(1)+f(0)
  BigInt at(const BigInt& v) const { return f0 + d1 * v + d2 * (v * (v - 1) / 2); }
};

class DimensionSearch {
 public:
  DimensionSearch(std::vector<BigInt> half, std::size_t P, const DimensionParams& params, BigInt W)
      : half_(std::move(half)), P_(P), k_(P / 2), params_(params), W_(std::move(W)) {}

  bool index_passes(std::size_t i) {
    const BigInt base = half_[i];
    for (int s = -static_cast<int>(params_.window); s <= static_cast<int>(params_.window); ++s) {
      BigInt target = base + s;
      if (target < 1) continue;
      if (!has_completion(i, target)) return false;
    }
    return true;
  }

  bool base_is_solution() {
    std::vector<BigInt> h = half_;
    return point_solves(h, h[0]);
  }

 private:
  BigInt entry(const std::vector<BigInt>& h, std::size_t pos) const {
    return h[std::min(pos, P_ - pos)];
  }

  MiddleStats stats(const std::vector<BigInt>& h) const {
    MiddleStats out;
    if (P_ == 2) {
      out.den = h[1];
      out.a = 1;
      out.b = 0;
      return out;
    }
    BigInt cur = 1, prev = 0;
    for (std::size_t pos = 1; pos <= P_ - 1; ++pos) {
      if (pos == P_ - 1) out.a = cur;
      BigInt next = entry(h, pos) * cur + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    out.den = cur;
    cur = 1;
    prev = 0;
    for (std::size_t pos = 2; pos <= P_ - 2; ++pos) {
      BigInt next = entry(h, pos) * cur + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    out.b = cur;
    return out;
  }

  // Does (x0, h[1..k]) solve the continuant equation (and regenerate, if asked)?
  bool check_point(const std::vector<BigInt>& h, const BigInt& x0, const MiddleStats& st) const {
    const BigInt num = 2 * x0 + st.a * st.b;
    if (num % st.den != 0) return false;
    if (!params_.roundtrip) return true;
    const BigInt m = num / st.den;
    const BigInt D = x0 * x0 + m * st.a - st.b * st.b;
    return regenerates(D, h, x0);
  }

  bool regenerates(const BigInt& D, const std::vector<BigInt>& h, const BigInt& x0) const {
    if (D < 2 || is_perfect_square(D)) return false;
    const BigInt a0 = isqrt(D);
    if (a0 != x0) return false;
    BigInt P = 0, Q = 1, a = a0;
    for (std::size_t pos = 1; pos <= P_; ++pos) {
      P = a * Q - P;
      Q = (D - P * P) / Q;
      a = (a0 + P) / Q;
      const BigInt expected = pos == P_ ? BigInt(2 * x0) : entry(h, pos);
      if (a != expected) return false;
      if ((Q == 1) != (pos == P_)) return false;
    }
    return true;
  }

  bool point_solves(const std::vector<BigInt>& h, const BigInt& x0) const {
    return check_point(h, x0, stats(h));
  }

  // Some x0 in [1, W] completes the middle h[1..k] (x0 co-varies).
  bool some_x0_completes(const std::vector<BigInt>& h, const MiddleStats& st) const {
    if (st.den <= 0) return false;
    // 2*x0 = -a*b (mod den)
    const BigInt c = st.a * st.b;
    BigInt modulus = st.den, residue;
    if (st.den % 2 == 0) {
      if (c % 2 != 0) return false;
      modulus = st.den / 2;
      residue = -(c / 2);
    } else {
      BigInt inv2 = (st.den + 1) / 2;
      residue = -c * inv2;
    }
    mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
    if (residue == 0) residue = modulus;
    for (BigInt x0 = residue; x0 <= W_; x0 += modulus) {
      if (check_point(h, x0, st)) return true;
      if (!params_.roundtrip) return true;
    }
    return false;
  }

  bool config_completes(const std::vector<BigInt>& h, std::size_t perturbed, const MiddleStats& st) const {
    if (perturbed == 0) return check_point(h, h[0], st);
    if (params_.mode == CompletionMode::Fixed) return check_point(h, h[0], st);
    return some_x0_completes(h, st);
  }

  bool has_completion(std::size_t i, const BigInt& target) {
    std::vector<BigInt> h = half_;
    h[i] = target;
    if (config_completes(h, i, stats(h))) return true;
    if (params_.mode == CompletionMode::Fixed) return false;

    std::vector<std::size_t> others;
    for (std::size_t j = 1; j <= k_; ++j) {
      if (j != i) others.push_back(j);
    }
    const std::size_t max_depth = std::min<std::size_t>(params_.covary_depth, others.size());
    for (std::size_t depth = 1; depth <= max_depth; ++depth) {
      std::vector<std::size_t> chosen;
      if (search_subsets(h, i, others, 0, depth, chosen)) return true;
    }
    return false;
  }

  bool search_subsets(std::vector<BigInt>& h, std::size_t i, const std::vector<std::size_t>& others,
                      std::size_t from, std::size_t remaining, std::vector<std::size_t>& chosen) {
    if (remaining == 0) return search_values(h, i, chosen, 0);
    for (std::size_t t = from; t + remaining <= others.size(); ++t) {
      chosen.push_back(others[t]);
      if (search_subsets(h, i, others, t + 1, remaining - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  bool search_values(std::vector<BigInt>& h, std::size_t i, const std::vector<std::size_t>& chosen,
                     std::size_t level) {
    const std::size_t j = chosen[level];
    const BigInt saved = h[j];
    bool found = false;
    if (level + 1 < chosen.size()) {
      for (BigInt v = 1; v <= W_ && !found; ++v) {
        h[j] = v;
        found = search_values(h, i, chosen, level + 1);
      }
    } else {
      // Innermost coordinate: every statistic is at most quadratic in h[j].
      Quadratic den, a, b;
      fit(h, j, den, a, b);
      for (BigInt v = 1; v <= W_ && !found; ++v) {
        h[j] = v;
        MiddleStats st{den.at(v), a.at(v), b.at(v)};
        found = config_completes(h, i, st);
      }
    }
    h[j] = saved;
    return found;
  }

  void fit(std::vector<BigInt>& h, std::size_t j, Quadratic& den, Quadratic& a, Quadratic& b) const {
    MiddleStats s[3];
    for (int v = 0; v < 3; ++v) {
      h[j] = v;
      s[v] = stats(h);
    }
    den = {s[0].den, s[1].den - s[0].den, s[2].den - 2 * s[1].den + s[0].den};
    a = {s[0].a, s[1].a - s[0].a, s[2].a - 2 * s[1].a + s[0].a};
    b = {s[0].b, s[1].b - s[0].b, s[2].b - 2 * s[1].b + s[0].b};
  }

  std::vector<BigInt> half_;
  std::size_t P_;
  std::size_t k_;
  DimensionParams params_;
  BigInt W_;
};

void require_sqrt_shape(const PeriodicCF& cf) {
  if (cf.head.size() != 1) throw Error(Errc::InvalidArgument, "expected the expansion of a square root");
  const std::size_t P = cf.period_length();
  if (P == 0 || P % 2 != 0) throw Error(Errc::OddPeriod, "period length " + std::to_string(P) + " is not even");
  if (cf.period.back() != 2 * cf.a0()) throw Error(Errc::InvalidArgument, "period does not end in 2*a0");
  std::vector<BigInt> xs = tuple_from_cf(cf);
  if (!is_palindromic(xs)) throw Error(Errc::InvalidArgument, "period interior is not a palindrome");
}

}  // namespace

DimensionResult dimension_bruteforce(const PeriodicCF& cf, const DimensionParams& params) {
  require_sqrt_shape(cf);
  if (params.window < 1) throw Error(Errc::InvalidArgument, "shift window must be >= 1");
  const std::size_t P = cf.period_length();
  const std::size_t k = P / 2;
  std::vector<BigInt> half(cf.period.begin(), cf.period.begin() + static_cast<std::ptrdiff_t>(k));
  half.insert(half.begin(), cf.a0());

  DimensionResult out;
  BigInt W = params.completion ? big_u(params.completion) : BigInt(2 * cf.a0() + 4);
  out.completion = to_u64(W);
  for (const auto& v : half) {
    if (v > W) {
      throw Error(Errc::WindowTooSmall, "entry " + to_string(v) + " exceeds completion window " + to_string(W));
    }
  }
  DimensionSearch search(std::move(half), P, params, W);
  if (!search.base_is_solution()) {
    throw Error(Errc::WindowTooSmall, "unperturbed tuple is not a solution inside the window");
  }
  for (std::size_t i = 0; i <= k; ++i) {
    if (search.index_passes(i)) out.free_indices.push_back(i);
  }
  out.dimension = static_cast<unsigned>(out.free_indices.size());
  return out;
}

ComplexityReport complexity_report(std::uint64_t p, bool with_brute, const DimensionParams& params) {
  ComplexityReport out;
  out.closed_form = complexity_closed(p);
  out.search_params = params;
  if (with_brute) {
    DimensionResult r = dimension_bruteforce(expand_sqrt(big_u(p)), params);
    out.brute_force = static_cast<int>(r.dimension);
    out.free_variable_indices = std::move(r.free_indices);
    out.search_params.completion = r.completion;
  }
  return out;
}

WeberProbe weber_step_probe(const std::vector<BigInt>& xs, std::uint64_t window) {
  if (xs.size() < 3 || !is_palindromic(xs) || xs.back() != 2 * xs.front() || (xs.size() - 1) % 2 != 0) {
    throw Error(Errc::NotASolution, "expected a palindromic tuple with even period ending in 2*x0");
  }
  if (!solve_m(xs)) throw Error(Errc::NotASolution, "tuple admits no positive integral m");

  const std::size_t P = xs.size() - 1;
  const std::size_t k = P / 2;
  WeberProbe out;
  for (std::uint64_t y = 1; y <= window; ++y) {
    for (std::uint64_t z = 1; z <= window; ++z) {
      // Half of the extended period: y, x1..x_{k-1}, z, x_k.
      std::vector<BigInt> half{big_u(y)};
      for (std::size_t i = 1; i < k; ++i) half.push_back(xs[i]);
      half.push_back(big_u(z));
      half.push_back(xs[k]);
      std::vector<BigInt> ext{xs[0]};
      ext.insert(ext.end(), half.begin(), half.end());
      for (std::size_t i = half.size() - 1; i-- > 0;) ext.push_back(half[i]);
      ext.push_back(2 * xs[0]);

      auto m = solve_m(ext);
      if (!m) continue;
      WeberExtension e;
      e.y_first = y;
      e.y_mid = z;
      e.m = *m;
      e.D = d_from_solution(ext, *m);
      if (e.D >= 2 && !is_perfect_square(e.D)) e.genuine = expand_sqrt(e.D) == cf_from_tuple(ext);
      e.d_prime = e.D.fits_ulong_p() && is_prime(e.D.get_ui());
      e.weber_form = e.y_mid == 2 * e.y_first + 1 && xs[1] == 1;
      e.doubled = e.y_mid == 2 * e.y_first;
      if (e.genuine && e.d_prime) {
        ++out.genuine_prime;
        if (e.weber_form) ++out.weber_form_prime;
        if (e.doubled) out.counterexamples.push_back(e);
      }
      out.extensions.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace qrank
