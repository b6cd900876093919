#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qrank/bigint.hpp"

namespace qrank {

/// The real number (p + sqrt(d)) / q.
struct QuadraticSurd {
  BigInt p;
  BigInt q{1};
  BigInt d;

  static QuadraticSurd sqrt_of(const BigInt& d) { return {0, 1, d}; }

  bool is_rational() const { return is_perfect_square(d); }

  /// Scales numerator and radicand so that q divides d - p^2, the form the
  /// complete-quotient recurrence needs. The value is unchanged.
  QuadraticSurd canonical() const;

  /// Lowest terms with q > 0 when the sign allows it: removes the largest g
  /// with g | p, g | q, g^2 | d. Two surds are equal iff their reduced forms
  /// are identical.
  QuadraticSurd reduced() const;

  double approx() const;

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b);
};

std::string to_string(const QuadraticSurd& s);

/// An eventually periodic continued fraction [h0, h1, ..., hr; p1, ..., pk].
/// `head` always holds at least a0. For sqrt(D) it is exactly {a0}.
struct PeriodicCF {
  std::vector<BigInt> head;
  std::vector<BigInt> period;

  const BigInt& a0() const { return head.front(); }
  std::size_t period_length() const { return period.size(); }

  /// i-th partial quotient of the infinite word.
  const BigInt& term(std::size_t i) const;

  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

/// Text form `[a0; p1,p2,...,pk]`; a longer head is written `[h0,h1; p1,...]`.
std::string to_string(const PeriodicCF& cf);
PeriodicCF parse_cf(std::string_view text);

/// Convergent numerators and denominators and the full quotients Q_i.
struct ConvergentTable {
  std::vector<BigInt> A;
  std::vector<BigInt> B;
  std::vector<BigInt> Q;
};

PeriodicCF expand_sqrt(const BigInt& D);
PeriodicCF expand_surd(const QuadraticSurd& s);

/// A_i, B_i for i < n. Q holds the complete-quotient denominators of the
/// value the fraction represents (for sqrt(D): Q_0 = 1 and
/// A_{i-1}^2 - D B_{i-1}^2 = (-1)^i Q_i).
ConvergentTable convergents(const PeriodicCF& cf, std::size_t n);

/// Same as convergents(expand_sqrt(D), n) without reconstructing the surd.
ConvergentTable sqrt_convergents(const BigInt& D, std::size_t n);

QuadraticSurd reconstruct_surd(const PeriodicCF& cf);

/// True when `word` is a proper repetition of a shorter block.
bool is_repetition(const std::vector<BigInt>& word);

}  // namespace qrank
