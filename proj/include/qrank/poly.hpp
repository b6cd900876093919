#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qrank/bigint.hpp"

namespace qrank {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// go to the larger exponent of the earliest variable.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with integer coefficients over a fixed,
/// ordered list of variable names. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Vars = std::shared_ptr<const std::vector<std::string>>;

  explicit MultiPoly(Vars vars);

  static MultiPoly constant(Vars vars, const BigInt& c);
  static MultiPoly variable(Vars vars, std::size_t index);

  const std::vector<std::string>& var_names() const { return *vars_; }
  const Vars& vars() const { return vars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, BigInt, GrlexGreater>& terms() const { return terms_; }

  /// Coefficient of the given monomial (0 when absent).
  BigInt coefficient(const Exponents& e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigInt& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a) { return a *= BigInt(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  BigInt evaluate(std::span<const BigInt> point) const;

  /// Replaces variable `index` by `value` (over the same variables).
  MultiPoly substitute(std::size_t index, const MultiPoly& value) const;

  MultiPoly pow(unsigned k) const;

 private:
  void add_term(const Exponents& e, const BigInt& c);
  void check_compatible(const MultiPoly& o) const;

  Vars vars_;
  std::map<Exponents, BigInt, GrlexGreater> terms_;
};

/// Canonical text: terms in grlex order, `*` between factors, `^` for powers,
/// e.g. `x1^2*x2 - 2*m + 1`.
std::string to_string(const MultiPoly& f);

MultiPoly::Vars make_vars(std::vector<std::string> names);

}  // namespace qrank
