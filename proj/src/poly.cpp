#include "qrank/poly.hpp"

#include <numeric>

#include "qrank/error.hpp"

namespace qrank {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return b < a;
}

MultiPoly::Vars make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MultiPoly::MultiPoly(Vars vars) : vars_(std::move(vars)) {
  if (!vars_) throw Error(Errc::InvalidArgument, "null variable list");
}

MultiPoly MultiPoly::constant(Vars vars, const BigInt& c) {
  MultiPoly f(std::move(vars));
  f.add_term(Exponents(f.vars_->size(), 0), c);
  return f;
}

MultiPoly MultiPoly::variable(Vars vars, std::size_t index) {
  MultiPoly f(std::move(vars));
  if (index >= f.vars_->size()) throw Error(Errc::OutOfRange, "variable index out of range");
  Exponents e(f.vars_->size(), 0);
  e[index] = 1;
  f.add_term(e, 1);
  return f;
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_ && *vars_ != *o.vars_) {
    throw Error(Errc::InvalidArgument, "polynomials over different variables");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.vars_);
  Exponents e(a.vars_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
}

BigInt MultiPoly::evaluate(std::span<const BigInt> point) const {
  if (point.size() != vars_->size()) {
    throw Error(Errc::InvalidArgument, "evaluation point has " + std::to_string(point.size()) +
                                           " coordinates, expected " + std::to_string(vars_->size()));
  }
  BigInt total = 0;
  BigInt term;
  BigInt power;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), point[i].get_mpz_t(), e[i]);
      term *= power;
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out = constant(vars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t index, const MultiPoly& value) const {
  check_compatible(value);
  if (index >= vars_->size()) throw Error(Errc::OutOfRange, "variable index out of range");
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const unsigned k = rest[index];
    rest[index] = 0;
    MultiPoly mono(vars_);
    mono.add_term(rest, c);
    out += k == 0 ? mono : mono * value.pow(k);
  }
  return out;
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += f.var_names()[i];
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += to_string(mag) + "*" + factors;
    }
  }
  return out;
}

}  // namespace qrank
