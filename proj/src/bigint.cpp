#include "qrank/bigint.hpp"

#include <limits>

#include "qrank/error.hpp"

namespace qrank {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPositiveInput: return "NonPositiveInput";
    case Errc::PerfectSquareInput: return "PerfectSquareInput";
    case Errc::RationalInput: return "RationalInput";
    case Errc::DegeneratePeriod: return "DegeneratePeriod";
    case Errc::UnsupportedRhs: return "UnsupportedRhs";
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::WrongResidue: return "WrongResidue";
    case Errc::OddPeriod: return "OddPeriod";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::OddXp: return "OddXp";
    case Errc::NotASolution: return "NotASolution";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::InvalidDiscriminant: return "InvalidDiscriminant";
    case Errc::NonIntegralEntry: return "NonIntegralEntry";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(Errc::ZeroDenominator, "floor_div by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool fits_i64(const BigInt& n) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 expected");
  return n.fits_slong_p();
}

std::int64_t to_i64(const BigInt& n) {
  if (!fits_i64(n)) throw Error(Errc::OutOfRange, to_string(n) + " does not fit in 64 bits");
  return n.get_si();
}

std::uint64_t to_u64(const BigInt& n) {
  if (!n.fits_ulong_p()) throw Error(Errc::OutOfRange, to_string(n) + " does not fit in 64 bits");
  return n.get_ui();
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw Error(Errc::ParseError, "expected an integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw Error(Errc::ParseError, "expected an integer, got '" + text + "'");
  }
  BigInt out;
  out.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return out;
}

}  // namespace qrank
