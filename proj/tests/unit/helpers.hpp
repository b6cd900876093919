#pragma once

#include <functional>
#include <vector>

#include <doctest.h>

#include "qrank/bigint.hpp"
#include "qrank/error.hpp"

namespace qrank::test {

/// True when `f` throws a qrank::Error carrying `expected`.
inline bool throws_code(const std::function<void()>& f, Errc expected) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == expected;
  } catch (...) {
    return false;
  }
  return false;
}

inline std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace qrank::test
