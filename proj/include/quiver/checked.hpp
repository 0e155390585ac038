#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace quiver {

/// Signed 128-bit integer used for every counter, codimension and series
/// coefficient. Arithmetic on it goes through the checked helpers below.
using Wide = __int128;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& where)
      : Error("integer overflow in " + where) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

namespace checked {

inline Wide add(Wide a, Wide b, const char* where = "add") {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(where);
  return r;
}

inline Wide sub(Wide a, Wide b, const char* where = "sub") {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError(where);
  return r;
}

inline Wide mul(Wide a, Wide b, const char* where = "mul") {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(where);
  return r;
}

inline std::int64_t narrow(Wide v, const char* where = "narrow") {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError(where);
  return static_cast<std::int64_t>(v);
}

}  // namespace checked

/// binomial(n, k) with overflow detection; 0 outside 0 <= k <= n.
inline Wide binomial(Wide n, Wide k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Wide r = 1;
  for (Wide i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked::mul(r, n - k + i, "binomial") / i;
  }
  return r;
}

std::string to_string(Wide v);

}  // namespace quiver
