#pragma once

// Shared vocabulary: element indices, exact numbers and the error type.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace refmon {

using Index    = std::uint32_t;
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr Index kNoIndex = static_cast<Index>(-1);

enum class ErrorKind {
  size_mismatch,
  ambient_mismatch,
  singular_matrix,
  cap_exceeded,
  system_violation,
  unsupported,
  parse_error,
  invalid_argument,
  action_error,
};

inline char const* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::size_mismatch: return "size mismatch";
    case ErrorKind::ambient_mismatch: return "ambient dimension mismatch";
    case ErrorKind::singular_matrix: return "singular matrix";
    case ErrorKind::cap_exceeded: return "scale cap exceeded";
    case ErrorKind::system_violation: return "system violation";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::parse_error: return "parse error";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::action_error: return "action error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Exact conversion of a rational that is known to be an integer.
inline BigInt to_integer(Rational const& q) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw Error(ErrorKind::invalid_argument,
                "expected an integer, got " + q.str());
  }
  return boost::multiprecision::numerator(q);
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    r *= i;
  }
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

inline BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

}  // namespace refmon
