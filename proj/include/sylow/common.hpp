#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sylow {

using BigInt = boost::multiprecision::cpp_int;

// Malformed input: bad sizes, non-primes, out-of-range entries.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured budget (partition count, group order, star size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; always a bug, never bad input.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& x) { return x.str(); }

bool is_prime(std::int64_t n);

// p^e for small exponents, throwing on overflow.
std::int64_t ipow(std::int64_t p, int e);

}  // namespace sylow
