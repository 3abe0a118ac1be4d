#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace scottkit {

// Unbounded natural number. Column indices and sequence entries grow
// doubly-exponentially under the pairing maps, so fixed-width integers
// are not an option anywhere near the interesting examples.
using Nat = boost::multiprecision::cpp_int;

// Thrown when an operation's stated precondition does not hold.
struct precondition_violation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a membership oracle claimed to describe an open set fails to
// deliver: a search certified to terminate for genuine opens ran past its
// budget, so the oracle is not inaccessible by directed sups after all.
struct oracle_not_scott_open : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// fib(0) = 0, fib(1) = 1, fib(n) = fib(n-1) + fib(n-2).
// Fast doubling: fib(2k) = f*(2g - f), fib(2k+1) = f^2 + g^2
// with f = fib(k), g = fib(k+1).
inline std::pair<Nat, Nat> fib_pair(const Nat& n) {
  if (n == 0) return {Nat(0), Nat(1)};
  std::pair<Nat, Nat> h = fib_pair(n >> 1);
  Nat f = h.first, g = h.second;
  Nat a = f * (2 * g - f);
  Nat b = f * f + g * g;
  if ((n & 1) == 0) return {a, b};
  return {b, a + b};
}

inline Nat fib(const Nat& n) { return fib_pair(n).first; }

// Largest r with r*r <= n.
inline Nat isqrt(const Nat& n) {
  if (n < 0) throw precondition_violation("isqrt: negative argument");
  if (n < 2) return n;
  Nat x = Nat(1) << (static_cast<unsigned>(msb(n)) / 2 + 1);
  for (;;) {
    Nat y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

// 2-adic valuation: largest a with 2^a dividing n. Requires n > 0.
inline unsigned long two_adic_valuation(const Nat& n) {
  if (n <= 0) throw precondition_violation("two_adic_valuation: argument must be positive");
  return static_cast<unsigned long>(lsb(n));
}

inline std::string nat_str(const Nat& n) { return n.str(); }

// Narrow to size_t; throws when the value is too large to index with.
inline std::size_t nat_to_size(const Nat& n) {
  if (n < 0 || n > Nat(SIZE_MAX)) throw precondition_violation("nat_to_size: out of range");
  return static_cast<std::size_t>(n);
}

}  // namespace scottkit
