#pragma once

// Exact integer kernels: the arbitrary-precision scalar used for every count,
// plus binomials, factorials and checked exact division.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pathpairs {

/// Signed arbitrary-precision integer. Zero is canonical (sgn == 0).
using Integer = mpz_class;

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by exact_div when the divisor does not divide the dividend.
/// Every rational prefactor in the closed forms must resolve to an integer,
/// so this also flags a failed identity.
class DivisibilityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// C(n, k) with C(n, k) = 0 for k < 0 or k > n. Throws DomainError for n < 0.
Integer binom(std::int64_t n, std::int64_t k);

/// n!, DomainError for n < 0.
Integer factorial(std::int64_t n);

/// a / b, DivisibilityViolation unless b != 0 and b | a.
Integer exact_div(const Integer& a, const Integer& b);

/// Integer power with a nonnegative exponent.
Integer ipow(const Integer& base, unsigned exponent);

std::string to_string(const Integer& value);

/// Parses a decimal string (optional leading '-'); DomainError on garbage.
Integer parse_integer(const std::string& text);

}  // namespace pathpairs
