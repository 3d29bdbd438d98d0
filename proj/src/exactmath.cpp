#include "pathpairs/exactmath.hpp"

#include <algorithm>
#include <vector>

namespace pathpairs {

namespace {

// C(n, k) for 0 <= k <= n, multiplicative with a running exact division:
// after step i the accumulator holds C(n - k + i, i).
Integer binom_multiplicative(std::int64_t n, std::int64_t k) {
  k = std::min(k, n - k);
  Integer acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return acc;
}

// Rows below this bound are cached; every grid in the verifier stays inside it.
constexpr std::int64_t kCachedRows = 192;

class BinomialCache {
 public:
  BinomialCache() {
    rows_.reserve(kCachedRows);
    for (std::int64_t n = 0; n < kCachedRows; ++n) {
      std::vector<Integer> row(static_cast<std::size_t>(n + 1));
      for (std::int64_t k = 0; k <= n / 2; ++k) {
        row[k] = binom_multiplicative(n, k);
        row[n - k] = row[k];
      }
      rows_.push_back(std::move(row));
    }
  }

  const Integer& at(std::int64_t n, std::int64_t k) const { return rows_[n][k]; }

 private:
  std::vector<std::vector<Integer>> rows_;
};

// Built once on first use (thread-safe static init); read-only afterwards.
const BinomialCache& cache() {
  static const BinomialCache instance;
  return instance;
}

}  // namespace

Integer binom(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw DomainError("binom: negative upper index " + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  if (n < kCachedRows) return cache().at(n, k);
  return binom_multiplicative(n, k);
}

Integer factorial(std::int64_t n) {
  if (n < 0) {
    throw DomainError("factorial: negative argument " + std::to_string(n));
  }
  Integer acc = 1;
  for (std::int64_t i = 2; i <= n; ++i) acc *= static_cast<unsigned long>(i);
  return acc;
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) {
    throw DivisibilityViolation("exact_div: division by zero (dividend " + a.get_str() + ")");
  }
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw DivisibilityViolation("exact_div: " + b.get_str() + " does not divide " + a.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ipow(const Integer& base, unsigned exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer parse_integer(const std::string& text) {
  const auto digits = text.starts_with('-') ? text.substr(1) : text;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not a decimal integer: '" + text + "'");
  }
  return Integer(text, 10);
}

}  // namespace pathpairs
