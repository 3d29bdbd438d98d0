#include <doctest.h>

#include <algorithm>
#include <map>
#include <tuple>

#include "path_oracle.hpp"
#include "pathpairs/closedform.hpp"
#include "pathpairs/series.hpp"

using namespace pathpairs;
using namespace pathpairs::closedform;

namespace {

// (n, k, r, s) -> count, tabulated once per n from the string-path enumerator.
class ReferenceCounts {
 public:
  const std::map<std::tuple<int, int, int>, std::int64_t>& at(int n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    std::map<std::tuple<int, int, int>, std::int64_t> counts;
    const auto paths = testing_oracle::all_paths(n);
    for (const auto& a : paths) {
      for (const auto& b : paths) {
        const int r = static_cast<int>(std::count(a.begin(), a.end(), 'E'));
        const int s = static_cast<int>(std::count(b.begin(), b.end(), 'E'));
        ++counts[{testing_oracle::meetings(a, b), r, s}];
      }
    }
    return cache_.emplace(n, std::move(counts)).first->second;
  }

  std::int64_t count(int n, int k, int r, int s) {
    const auto& table = at(n);
    auto it = table.find({k, r, s});
    return it == table.end() ? 0 : it->second;
  }

 private:
  std::map<int, std::map<std::tuple<int, int, int>, std::int64_t>> cache_;
};

ReferenceCounts& reference() {
  static ReferenceCounts counts;
  return counts;
}

constexpr int kOracleN = 8;

}  // namespace

TEST_CASE("m_value examples") {
  CHECK(m_value({3, 0, 1, 2}) == 3);
  CHECK(m_value({2, 0, 0, 1}) == 1);
  CHECK(m_value({3, 0, 2, 1}) == 3);
  CHECK(m_value({3, 5, 1, 2}) == 0);
  CHECK(m_value({3, 0, -1, 2}) == 0);
  CHECK(m_value({3, 0, 1, 4}) == 0);
  CHECK(m_value({-2, 0, 0, 0}) == 0);
}

TEST_CASE("nk_value examples") {
  CHECK(nk_value(3, 2, 1) == 3);
  CHECK(nk_value(3, 0, 1) == 2);
  CHECK(nk_value(3, 1, 1) == 4);
  CHECK(nk_value(5, -1, 2) == 0);
  CHECK(nk_value(4, 1, 2) == 12);
  CHECK(nk_value(4, 0, 2) == 6);
  CHECK(nk_value(4, 4, 2) == 0);
  CHECK(nk_value(4, 1, 5) == 0);
}

TEST_CASE("n0_via_m examples") {
  CHECK(n0_via_m(3, 1) == 2);
  CHECK(n0_via_m(2, 1) == 2);
  CHECK(n0_via_m(4, 0) == 0);
  for (Index n = 2; n <= 30; ++n)
    for (Index r = -1; r <= n + 1; ++r) CHECK(n0_via_m(n, r) == nk_value(n, 0, r));
}

TEST_CASE("ne_value and no_value examples") {
  CHECK(ne_value({2, 0, 1}) == 4);
  CHECK(ne_value({3, 2, 1}) == 3);
  CHECK(ne_value({2, 0, 0}) == 0);
  CHECK(no_value({2, 0, 0}) == 2);
  CHECK(no_value({2, 1, 0}) == 2);
  CHECK(no_value({1, 0, 0}) == 2);
  CHECK(ne_def({2, 0, 1}) == 4);
  CHECK(no_def({2, 0, 0}) == 2);
  CHECK(ne_def({5, 9, 2}) == 0);
}

TEST_CASE("row sums: examples and errors") {
  CHECK(row_sum(2, 0) == 4);
  CHECK(row_sum(2, 1) == 4);
  CHECK(row_sum(1, 0) == 2);
  CHECK(nk_row_sum(2, 0) == 2);
  CHECK(nk_row_sum(3, 2) == 8);
  CHECK(nk_row_sum(3, 0) == 4);
  CHECK_THROWS_AS(row_sum(3, 3), DomainError);
  CHECK_THROWS_AS(row_sum(3, -1), DomainError);
  CHECK_THROWS_AS(nk_row_sum(0, 0), DomainError);
}

TEST_CASE("k-recurrence") {
  CHECK(check_thm4(3, 1, 1));
  CHECK(check_thm4(4, 1, 2));
  CHECK(check_thm4(2, 1, 1));
  for (Index n = 1; n <= 30; ++n)
    for (Index k = 1; k <= n - 1; ++k)
      for (Index r = 0; r <= n; ++r) CHECK(check_thm4(n, k, r));
  CHECK_THROWS_AS(check_thm4(3, 0, 1), DomainError);
  CHECK_THROWS_AS(check_thm4(0, 1, 0), DomainError);
  // A wrong N_k breaks the recurrence.
  const NkFunction bumped = [](Index n, Index k, Index r) -> Integer {
    return nk_value(n, k, r) + (n == 4 && k == 1 && r == 2 ? 1 : 0);
  };
  CHECK_FALSE(check_thm4(4, 1, 2, bumped));
}

TEST_CASE("m_value agrees with enumeration") {
  for (int n = 1; n <= kOracleN; ++n) {
    for (int k = 0; k <= n + 1; ++k)
      for (int r = -1; r <= n + 1; ++r)
        for (int s = -1; s <= n + 1; ++s) {
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(r);
          CAPTURE(s);
          CHECK(m_value({n, k, r, s}) == reference().count(n, k, r, s));
        }
  }
}

TEST_CASE("nk_value agrees with enumeration") {
  for (int n = 1; n <= kOracleN; ++n)
    for (int k = 0; k <= n - 1; ++k)
      for (int r = 0; r <= n; ++r) CHECK(nk_value(n, k, r) == reference().count(n, k, r, r));
}

TEST_CASE("definitional diagonal sums match closed forms") {
  for (Index n = 1; n <= 14; ++n) {
    for (Index k = 0; k <= n - 1; ++k) {
      Integer ne_total = 0, no_total = 0;
      for (Index p = 0; p <= n; ++p) {
        CHECK(ne_def({n, k, p}) == ne_value({n, k, p}));
        CHECK(no_def({n, k, p}) == no_value({n, k, p}));
        ne_total += ne_value({n, k, p});
        no_total += no_value({n, k, p});
      }
      CHECK(ne_total == row_sum(n, k));
      CHECK(no_total == row_sum(n, k));
      Integer nk_total = 0;
      for (Index r = 0; r <= n; ++r) nk_total += nk_value(n, k, r);
      CHECK(nk_total == nk_row_sum(n, k));
    }
  }
}

TEST_CASE("symmetry and completeness") {
  for (Index n = 1; n <= 16; ++n) {
    for (Index r = 0; r <= n; ++r) {
      for (Index s = 0; s <= n; ++s) {
        Integer total = 0;
        for (Index k = 0; k <= n - 1; ++k) {
          CHECK(m_value({n, k, r, s}) == m_value({n, k, s, r}));
          CHECK(m_value({n, k, r, s}) == m_value({n, k, n - r, n - s}));
          total += m_value({n, k, r, s});
        }
        CHECK(total == binom(n, r) * binom(n, s));
      }
    }
  }
}

TEST_CASE("EndpointTable") {
  const EndpointTable t(4, 1);
  CHECK(t.n() == 4);
  CHECK(t.at(2, 2) == nk_value(4, 1, 2));
  CHECK(t.at(1, 3) == m_value({4, 1, 1, 3}));
  CHECK(t.at(3, 1) == t.at(1, 3));
  CHECK(t.at(-1, 2) == 0);
  CHECK(t.at(5, 0) == 0);
  for (Index p = 0; p <= 4; ++p) {
    CHECK(t.even_sum(p) == ne_def({4, 1, p}));
    CHECK(t.odd_sum(p) == no_def({4, 1, p}));
  }
  const EndpointTable custom(3, 0, [](const PairQuery&) -> Integer { return 1; });
  CHECK(custom.at(0, 3) == 1);
  CHECK(custom.odd_sum(1) == 4);
}

TEST_CASE("lagrange_coeff examples") {
  CHECK(lagrange_coeff(0, 0, 1, 2, 2) == 3);
  CHECK(lagrange_coeff(0, 0, 0, 0, 0) == 1);
  CHECK(lagrange_coeff(1, 1, 0, 1, 1) == 1);
  CHECK(lagrange_coeff(2, 1, 0, 1, 1) == 0);
  CHECK_THROWS_AS(lagrange_coeff(-1, 0, 0, 1, 1), DomainError);
}

TEST_CASE("lagrange_coeff matches series expansion") {
  using series::BiSeries;
  const int cap = 12;
  const BiSeries f = series::solve_f(cap + 1);
  const BiSeries fc = f.truncated(cap);
  const BiSeries xf = BiSeries::x(cap) + fc;
  const BiSeries yf = BiSeries::y(cap) + fc;
  const BiSeries fx = series::div_monomial_x(f);
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b)
      for (unsigned c = 0; c <= 3; ++c) {
        const BiSeries product = series::pow(xf, a) * series::pow(yf, b) * series::pow(fx, c);
        for (int l = 0; l <= cap + 2; ++l)
          for (int m = 0; m + l - static_cast<int>(c) <= cap && m <= cap; ++m) {
            const int i = l - static_cast<int>(c);
            const Integer expected = i < 0 ? Integer(0) : product.coefficient(i, m);
            CHECK(lagrange_coeff(a, b, c, l, m) == expected);
          }
      }
}
