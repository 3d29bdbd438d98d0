#include "pathpairs/closedform.hpp"

#include <algorithm>
#include <utility>

namespace pathpairs::closedform {

namespace {

bool k_in_support(Index n, Index k) { return n >= 1 && k >= 0 && k <= n - 1; }

// Single-sum formula for M, valid for 0 <= r < s <= n inside the k-support.
Integer m_off_diagonal(Index n, Index k, Index r, Index s) {
  Integer total = 0;
  for (Index i = 0; i <= k; ++i) {
    const Index top = n - k + i - 1;
    const Index bottom = n - i - 1;
    Integer term = binom(top, s - 1) * binom(bottom, n - r - 1) - binom(top, s) * binom(bottom, n - r);
    total += binom(k, i) * term;
  }
  return total;
}

void require_row_sum_domain(const char* what, Index n, Index k) {
  if (!k_in_support(n, k)) {
    throw DomainError(std::string(what) + ": requires 0 <= k <= n-1 (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

bool in_support(const PairQuery& q) {
  return k_in_support(q.n, q.k) && q.r >= 0 && q.r <= q.n && q.s >= 0 && q.s <= q.n;
}

Integer m_value(const PairQuery& q) {
  if (!in_support(q)) return 0;
  if (q.r == q.s) return nk_value(q.n, q.k, q.r);
  if (q.r > q.s) return m_off_diagonal(q.n, q.k, q.s, q.r);
  return m_off_diagonal(q.n, q.k, q.r, q.s);
}

Integer nk_value(Index n, Index k, Index r) {
  if (!k_in_support(n, k) || r < 0 || r > n) return 0;
  if (k == n - 1) return binom(n, r);
  Integer sum = 0;
  for (Index i = 0; i <= k; ++i) {
    sum += binom(k, i) * binom(n - k + i - 1, r) * binom(n - i - 1, n - r);
  }
  return exact_div(2 * (k + 1) * sum, Integer(n - k - 1));
}

Integer n0_via_m(Index n, Index r) { return 2 * m_value({n - 1, 0, r - 1, r}); }

Integer ne_value(const DiagQuery& d) {
  if (!k_in_support(d.n, d.k)) return 0;
  return exact_div(d.n * nk_value(d.n, d.k, d.p), Integer(d.k + 1));
}

Integer no_value(const DiagQuery& d) {
  if (!k_in_support(d.n, d.k) || d.p < 0 || d.p > d.n - 1) return 0;
  const Integer c = binom(d.n - 1, d.p);
  Integer lower = 0;
  for (Index i = 0; i <= d.k - 2; ++i) lower += nk_value(d.n - 1, i, d.p);
  return 2 * (c * c - lower);
}

Integer ne_def(const DiagQuery& d) {
  Integer total = 0;
  for (Index r = std::max<Index>(0, 2 * d.p - d.n); r <= std::min(d.n, 2 * d.p); ++r) {
    total += m_value({d.n, d.k, r, 2 * d.p - r});
  }
  return total;
}

Integer no_def(const DiagQuery& d) {
  Integer total = 0;
  for (Index r = std::max<Index>(0, 2 * d.p + 1 - d.n); r <= std::min(d.n, 2 * d.p + 1); ++r) {
    total += m_value({d.n, d.k, r, 2 * d.p + 1 - r});
  }
  return total;
}

Integer row_sum(Index n, Index k) {
  require_row_sum_domain("row_sum", n, k);
  return ipow(2, static_cast<unsigned>(k + 1)) * binom(2 * n - k - 2, n - 1);
}

Integer nk_row_sum(Index n, Index k) {
  require_row_sum_domain("nk_row_sum", n, k);
  const Integer numerator = ipow(2, static_cast<unsigned>(k + 1)) * (k + 1) * factorial(2 * n - k - 2);
  return exact_div(numerator, factorial(n) * factorial(n - k - 1));
}

bool check_thm4(Index n, Index k, Index r) { return check_thm4(n, k, r, nk_value); }

bool check_thm4(Index n, Index k, Index r, const NkFunction& nk) {
  if (k < 1 || n < 1) {
    throw DomainError("check_thm4: requires k >= 1 and n >= 1");
  }
  const Integer lhs = (n - k - 1) * k * nk(n, k, r);
  const Integer rhs = (n - 2 * k) * (k + 1) * nk(n, k - 1, r) +
                      k * (k + 1) * (nk(n - 1, k - 2, r) + nk(n - 1, k - 2, r - 1));
  return lhs == rhs;
}

Integer lagrange_coeff(Index a, Index b, Index c, Index l, Index m) {
  if (a < 0 || b < 0 || c < 0) {
    throw DomainError("lagrange_coeff: exponents a, b, c must be nonnegative");
  }
  const Index order = l + m - a - b - c;
  if (order < 0) return 0;
  if (order == 0) return (c == 0 && l == a && m == b) ? 1 : 0;
  const Index top_x = order + a - 1;  // = l + m - b - c - 1
  const Index top_y = order + b - 1;  // = l + m - a - c - 1
  return binom(top_x, l - 1) * binom(top_y, m - 1) - binom(top_x, l) * binom(top_y, m);
}

EndpointTable::EndpointTable(Index n, Index k) : EndpointTable(n, k, m_value) {}

EndpointTable::EndpointTable(Index n, Index k, const MFunction& m) : n_(n), k_(k) {
  if (n < 0) throw DomainError("EndpointTable: negative n");
  const auto side = static_cast<std::size_t>(n + 1);
  values_.assign(side * side, Integer(0));
  for (Index r = 0; r <= n; ++r) {
    for (Index s = r; s <= n; ++s) {
      Integer v = m({n, k, r, s});
      values_[static_cast<std::size_t>(s) * side + static_cast<std::size_t>(r)] = v;
      values_[static_cast<std::size_t>(r) * side + static_cast<std::size_t>(s)] = std::move(v);
    }
  }
}

const Integer& EndpointTable::at(Index r, Index s) const {
  static const Integer zero = 0;
  if (r < 0 || s < 0 || r > n_ || s > n_) return zero;
  return values_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_ + 1) +
                 static_cast<std::size_t>(s)];
}

Integer EndpointTable::diagonal_sum(Index t) const {
  Integer total = 0;
  for (Index r = std::max<Index>(0, t - n_); r <= std::min(n_, t); ++r) total += at(r, t - r);
  return total;
}

Integer EndpointTable::even_sum(Index p) const { return diagonal_sum(2 * p); }
Integer EndpointTable::odd_sum(Index p) const { return diagonal_sum(2 * p + 1); }

}  // namespace pathpairs::closedform
