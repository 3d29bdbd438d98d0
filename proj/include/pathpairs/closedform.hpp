#pragma once

// Closed-form evaluators for intersection-counted pairs of E/N lattice paths.
//
// M(n, k, r, s) counts ordered pairs of n-step paths from the origin, the
// first ending at (r, n-r) and the second at (s, n-s), whose m-th points
// coincide for exactly k indices 0 < m < n. N(n, k, r) is the diagonal
// M(n, k, r, r). N_E and N_O sum M over r + s = 2p and r + s = 2p + 1.
//
// Every evaluator is total: outside the support 0 <= r, s <= n,
// 0 <= k <= n-1, n >= 1 the count is zero. Rational prefactors are cleared
// with exact_div, so a DivisibilityViolation means an identity has failed.

#include <cstdint>
#include <functional>
#include <vector>

#include "pathpairs/exactmath.hpp"

namespace pathpairs::closedform {

using Index = std::int64_t;

struct PairQuery {
  Index n = 0;
  Index k = 0;
  Index r = 0;
  Index s = 0;
};

struct DiagQuery {
  Index n = 0;
  Index k = 0;
  Index p = 0;
};

using MFunction = std::function<Integer(const PairQuery&)>;
using NkFunction = std::function<Integer(Index n, Index k, Index r)>;

bool in_support(const PairQuery& q);

/// M via the single-sum Lagrange-inversion formula for r < s, symmetry for
/// r > s and nk_value on the diagonal.
Integer m_value(const PairQuery& q);

/// N_k^{n,r}: 2(k+1)/(n-k-1) sum_i C(k,i) C(n-k+i-1, r) C(n-i-1, n-r) for
/// k <= n-2, and C(n, r) for k = n-1. Zero for k < 0.
Integer nk_value(Index n, Index k, Index r);

/// 2 M(n-1, 0, r-1, r); equals nk_value(n, 0, r).
Integer n0_via_m(Index n, Index r);

/// N_E(n, k, p) = n / (k+1) * N_k^{n,p}.
Integer ne_value(const DiagQuery& d);

/// N_O(n, k, p) = 2 [C(n-1, p)^2 - sum_{i=0}^{k-2} N_i^{n-1,p}].
Integer no_value(const DiagQuery& d);

/// Definitional sums of m_value over r + s = 2p (resp. 2p + 1).
Integer ne_def(const DiagQuery& d);
Integer no_def(const DiagQuery& d);

/// sum_p N_E(n,k,p) = sum_p N_O(n,k,p) = 2^(k+1) C(2n-k-2, n-1).
/// Requires 0 <= k <= n-1 (DomainError otherwise).
Integer row_sum(Index n, Index k);

/// sum_r N_k^{n,r} = 2^(k+1) (k+1) (2n-k-2)! / (n! (n-k-1)!).
/// Requires 0 <= k <= n-1.
Integer nk_row_sum(Index n, Index k);

/// Checks the recurrence with denominators cleared:
///   (n-k-1) k N_k^{n,r} = (n-2k)(k+1) N_{k-1}^{n,r}
///                         + k(k+1) (N_{k-2}^{n-1,r} + N_{k-2}^{n-1,r-1}).
/// Requires k >= 1 and n >= 1. The N route defaults to nk_value.
bool check_thm4(Index n, Index k, Index r);
bool check_thm4(Index n, Index k, Index r, const NkFunction& nk);

/// Coefficient of x^(l-c) y^m in (x+f)^a (y+f)^b (f/x)^c, where
/// f = (x+f)(y+f):
///   C(l+m-b-c-1, l-1) C(l+m-a-c-1, m-1) - C(l+m-b-c-1, l) C(l+m-a-c-1, m).
/// The degenerate Lagrange term l+m = a+b+c is the monomial x^a y^b (c = 0).
/// Requires a, b, c >= 0.
Integer lagrange_coeff(Index a, Index b, Index c, Index l, Index m);

/// All M(n, k, r, s) for one (n, k), 0 <= r, s <= n, evaluated on r <= s and
/// mirrored. Sweeps over N_E, N_O and completeness read from this instead of
/// re-evaluating the M route.
class EndpointTable {
 public:
  EndpointTable(Index n, Index k);
  EndpointTable(Index n, Index k, const MFunction& m);

  Index n() const { return n_; }
  Index k() const { return k_; }

  /// Zero outside 0 <= r, s <= n.
  const Integer& at(Index r, Index s) const;

  /// Sum over r + s = 2p, resp. r + s = 2p + 1.
  Integer even_sum(Index p) const;
  Integer odd_sum(Index p) const;

 private:
  Integer diagonal_sum(Index t) const;

  Index n_;
  Index k_;
  std::vector<Integer> values_;
};

}  // namespace pathpairs::closedform
