#pragma once

// Identity suite: every closed form is compared against the enumeration
// oracle, the generating-function expansions and the definitional sums over
// configurable parameter grids. Failures are reported as data.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pathpairs/closedform.hpp"
#include "pathpairs/exactmath.hpp"
#include "pathpairs/oracle.hpp"
#include "pathpairs/series.hpp"

namespace pathpairs::verify {

using closedform::Index;

/// The computation routes the suite compares. `standard()` wires the library
/// implementations; tests and the CLI substitute perturbed routes to prove
/// that a single wrong entry is caught.
struct Routes {
  closedform::MFunction m;
  closedform::NkFunction nk;
  std::function<Integer(const closedform::DiagQuery&)> ne;
  std::function<Integer(const closedform::DiagQuery&)> no;
  std::function<Integer(Index n, Index k)> row_sum;
  std::function<Integer(Index n, Index k)> nk_row_sum;
  std::function<Integer(Index n, Index r)> n0_via_m;
  std::function<Integer(Index a, Index b, Index c, Index l, Index m)> lagrange;
  std::function<oracle::OracleTable(int n)> oracle_table;
  std::function<series::BiSeries(int cap)> solve_f;
  std::function<series::BiSeries(const series::SeriesId&, int cap)> series;

  static Routes standard();
};

/// Route names accepted by `mutate`: m, nk, ne, no, rowsum, nkrowsum, n0,
/// lagrange, oracle, f, series.
const std::vector<std::string>& mutable_routes();

/// Copy of `base` where one route returns its value plus one at a single
/// fixed small in-support entry. DomainError for an unknown route name.
Routes mutate(Routes base, const std::string& route);

/// Known check names, in the order the default suite runs them.
const std::vector<std::string>& check_names();

struct CheckSpec {
  std::string name;
  int max_n = 0;           // closed-form grid: n in [1, max_n] (or [0, max_n])
  int oracle_ceiling = 0;  // enumeration grid: n in [1, oracle_ceiling]; 0 disables
  int cap = 0;             // truncation cap for series checks
};

struct SuiteBounds {
  int max_n = 25;
  int max_n_oracle = 8;
  int cap = 12;
};

/// Every known check, configured from the bounds.
std::vector<CheckSpec> default_suite(const SuiteBounds& bounds = {});

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status status);

struct Counterexample {
  std::vector<std::pair<std::string, Index>> params;
  std::string expected;
  std::string actual;
  std::pair<std::string, std::string> routes;
};

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  Status status = Status::Pass;
  std::optional<Counterexample> counterexample;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  /// True iff no check failed. Skipped checks (oracle disabled) do not count.
  bool passed() const;
  const CheckResult* find(const std::string& name) const;

  /// {"checks": [{name, instances, status, counterexample?}], "verdict"}
  nlohmann::json to_json() const;
  void write_text(std::ostream& out) const;
};

/// Associative and commutative: results are keyed and ordered by name;
/// instance counts add, failure wins, and the lexicographically smaller
/// counterexample is kept.
VerifyReport merge(const VerifyReport& a, const VerifyReport& b);

struct RunOptions {
  /// Checks run concurrently on up to this many threads.
  unsigned threads = 1;
};

/// Runs every spec; each check stops at its first counterexample. Unknown
/// check names raise DomainError.
VerifyReport run_suite(const std::vector<CheckSpec>& specs, const Routes& routes = Routes::standard(),
                       const RunOptions& options = {});

struct Discrepancy {
  int k = 0;
  int r = 0;
  int s = 0;
  Integer a;
  Integer b;
};

/// Entrywise comparison over k in [0, n+2], r, s in [-1, n+1], so that
/// disagreement about zero extension outside the support is also reported.
std::vector<Discrepancy> diff_tables(const oracle::OracleTable& a, const oracle::OracleTable& b);

/// M(n, k, r, s) from a route, tabulated in oracle layout.
oracle::OracleTable closedform_table(int n, const closedform::MFunction& m = closedform::m_value);

}  // namespace pathpairs::verify
