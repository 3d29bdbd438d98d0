#include "pathpairs/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

namespace pathpairs::verify {

namespace {

using closedform::DiagQuery;
using closedform::EndpointTable;
using closedform::PairQuery;
using series::BiSeries;
using series::SeriesId;
using Params = std::vector<std::pair<std::string, Index>>;
using Values = std::pair<Integer, Integer>;

// One SeriesBuilder per cap, shared by every copy of the standard routes.
class BuilderCache {
 public:
  std::shared_ptr<const series::SeriesBuilder> get(int cap) {
    std::lock_guard lock(mutex_);
    auto& slot = builders_[cap];
    if (!slot) slot = std::make_shared<const series::SeriesBuilder>(cap);
    return slot;
  }

 private:
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const series::SeriesBuilder>> builders_;
};

// Collects instances of one check and keeps the first counterexample.
class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  bool failed() const { return result_.counterexample.has_value(); }

  template <class Eval>
  bool equal(const Params& params, const char* route_a, const char* route_b, Eval&& eval) {
    ++result_.instances;
    try {
      const auto [expected, actual] = eval();
      if (expected == actual) return true;
      fail(params, expected.get_str(), actual.get_str(), route_a, route_b);
    } catch (const std::exception& e) {
      fail(params, "a value", std::string("error: ") + e.what(), route_a, route_b);
    }
    return false;
  }

  template <class Pred>
  bool holds(const Params& params, const char* identity, Pred&& pred) {
    ++result_.instances;
    try {
      if (pred()) return true;
      fail(params, "holds", "violated", identity, identity);
    } catch (const std::exception& e) {
      fail(params, "holds", std::string("error: ") + e.what(), identity, identity);
    }
    return false;
  }

  void error(const std::string& what) {
    fail({}, "check completes", std::string("error: ") + what, "check setup", "check setup");
  }

  CheckResult finish() && {
    if (!failed() && result_.instances == 0) {
      result_.counterexample = Counterexample{{}, "at least one instance", "empty grid", {"", ""}};
    }
    result_.status = failed() ? Status::Fail : Status::Pass;
    return std::move(result_);
  }

 private:
  void fail(const Params& params, std::string expected, std::string actual, const char* route_a,
            const char* route_b) {
    result_.counterexample =
        Counterexample{params, std::move(expected), std::move(actual), {route_a, route_b}};
  }

  CheckResult result_;
};

// Shared, lazily filled state of one run. Safe for concurrent checks.
class Context {
 public:
  Context(const Routes& routes, std::map<int, oracle::OracleTable> oracle)
      : routes_(routes), oracle_(std::move(oracle)) {}

  const Routes& routes() const { return routes_; }

  const oracle::OracleTable& oracle(int n) const { return oracle_.at(n); }

  std::shared_ptr<const EndpointTable> endpoints(Index n, Index k) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = tables_.find({n, k}); it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<const EndpointTable>(n, k, routes_.m);
    std::lock_guard lock(mutex_);
    return tables_.try_emplace({n, k}, std::move(table)).first->second;
  }

 private:
  const Routes& routes_;
  std::map<int, oracle::OracleTable> oracle_;
  std::mutex mutex_;
  std::map<std::pair<Index, Index>, std::shared_ptr<const EndpointTable>> tables_;
};

using CheckFn = void (*)(const CheckSpec&, Context&, Recorder&);

Integer square(const Integer& v) { return v * v; }

// ---- enumeration oracle --------------------------------------------------

void check_oracle_mass(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  for (int n = 0; n <= spec.oracle_ceiling; ++n) {
    const auto& table = ctx.oracle(n);
    if (!rec.equal({{"n", n}}, "4^n", "oracle", [&] {
          return Values{ipow(4, static_cast<unsigned>(n)), table.total_mass()};
        })) {
      return;
    }
    for (int r = 0; r <= n; ++r) {
      for (int s = 0; s <= n; ++s) {
        if (!rec.equal({{"n", n}, {"r", r}, {"s", s}}, "C(n,r)C(n,s)", "oracle sum over k", [&] {
              Integer total = 0;
              for (int k = 0; k <= table.max_k(); ++k) total += table.at(k, r, s);
              return Values{binom(n, r) * binom(n, s), total};
            })) {
          return;
        }
      }
    }
  }
}

void check_oracle_symmetry(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  for (int n = 1; n <= spec.oracle_ceiling; ++n) {
    const auto& table = ctx.oracle(n);
    for (int r = 0; r <= n; ++r) {
      if (!rec.equal({{"n", n}, {"r", r}}, "C(n,r)", "oracle k=n-1 diagonal",
                     [&] { return Values{binom(n, r), table.at(n - 1, r, r)}; })) {
        return;
      }
    }
    for (int k = 0; k <= table.max_k(); ++k) {
      for (int r = 0; r <= n; ++r) {
        for (int s = 0; s <= n; ++s) {
          const Params params{{"n", n}, {"k", k}, {"r", r}, {"s", s}};
          if (!rec.equal(params, "oracle(r,s)", "oracle(s,r)",
                         [&] { return Values{table.at(k, r, s), table.at(k, s, r)}; }) ||
              !rec.equal(params, "oracle(r,s)", "oracle(n-r,n-s)",
                         [&] { return Values{table.at(k, r, s), table.at(k, n - r, n - s)}; })) {
            return;
          }
        }
      }
    }
  }
}

void check_thm5_vs_oracle(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& m = ctx.routes().m;
  for (int n = 1; n <= spec.oracle_ceiling; ++n) {
    const auto& table = ctx.oracle(n);
    for (int k = 0; k <= n + 2; ++k) {
      for (int r = -1; r <= n + 1; ++r) {
        for (int s = -1; s <= n + 1; ++s) {
          if (!rec.equal({{"n", n}, {"k", k}, {"r", r}, {"s", s}}, "oracle", "m_value",
                         [&] { return Values{table.at(k, r, s), m({n, k, r, s})}; })) {
            return;
          }
        }
      }
    }
  }
}

void check_nk_vs_oracle(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& nk = ctx.routes().nk;
  for (int n = 1; n <= spec.oracle_ceiling; ++n) {
    const auto& table = ctx.oracle(n);
    for (int k = 0; k <= n + 2; ++k) {
      for (int r = -1; r <= n + 1; ++r) {
        if (!rec.equal({{"n", n}, {"k", k}, {"r", r}}, "oracle", "nk_value",
                       [&] { return Values{table.at(k, r, r), nk(n, k, r)}; })) {
          return;
        }
      }
    }
  }
}

void check_f_vs_oracle(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const BiSeries f = ctx.routes().solve_f(spec.cap);
  // x^(r+1) y^(n-r) in f counts one-apart non-intersecting pairs M(n, 0, r, r+1).
  for (int n = 1; n <= std::min(spec.oracle_ceiling, spec.cap - 1); ++n) {
    const auto& table = ctx.oracle(n);
    for (int r = 0; r < n; ++r) {
      if (!rec.equal({{"n", n}, {"r", r}}, "oracle", "f coefficient",
                     [&] { return Values{table.at(0, r, r + 1), f.coefficient(r + 1, n - r)}; })) {
        return;
      }
    }
  }
}

// ---- closed forms ----------------------------------------------------------

void check_nk_boundary(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& nk = ctx.routes().nk;
  for (int n = 1; n <= spec.max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      if (!rec.equal({{"n", n}, {"r", r}}, "C(n,r)", "nk_value(n,n-1,r)",
                     [&] { return Values{binom(n, r), nk(n, n - 1, r)}; })) {
        return;
      }
    }
  }
}

void check_symmetry(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& m = ctx.routes().m;
  for (Index n = 1; n <= spec.max_n; ++n) {
    for (Index k = 0; k <= n + 2; ++k) {
      for (Index r = -1; r <= n + 1; ++r) {
        for (Index s = -1; s <= n + 1; ++s) {
          const Params params{{"n", n}, {"k", k}, {"r", r}, {"s", s}};
          const Integer value = m({n, k, r, s});
          if (!rec.equal(params, "m(r,s)", "m(s,r)",
                         [&] { return Values{value, m({n, k, s, r})}; }) ||
              !rec.equal(params, "m(r,s)", "m(n-r,n-s)",
                         [&] { return Values{value, m({n, k, n - r, n - s})}; })) {
            return;
          }
        }
      }
    }
  }
}

void check_completeness(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  for (Index n = 1; n <= spec.max_n; ++n) {
    std::vector<std::shared_ptr<const EndpointTable>> tables;
    for (Index k = 0; k <= n - 1; ++k) tables.push_back(ctx.endpoints(n, k));
    for (Index r = 0; r <= n; ++r) {
      for (Index s = 0; s <= n; ++s) {
        if (!rec.equal({{"n", n}, {"r", r}, {"s", s}}, "C(n,r)C(n,s)", "sum_k m_value", [&] {
              Integer total = 0;
              for (const auto& t : tables) total += t->at(r, s);
              return Values{binom(n, r) * binom(n, s), total};
            })) {
          return;
        }
      }
    }
  }
}

void check_n0_relation(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& routes = ctx.routes();
  // Starts at n = 2: for n = 1 the single steps have no interior, N_0^{1,r} = 1,
  // while the length-0 pairs on the right are empty.
  for (Index n = 2; n <= spec.max_n; ++n) {
    for (Index r = -1; r <= n + 1; ++r) {
      if (!rec.equal({{"n", n}, {"r", r}}, "nk_value(n,0,r)", "n0_via_m",
                     [&] { return Values{routes.nk(n, 0, r), routes.n0_via_m(n, r)}; })) {
        return;
      }
    }
  }
}

void check_thm1(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& routes = ctx.routes();
  for (Index n = 1; n <= spec.max_n; ++n) {
    for (Index k = 0; k <= n + 2; ++k) {
      const auto table = ctx.endpoints(n, k);
      for (Index p = -1; p <= n + 1; ++p) {
        const Params params{{"n", n}, {"k", k}, {"p", p}};
        if (!rec.equal(params, "ne_def", "ne_value",
                       [&] { return Values{table->even_sum(p), routes.ne({n, k, p})}; })) {
          return;
        }
        if (k <= n - 1 && !rec.holds(params, "(k+1) | n N_k^{n,p}", [&] {
              const Integer scaled = n * routes.nk(n, k, p);
              return mpz_divisible_ui_p(scaled.get_mpz_t(), static_cast<unsigned long>(k + 1)) != 0;
            })) {
          return;
        }
      }
    }
  }
}

void check_thm2(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& routes = ctx.routes();
  for (Index n = 1; n <= spec.max_n; ++n) {
    for (Index k = 0; k <= n + 2; ++k) {
      const auto table = ctx.endpoints(n, k);
      for (Index p = -1; p <= n + 1; ++p) {
        const Params params{{"n", n}, {"k", k}, {"p", p}};
        if (!rec.equal(params, "no_def", "no_value",
                       [&] { return Values{table->odd_sum(p), routes.no({n, k, p})}; })) {
          return;
        }
        if (k > n - 1) continue;
        if (!rec.equal(params, "2 C(n-1,p)^2", "N_O + 2 sum_{i<=k-2} N_i^{n-1,p}", [&] {
              Integer rhs = routes.no({n, k, p});
              for (Index i = 0; i <= k - 2; ++i) rhs += 2 * routes.nk(n - 1, i, p);
              return Values{Integer(2 * square(binom(n - 1, p))), rhs};
            })) {
          return;
        }
      }
    }
  }
}

void check_thm3(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& routes = ctx.routes();
  for (Index n = 1; n <= spec.max_n; ++n) {
    for (Index k = 0; k <= n - 1; ++k) {
      const Params params{{"n", n}, {"k", k}};
      const auto sum_over_p = [&](const auto& fn) {
        Integer total = 0;
        for (Index p = 0; p <= n; ++p) total += fn(DiagQuery{n, k, p});
        return total;
      };
      if (!rec.equal(params, "row_sum", "sum_p ne_value",
                     [&] { return Values{routes.row_sum(n, k), sum_over_p(routes.ne)}; }) ||
          !rec.equal(params, "row_sum", "sum_p no_value",
                     [&] { return Values{routes.row_sum(n, k), sum_over_p(routes.no)}; })) {
        return;
      }
    }
  }
}

void check_nk_row_sum(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& routes = ctx.routes();
  for (Index n = 1; n <= spec.max_n; ++n) {
    for (Index k = 0; k <= n - 1; ++k) {
      if (!rec.equal({{"n", n}, {"k", k}}, "nk_row_sum", "sum_r nk_value", [&] {
            Integer total = 0;
            for (Index r = 0; r <= n; ++r) total += routes.nk(n, k, r);
            return Values{routes.nk_row_sum(n, k), total};
          })) {
        return;
      }
    }
  }
}

void check_thm4(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& nk = ctx.routes().nk;
  for (Index n = 1; n <= spec.max_n; ++n) {
    for (Index k = 1; k <= n - 1; ++k) {
      for (Index r = -1; r <= n + 1; ++r) {
        if (!rec.holds({{"n", n}, {"k", k}, {"r", r}}, "cleared N_k recurrence",
                       [&] { return closedform::check_thm4(n, k, r, nk); })) {
          return;
        }
      }
    }
  }
}

// ---- generating functions --------------------------------------------------

// Compares every coefficient x^i y^j (i + j <= cap) with a closed form in
// (n, r) = (i + j, i).
template <class Closed>
bool compare_series(Recorder& rec, const BiSeries& s, Index k, const char* series_name,
                    const char* closed_name, Closed&& closed) {
  for (int n = 0; n <= s.cap(); ++n) {
    for (int r = 0; r <= n; ++r) {
      if (!rec.equal({{"k", k}, {"n", n}, {"r", r}}, closed_name, series_name,
                     [&] { return Values{closed(n, r), s.coefficient(r, n - r)}; })) {
        return false;
      }
    }
  }
  return true;
}

void check_thm5_vs_series(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& routes = ctx.routes();
  for (Index k = 0; k <= spec.cap; ++k) {
    for (Index j = 1; j <= spec.cap; ++j) {
      const BiSeries s = routes.series(SeriesId::m_diag(static_cast<int>(k), static_cast<int>(j)), spec.cap);
      for (int n = 0; n <= s.cap(); ++n) {
        for (int r = 0; r <= n; ++r) {
          if (!rec.equal({{"n", n}, {"k", k}, {"r", r}, {"s", r + j}}, "m_value", "mdiag coefficient",
                         [&] { return Values{routes.m({n, k, r, r + j}), s.coefficient(r, n - r)}; })) {
            return;
          }
        }
      }
    }
  }
}

void check_series_vs_closedform(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& routes = ctx.routes();
  for (int k = 0; k <= spec.cap; ++k) {
    const bool ok =
        compare_series(rec, routes.series(SeriesId::u0_pow(k + 1), spec.cap), k, "u0pow(k+1)",
                       "nk_value", [&](Index n, Index r) { return routes.nk(n, k, r); }) &&
        compare_series(rec, routes.series(SeriesId::ne(k), spec.cap), k, "ne series", "ne_value",
                       [&](Index n, Index p) { return routes.ne({n, k, p}); }) &&
        compare_series(rec, routes.series(SeriesId::no(k), spec.cap), k, "no series", "no_value",
                       [&](Index n, Index p) { return routes.no({n, k, p}); });
    if (!ok) return;
  }
}

bool expect_zero_series(Recorder& rec, const BiSeries& s, const char* identity) {
  for (int d = 0; d <= s.cap(); ++d) {
    for (int i = 0; i <= d; ++i) {
      if (!rec.equal({{"i", i}, {"j", d - i}}, "0", identity,
                     [&] { return Values{Integer(0), s.coefficient(i, d - i)}; })) {
        return false;
      }
    }
  }
  return true;
}

struct Basics {
  BiSeries one, x, y, xy;
  explicit Basics(int cap)
      : one(BiSeries::constant(1, cap)),
        x(BiSeries::x(cap)),
        y(BiSeries::y(cap)),
        xy(BiSeries::monomial(1, 1, 1, cap)) {}
};

void check_series_functional_eq(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const BiSeries f = ctx.routes().solve_f(spec.cap);
  const Basics b(spec.cap);
  if (!expect_zero_series(rec, f - b.xy - (b.x + b.y) * f - f * f, "f - xy - (x+y)f - f^2")) return;
  if (!expect_zero_series(rec, f - series::swap_xy(f), "f(x,y) - f(y,x)")) return;
  for (int d = 0; d <= spec.cap; ++d) {
    if (!rec.equal({{"i", 0}, {"j", d}}, "0", "f coefficient on the axes", [&] {
          return Values{Integer(0), Integer(f.coefficient(0, d) + f.coefficient(d, 0))};
        })) {
      return;
    }
  }
}

void check_series_quadratic(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const BiSeries f = ctx.routes().solve_f(spec.cap);
  const Basics b(spec.cap);
  expect_zero_series(rec, f * f - (f - b.x * f - b.y * f - b.xy), "f^2 - (f - xf - yf - xy)");
}

void check_series_derivative(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const BiSeries f = ctx.routes().solve_f(spec.cap);
  const Basics b(spec.cap);
  const BiSeries denom = b.one - b.x - b.y - series::scale(f, 2);
  if (!expect_zero_series(rec, denom * series::partial_x(f) - (b.y + f), "(1-x-y-2f) f_x - (y+f)")) {
    return;
  }
  expect_zero_series(rec, denom * series::partial_y(f) - (b.x + f), "(1-x-y-2f) f_y - (x+f)");
}

void check_series_reciprocal(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const BiSeries f = ctx.routes().solve_f(spec.cap);
  const Basics b(spec.cap);
  const BiSeries denom = b.one - b.x - b.y - series::scale(f, 2);
  expect_zero_series(rec, f * denom - (b.xy - f * f), "f (1-x-y-2f) - (xy - f^2)");
}

void check_square_binom(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& routes = ctx.routes();
  if (!compare_series(rec, routes.series(SeriesId::square_binom(), spec.cap), 0, "1/(1-u0)",
                      "C(n,p)^2", [](Index n, Index p) { return square(binom(n, p)); })) {
    return;
  }
  compare_series(rec, routes.series(SeriesId::square_binom_shifted(), spec.cap), 0, "yf/(xy-f^2)",
                 "C(n-1,p)^2",
                 [](Index n, Index p) { return n == 0 ? Integer(0) : square(binom(n - 1, p)); });
}

void check_lagrange_vs_series(const CheckSpec& spec, Context& ctx, Recorder& rec) {
  const auto& routes = ctx.routes();
  const int cap = spec.cap;
  const BiSeries f_wide = routes.solve_f(cap + 1);
  const BiSeries f = f_wide.truncated(cap);
  const BiSeries x_plus_f = BiSeries::x(cap) + f;
  const BiSeries y_plus_f = BiSeries::y(cap) + f;
  const BiSeries f_over_x = series::div_monomial_x(f_wide);
  constexpr int kMaxExponent = 4;
  for (int a = 0; a <= kMaxExponent; ++a) {
    for (int b = 0; b <= kMaxExponent; ++b) {
      for (int c = 0; c <= kMaxExponent; ++c) {
        const BiSeries s = series::pow(x_plus_f, a) * series::pow(y_plus_f, b) * series::pow(f_over_x, c);
        for (int d = 0; d <= cap; ++d) {
          for (int i = 0; i <= d; ++i) {
            const int j = d - i;
            if (!rec.equal({{"a", a}, {"b", b}, {"c", c}, {"l", i + c}, {"m", j}}, "series coefficient",
                           "lagrange_coeff", [&] {
                             return Values{s.coefficient(i, j), routes.lagrange(a, b, c, i + c, j)};
                           })) {
              return;
            }
          }
        }
      }
    }
  }
}

struct CheckEntry {
  const char* name;
  CheckFn fn;
  bool needs_oracle;
};

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = {
      {"oracle-mass", check_oracle_mass, true},
      {"oracle-symmetry", check_oracle_symmetry, true},
      {"thm5-vs-oracle", check_thm5_vs_oracle, true},
      {"nk-vs-oracle", check_nk_vs_oracle, true},
      {"f-vs-oracle", check_f_vs_oracle, true},
      {"nk-boundary", check_nk_boundary, false},
      {"symmetry", check_symmetry, false},
      {"completeness", check_completeness, false},
      {"n0-relation", check_n0_relation, false},
      {"thm1", check_thm1, false},
      {"thm2", check_thm2, false},
      {"thm3", check_thm3, false},
      {"nk-row-sum", check_nk_row_sum, false},
      {"thm4", check_thm4, false},
      {"thm5-vs-series", check_thm5_vs_series, false},
      {"series-vs-closedform", check_series_vs_closedform, false},
      {"series-functional-eq", check_series_functional_eq, false},
      {"series-quadratic", check_series_quadratic, false},
      {"series-derivative", check_series_derivative, false},
      {"series-reciprocal", check_series_reciprocal, false},
      {"square-binom", check_square_binom, false},
      {"lagrange-vs-series", check_lagrange_vs_series, false},
  };
  return entries;
}

const CheckEntry& lookup(const std::string& name) {
  for (const auto& entry : registry()) {
    if (name == entry.name) return entry;
  }
  throw DomainError("unknown check '" + name + "'");
}

nlohmann::json counterexample_json(const Counterexample& cx) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : cx.params) params[key] = value;
  return {{"params", params},
          {"expected", cx.expected},
          {"actual", cx.actual},
          {"routes", {cx.routes.first, cx.routes.second}}};
}

}  // namespace

Routes Routes::standard() {
  Routes routes;
  routes.m = closedform::m_value;
  routes.nk = closedform::nk_value;
  routes.ne = closedform::ne_value;
  routes.no = closedform::no_value;
  routes.row_sum = closedform::row_sum;
  routes.nk_row_sum = closedform::nk_row_sum;
  routes.n0_via_m = closedform::n0_via_m;
  routes.lagrange = closedform::lagrange_coeff;
  routes.oracle_table = [](int n) { return oracle::brute_table(n, oracle::kMaxPathLength); };
  routes.solve_f = series::solve_f;
  auto builders = std::make_shared<BuilderCache>();
  routes.series = [builders](const SeriesId& id, int cap) { return builders->get(cap)->build(id); };
  return routes;
}

const std::vector<std::string>& mutable_routes() {
  static const std::vector<std::string> names = {"m",  "nk",       "ne",     "no", "rowsum", "nkrowsum",
                                                 "n0", "lagrange", "oracle", "f",  "series"};
  return names;
}

Routes mutate(Routes base, const std::string& route) {
  Routes out = base;
  if (route == "m") {
    out.m = [inner = base.m](const PairQuery& q) -> Integer {
      Integer v = inner(q);
      if (q.n == 3 && q.k == 0 && q.r == 1 && q.s == 2) v += 1;
      return v;
    };
  } else if (route == "nk") {
    out.nk = [inner = base.nk](Index n, Index k, Index r) -> Integer {
      return inner(n, k, r) + ((n == 3 && k == 1 && r == 1) ? 1 : 0);
    };
  } else if (route == "ne" || route == "no") {
    auto& slot = route == "ne" ? out.ne : out.no;
    slot = [inner = route == "ne" ? base.ne : base.no](const DiagQuery& d) -> Integer {
      return inner(d) + ((d.n == 3 && d.k == 1 && d.p == 1) ? 1 : 0);
    };
  } else if (route == "rowsum" || route == "nkrowsum") {
    auto& slot = route == "rowsum" ? out.row_sum : out.nk_row_sum;
    slot = [inner = route == "rowsum" ? base.row_sum : base.nk_row_sum](Index n, Index k) -> Integer {
      return inner(n, k) + ((n == 3 && k == 1) ? 1 : 0);
    };
  } else if (route == "n0") {
    out.n0_via_m = [inner = base.n0_via_m](Index n, Index r) -> Integer {
      return inner(n, r) + ((n == 3 && r == 1) ? 1 : 0);
    };
  } else if (route == "lagrange") {
    out.lagrange = [inner = base.lagrange](Index a, Index b, Index c, Index l, Index m) -> Integer {
      return inner(a, b, c, l, m) + ((a == 0 && b == 0 && c == 1 && l == 2 && m == 2) ? 1 : 0);
    };
  } else if (route == "oracle") {
    out.oracle_table = [inner = base.oracle_table](int n) {
      auto table = inner(n);
      if (n == 3) table.set(0, 1, 2, table.at(0, 1, 2) + 1);
      return table;
    };
  } else if (route == "f") {
    out.solve_f = [inner = base.solve_f](int cap) {
      auto f = inner(cap);
      if (cap >= 4) f.set(2, 2, f.coefficient(2, 2) + 1);
      return f;
    };
  } else if (route == "series") {
    out.series = [inner = base.series](const SeriesId& id, int cap) {
      auto s = inner(id, cap);
      if (cap >= 2) s.set(1, 1, s.coefficient(1, 1) + 1);
      return s;
    };
  } else {
    throw DomainError("unknown route '" + route + "'");
  }
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

std::vector<CheckSpec> default_suite(const SuiteBounds& bounds) {
  std::vector<CheckSpec> specs;
  for (const auto& name : check_names()) {
    specs.push_back({name, bounds.max_n, bounds.max_n_oracle, bounds.cap});
  }
  return specs;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == Status::Fail; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item = {{"name", c.name}, {"instances", c.instances}, {"status", verify::to_string(c.status)}};
    if (c.counterexample) item["counterexample"] = counterexample_json(*c.counterexample);
    list.push_back(std::move(item));
  }
  return {{"checks", std::move(list)}, {"verdict", passed() ? "pass" : "fail"}};
}

void VerifyReport::write_text(std::ostream& out) const {
  for (const auto& c : checks) {
    const char* tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
    out << tag << "  " << std::left << std::setw(22) << c.name << std::right << std::setw(9)
        << c.instances << " instances";
    if (c.status == Status::Skipped) out << "  (oracle disabled)";
    if (c.counterexample) {
      const auto& cx = *c.counterexample;
      out << "\n      at";
      for (const auto& [key, value] : cx.params) out << ' ' << key << '=' << value;
      out << ": " << cx.routes.first << " -> " << cx.expected << ", " << cx.routes.second << " -> "
          << cx.actual;
    }
    out << '\n';
  }
  out << "verdict: " << (passed() ? "pass" : "fail") << '\n';
}

VerifyReport merge(const VerifyReport& a, const VerifyReport& b) {
  std::map<std::string, CheckResult> merged;
  for (const auto* report : {&a, &b}) {
    for (const auto& c : report->checks) {
      auto [it, fresh] = merged.try_emplace(c.name, c);
      if (fresh) continue;
      CheckResult& acc = it->second;
      acc.instances += c.instances;
      if (c.status == Status::Fail || acc.status == Status::Fail) {
        acc.status = Status::Fail;
      } else if (c.status == Status::Pass) {
        acc.status = Status::Pass;
      }
      if (c.counterexample &&
          (!acc.counterexample ||
           counterexample_json(*c.counterexample).dump() < counterexample_json(*acc.counterexample).dump())) {
        acc.counterexample = c.counterexample;
      }
    }
  }
  VerifyReport out;
  for (auto& [name, result] : merged) out.checks.push_back(std::move(result));
  return out;
}

VerifyReport run_suite(const std::vector<CheckSpec>& specs, const Routes& routes, const RunOptions& options) {
  std::vector<const CheckEntry*> entries;
  int oracle_max = -1;
  for (const auto& spec : specs) {
    if (spec.max_n < 0 || spec.oracle_ceiling < 0 || spec.cap < 0) {
      throw DomainError("check '" + spec.name + "': bounds must be nonnegative");
    }
    const auto& entry = lookup(spec.name);
    entries.push_back(&entry);
    if (entry.needs_oracle && spec.oracle_ceiling > 0) oracle_max = std::max(oracle_max, spec.oracle_ceiling);
  }

  std::map<int, oracle::OracleTable> tables;
  for (int n = 0; n <= oracle_max; ++n) tables.emplace(n, routes.oracle_table(n));
  Context ctx(routes, std::move(tables));

  VerifyReport report;
  report.checks.resize(specs.size());
  auto run_one = [&](std::size_t i) {
    if (entries[i]->needs_oracle && specs[i].oracle_ceiling == 0) {
      report.checks[i] = CheckResult{specs[i].name, 0, Status::Skipped, std::nullopt};
      return;
    }
    Recorder rec(specs[i].name);
    try {
      entries[i]->fn(specs[i], ctx, rec);
    } catch (const std::exception& e) {
      rec.error(e.what());
    }
    report.checks[i] = std::move(rec).finish();
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(specs.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) run_one(i);
      });
    }
  }
  return report;
}

std::vector<Discrepancy> diff_tables(const oracle::OracleTable& a, const oracle::OracleTable& b) {
  if (a.n() != b.n()) throw DomainError("diff_tables: tables have different n");
  const int n = a.n();
  std::vector<Discrepancy> out;
  for (int k = 0; k <= n + 2; ++k) {
    for (int r = -1; r <= n + 1; ++r) {
      for (int s = -1; s <= n + 1; ++s) {
        Integer va = a.at(k, r, s);
        Integer vb = b.at(k, r, s);
        if (va != vb) out.push_back({k, r, s, std::move(va), std::move(vb)});
      }
    }
  }
  return out;
}

oracle::OracleTable closedform_table(int n, const closedform::MFunction& m) {
  oracle::OracleTable table(n);
  for (int k = 0; k <= table.max_k(); ++k) {
    for (int r = 0; r <= n; ++r) {
      for (int s = 0; s <= n; ++s) table.set(k, r, s, m({n, k, r, s}));
    }
  }
  return table;
}

}  // namespace pathpairs::verify
