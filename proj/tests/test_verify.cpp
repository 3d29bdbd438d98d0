#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "pathpairs/verify.hpp"

using namespace pathpairs;
using namespace pathpairs::verify;

namespace {

std::vector<CheckSpec> small_suite() { return default_suite({10, 5, 8}); }

Index param(const Counterexample& c, const std::string& name) {
  for (const auto& [key, value] : c.params)
    if (key == name) return value;
  FAIL("missing parameter " << name);
  return -1;
}

// The N_k formula with the divisor n-k in place of n-k-1.
Integer nk_wrong_divisor(Index n, Index k, Index r) {
  if (k < 0 || k > n - 1 || r < 0 || r > n) return 0;
  if (k == n - 1) return binom(n, r);
  Integer sum = 0;
  for (Index i = 0; i <= k; ++i) sum += binom(k, i) * binom(n - k + i - 1, r) * binom(n - i - 1, n - r);
  return exact_div(2 * (k + 1) * sum, Integer(static_cast<long>(n - k)));
}

CheckResult named(const std::string& name, std::size_t instances, Status status,
                  std::optional<Counterexample> c = std::nullopt) {
  return {name, instances, status, std::move(c)};
}

}  // namespace

TEST_CASE("default suite passes on small bounds") {
  const auto report = run_suite(small_suite());
  CHECK(report.passed());
  REQUIRE(report.checks.size() == check_names().size());
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.status == Status::Pass);
    CHECK(c.instances > 0);
    CHECK_FALSE(c.counterexample.has_value());
  }
}

TEST_CASE("empty spec list gives an empty report") {
  const auto report = run_suite({});
  CHECK(report.checks.empty());
  CHECK(report.passed());
}

TEST_CASE("unknown checks and negative bounds are rejected") {
  CHECK_THROWS_AS(run_suite({{"no-such-check", 3, 0, 0}}), DomainError);
  CHECK_THROWS_AS(run_suite({{"thm1", -1, 0, 0}}), DomainError);
  CHECK_THROWS_AS(mutate(Routes::standard(), "bogus"), DomainError);
}

TEST_CASE("every mutated route is caught") {
  for (const auto& route : mutable_routes()) {
    CAPTURE(route);
    const auto report = run_suite(small_suite(), mutate(Routes::standard(), route));
    CHECK_FALSE(report.passed());
    const bool has_counterexample = std::any_of(report.checks.begin(), report.checks.end(), [](const auto& c) {
      return c.status == Status::Fail && c.counterexample.has_value();
    });
    CHECK(has_counterexample);
  }
}

TEST_CASE("off-by-one divisor in N_k is found at small n") {
  Routes routes = Routes::standard();
  routes.nk = nk_wrong_divisor;
  routes.ne = [](const closedform::DiagQuery& d) -> Integer {
    return exact_div(d.n * nk_wrong_divisor(d.n, d.k, d.p), Integer(static_cast<long>(d.k + 1)));
  };
  const auto report = run_suite({{"thm1", 12, 0, 0}, {"nk-row-sum", 12, 0, 0}}, routes);
  CHECK_FALSE(report.passed());
  bool found = false;
  for (const char* name : {"thm1", "nk-row-sum"}) {
    const CheckResult* c = report.find(name);
    REQUIRE(c != nullptr);
    if (c->status == Status::Fail && c->counterexample) {
      CHECK(param(*c->counterexample, "n") <= 5);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("disabled oracle checks are skipped") {
  const auto report = run_suite(default_suite({6, 0, 6}));
  CHECK(report.passed());
  for (const char* name : {"oracle-mass", "oracle-symmetry", "thm5-vs-oracle", "nk-vs-oracle", "f-vs-oracle"}) {
    const CheckResult* c = report.find(name);
    REQUIRE(c != nullptr);
    CHECK(c->status == Status::Skipped);
    CHECK(c->instances == 0);
  }
  CHECK(report.find("thm1")->instances > 0);
}

TEST_CASE("thread count does not change the report") {
  const auto one = run_suite(small_suite(), Routes::standard(), {1});
  const auto four = run_suite(small_suite(), Routes::standard(), {4});
  CHECK(one.to_json() == four.to_json());
  const auto bad = mutate(Routes::standard(), "nk");
  CHECK(run_suite(small_suite(), bad, {1}).to_json() == run_suite(small_suite(), bad, {3}).to_json());
}

TEST_CASE("report serialization") {
  const auto report = run_suite({{"thm3", 6, 0, 0}, {"completeness", 4, 0, 0}});
  const auto doc = report.to_json();
  CHECK(doc["verdict"] == "pass");
  REQUIRE(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["name"] == "thm3");
  CHECK(doc["checks"][0]["status"] == "pass");
  CHECK(doc["checks"][0]["instances"].get<std::size_t>() > 0);
  CHECK_FALSE(doc["checks"][0].contains("counterexample"));

  std::ostringstream text;
  report.write_text(text);
  CHECK(text.str().find("PASS") != std::string::npos);
  CHECK(text.str().find("verdict: pass") != std::string::npos);

  const auto failing = run_suite({{"thm3", 6, 0, 0}}, mutate(Routes::standard(), "rowsum"));
  const auto bad = failing.to_json();
  CHECK(bad["verdict"] == "fail");
  REQUIRE(bad["checks"][0].contains("counterexample"));
  const auto& c = bad["checks"][0]["counterexample"];
  CHECK(c.contains("params"));
  CHECK(c["expected"] != c["actual"]);
  CHECK(c.contains("routes"));
}

TEST_CASE("merge is associative and commutative") {
  const Counterexample small{{{"n", 2}}, "1", "2", {"a", "b"}};
  const Counterexample large{{{"n", 7}}, "1", "2", {"a", "b"}};
  const VerifyReport a{{named("thm1", 3, Status::Pass), named("thm2", 1, Status::Fail, large)}};
  const VerifyReport b{{named("thm2", 4, Status::Fail, small)}};
  const VerifyReport c{{named("thm1", 5, Status::Fail, large), named("thm3", 2, Status::Pass)}};

  const auto left = merge(merge(a, b), c);
  const auto right = merge(a, merge(b, c));
  CHECK(left.to_json() == right.to_json());
  CHECK(merge(a, b).to_json() == merge(b, a).to_json());
  CHECK(merge(c, a).to_json() == merge(a, c).to_json());

  const CheckResult* thm2 = left.find("thm2");
  REQUIRE(thm2 != nullptr);
  CHECK(thm2->instances == 5);
  CHECK(thm2->status == Status::Fail);
  CHECK(param(*thm2->counterexample, "n") == 2);
  CHECK(left.find("thm1")->status == Status::Fail);
  CHECK(left.find("thm1")->instances == 8);
  CHECK_FALSE(left.passed());
}

TEST_CASE("diff_tables") {
  const auto oracle3 = oracle::brute_table(3);
  CHECK(diff_tables(oracle3, oracle3).empty());
  CHECK(diff_tables(oracle3, closedform_table(3)).empty());

  auto perturbed = closedform_table(3);
  perturbed.set(1, 1, 2, perturbed.at(1, 1, 2) + 1);
  const auto diffs = diff_tables(oracle3, perturbed);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].k == 1);
  CHECK(diffs[0].r == 1);
  CHECK(diffs[0].s == 2);
  CHECK(diffs[0].b == diffs[0].a + 1);

  for (int n = 1; n <= 7; ++n) CHECK(diff_tables(oracle::brute_table(n), closedform_table(n)).empty());
}
