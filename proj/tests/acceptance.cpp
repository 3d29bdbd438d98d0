// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Usage: acceptance <path-to-pathpairs-binary>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pathpairs/verify.hpp"

using namespace pathpairs;
using namespace pathpairs::verify;

namespace {

constexpr int kOracleN = 9;
constexpr int kClosedN = 40;
constexpr int kCap = 14;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Runs the named checks and requires each to pass with a nonempty grid.
Outcome suite(const std::vector<CheckSpec>& specs) {
  const auto report = run_suite(specs);
  Outcome o;
  std::ostringstream detail;
  for (const auto& c : report.checks) {
    const bool ok = c.status == Status::Pass && c.instances > 0;
    o.pass = o.pass && ok;
    detail << (detail.tellp() > 0 ? ", " : "") << c.name << " " << to_string(c.status) << " (" << c.instances
           << ")";
    if (c.counterexample) {
      detail << " at";
      for (const auto& [key, value] : c.counterexample->params) detail << ' ' << key << '=' << value;
      detail << " expected " << c.counterexample->expected << " got " << c.counterexample->actual;
    }
  }
  o.detail = detail.str();
  return o;
}

int exit_code(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

Outcome end_to_end(const std::string& binary) {
  Outcome o;
  std::ostringstream detail;

  const auto start = std::chrono::steady_clock::now();
  const int code = exit_code("'" + binary + "' verify > /dev/null 2>&1");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = code == 0 && seconds < 60.0;
  detail << "default verify exit " << code << " in " << seconds << "s";

  std::vector<std::string> missed;
  for (const auto& route : mutable_routes()) {
    const int mutated = exit_code("'" + binary + "' verify --mutate " + route + " > /dev/null 2>&1");
    const bool in_process = !run_suite(default_suite(), mutate(Routes::standard(), route)).passed();
    if (mutated != 1 || !in_process) missed.push_back(route);
  }
  o.pass = o.pass && missed.empty();
  detail << "; " << mutable_routes().size() - missed.size() << "/" << mutable_routes().size()
         << " mutated routes flip the exit code to 1";
  for (const auto& route : missed) detail << " [missed " << route << "]";
  o.detail = detail.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <pathpairs-binary>\n";
    return 2;
  }
  const std::string binary = argv[1];

  struct Criterion {
    const char* title;
    std::vector<CheckSpec> specs;
  };
  const std::vector<Criterion> criteria = {
      {"M equals enumeration, n <= 9, extended grid", {{"thm5-vs-oracle", 0, kOracleN, 0}}},
      {"N_k equals enumeration, n <= 9, with boundary row",
       {{"nk-vs-oracle", 0, kOracleN, 0}, {"nk-boundary", kClosedN, 0, 0}}},
      {"N_E definitional sum and divisibility, n <= 40", {{"thm1", kClosedN, 0, 0}}},
      {"N_O definitional sum and rearranged form, n <= 40", {{"thm2", kClosedN, 0, 0}}},
      {"row sums of N_E, N_O and N_k, n <= 40", {{"thm3", kClosedN, 0, 0}, {"nk-row-sum", kClosedN, 0, 0}}},
      {"cleared k-recurrence, n <= 40", {{"thm4", kClosedN, 0, 0}}},
      {"series coefficients equal closed forms, cap 14",
       {{"series-vs-closedform", 0, 0, kCap}, {"thm5-vs-series", 0, 0, kCap}}},
      {"series identities, cap 14",
       {{"series-functional-eq", 0, 0, kCap},
        {"series-quadratic", 0, 0, kCap},
        {"series-derivative", 0, 0, kCap},
        {"series-reciprocal", 0, 0, kCap},
        {"square-binom", 0, 0, kCap}}},
      {"Lagrange coefficients equal series expansion, a,b,c <= 4, cap 14", {{"lagrange-vs-series", 0, 0, kCap}}},
      {"completeness over k, n <= 40", {{"completeness", kClosedN, 0, 0}}},
  };

  int failures = 0;
  int index = 0;
  const auto report = [&](const char* title, const Outcome& o) {
    ++index;
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << index << ". " << title << ": " << o.detail << std::endl;
  };
  for (const auto& c : criteria) report(c.title, suite(c.specs));
  report("verify exits 0 under 60s and every single-entry mutation exits 1", end_to_end(binary));

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
