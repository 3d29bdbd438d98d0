#include "pathpairs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathpairs/closedform.hpp"
#include "pathpairs/oracle.hpp"
#include "pathpairs/series.hpp"
#include "pathpairs/verify.hpp"

namespace pathpairs::cli {

namespace {

using closedform::Index;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComputeArgs {
  std::string kind;
  std::optional<Index> n, k, r, s, p, a, b, c, l, m;
};

struct TableArgs {
  std::string what;
  Index n = 0;
  std::string format = "text";
  std::string out;
};

struct GfArgs {
  std::string name;
  int k = 0;
  int j = 1;
  int cap = 12;
  std::string out;
};

struct VerifyArgs {
  int max_n = 25;
  int max_n_oracle = 8;
  int cap = 12;
  std::string cache;
  std::string out;
  std::string mutate;
  unsigned threads = 1;
};

Index need(const std::optional<Index>& value, const char* flag, const std::string& kind) {
  if (!value) throw UsageError(kind + " requires --" + flag);
  return *value;
}

Integer compute(const ComputeArgs& args) {
  const auto& kind = args.kind;
  auto arg = [&](const std::optional<Index>& v, const char* flag) { return need(v, flag, kind); };
  if (kind == "M") {
    return closedform::m_value({arg(args.n, "n"), arg(args.k, "k"), arg(args.r, "r"), arg(args.s, "s")});
  }
  if (kind == "NK") return closedform::nk_value(arg(args.n, "n"), arg(args.k, "k"), arg(args.r, "r"));
  if (kind == "NE") return closedform::ne_value({arg(args.n, "n"), arg(args.k, "k"), arg(args.p, "p")});
  if (kind == "NO") return closedform::no_value({arg(args.n, "n"), arg(args.k, "k"), arg(args.p, "p")});
  if (kind == "ROWSUM") return closedform::row_sum(arg(args.n, "n"), arg(args.k, "k"));
  if (kind == "NKROWSUM") return closedform::nk_row_sum(arg(args.n, "n"), arg(args.k, "k"));
  if (kind == "LAGRANGE") {
    return closedform::lagrange_coeff(arg(args.a, "a"), arg(args.b, "b"), arg(args.c, "c"),
                                      arg(args.l, "l"), arg(args.m, "m"));
  }
  throw UsageError("unknown kind '" + kind + "' (expected M, NK, NE, NO, ROWSUM, NKROWSUM, LAGRANGE)");
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

Table make_table(const std::string& what, Index n) {
  Table t;
  const auto str = [](Index v) { return std::to_string(v); };
  if (what == "M") {
    t.columns = {"k", "r", "s", "value"};
    for (Index k = 0; k <= n - 1; ++k)
      for (Index r = 0; r <= n; ++r)
        for (Index s = 0; s <= n; ++s)
          t.rows.push_back({str(k), str(r), str(s), closedform::m_value({n, k, r, s}).get_str()});
  } else if (what == "NK") {
    t.columns = {"k", "r", "value"};
    for (Index k = 0; k <= n - 1; ++k)
      for (Index r = 0; r <= n; ++r) t.rows.push_back({str(k), str(r), closedform::nk_value(n, k, r).get_str()});
  } else if (what == "NE" || what == "NO") {
    t.columns = {"k", "p", "value"};
    const Index max_p = what == "NE" ? n : n - 1;
    for (Index k = 0; k <= n - 1; ++k) {
      for (Index p = 0; p <= max_p; ++p) {
        const Integer v = what == "NE" ? closedform::ne_value({n, k, p}) : closedform::no_value({n, k, p});
        t.rows.push_back({str(k), str(p), v.get_str()});
      }
    }
  } else {
    throw UsageError("unknown table '" + what + "' (expected M, NK, NE, NO)");
  }
  return t;
}

void write_table(std::ostream& out, const Table& t, const std::string& what, Index n,
                 const std::string& format) {
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
  } else if (format == "json") {
    // Index columns are numbers, the value column is a decimal string.
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json item = nlohmann::json::array();
      for (std::size_t i = 0; i + 1 < row.size(); ++i) item.push_back(std::stoll(row[i]));
      item.push_back(row.back());
      rows.push_back(std::move(item));
    }
    out << nlohmann::json{{"table", what}, {"n", n}, {"columns", t.columns}, {"rows", rows}}.dump(1)
        << '\n';
  } else if (format == "text") {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << "  ";
        out << std::string(width[i] - cells[i].size(), ' ') << cells[i];
      }
      out << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  } else {
    throw UsageError("unknown format '" + format + "' (expected text, csv, json)");
  }
}

// Writes to --out when given, otherwise to the primary stream.
template <class Emit>
void emit(const std::string& path, std::ostream& out, Emit&& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  body(file);
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_n < 0 || args.max_n_oracle < 0 || args.cap < 0) throw UsageError("bounds must be nonnegative");
  if (args.max_n_oracle > oracle::kDefaultCeiling + 4) {
    err << "warning: enumerating up to n = " << args.max_n_oracle << " visits 4^n pairs per length\n";
  }
  verify::Routes routes = verify::Routes::standard();
  if (!args.cache.empty()) {
    routes.oracle_table = [dir = args.cache, &err](int n) {
      auto result = oracle::load_or_build(dir, n, oracle::kMaxPathLength);
      if (result.warning) err << "warning: " << *result.warning << '\n';
      return std::move(result.table);
    };
  }
  if (!args.mutate.empty()) {
    const auto& names = verify::mutable_routes();
    if (std::find(names.begin(), names.end(), args.mutate) == names.end()) {
      throw UsageError("unknown route '" + args.mutate + "' for --mutate");
    }
    routes = verify::mutate(std::move(routes), args.mutate);
  }

  const auto specs = verify::default_suite({args.max_n, args.max_n_oracle, args.cap});
  const auto report = verify::run_suite(specs, routes, {args.threads});
  report.write_text(out);
  if (!args.out.empty()) {
    emit(args.out, out, [&](std::ostream& o) { o << report.to_json().dump(2) << '\n'; });
  }
  return report.passed() ? kExitOk : kExitCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of intersecting pairs of E/N lattice paths", "pathpairs"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute_cmd = app.add_subcommand("compute", "Print one exact value");
  compute_cmd->add_option("kind", compute_args.kind, "M, NK, NE, NO, ROWSUM, NKROWSUM or LAGRANGE")->required();
  for (auto [flag, slot] : {std::pair{"--n", &compute_args.n}, {"--k", &compute_args.k}, {"--r", &compute_args.r},
                            {"--s", &compute_args.s}, {"--p", &compute_args.p}, {"--a", &compute_args.a},
                            {"--b", &compute_args.b}, {"--c", &compute_args.c}, {"--l", &compute_args.l},
                            {"--m", &compute_args.m}}) {
    compute_cmd->add_option(flag, *slot);
  }

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Emit every value for one path length");
  table_cmd->add_option("what", table_args.what, "M, NK, NE or NO")->required();
  table_cmd->add_option("--n", table_args.n, "path length")->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", table_args.format, "text, csv or json");
  table_cmd->add_option("--out", table_args.out, "output file");

  GfArgs gf_args;
  auto* gf_cmd = app.add_subcommand("gf", "Dump a truncated generating function");
  gf_cmd->add_option("series", gf_args.name, "f, u0pow, mdiag, ne, no, sqbinom, sqbinom-shifted")->required();
  gf_cmd->add_option("--k", gf_args.k, "power of x+y+2f")->check(CLI::NonNegativeNumber);
  gf_cmd->add_option("--j", gf_args.j, "power of f/x (mdiag)")->check(CLI::NonNegativeNumber);
  gf_cmd->add_option("--cap", gf_args.cap, "total-degree cap")->check(CLI::NonNegativeNumber);
  gf_cmd->add_option("--out", gf_args.out, "output file");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite");
  verify_cmd->add_option("--max-n", verify_args.max_n, "largest n for closed-form checks");
  verify_cmd->add_option("--max-n-oracle", verify_args.max_n_oracle, "largest n enumerated (0 disables)");
  verify_cmd->add_option("--cap", verify_args.cap, "cap for generating-function checks");
  verify_cmd->add_option("--cache", verify_args.cache, "oracle cache directory");
  verify_cmd->add_option("--out", verify_args.out, "JSON report file");
  verify_cmd->add_option("--threads", verify_args.threads, "checks run concurrently");
  verify_cmd->add_option("--mutate", verify_args.mutate,
                         "perturb one entry of a route (harness self-test): m, nk, ne, no, rowsum, "
                         "nkrowsum, n0, lagrange, oracle, f, series");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*compute_cmd) {
      out << compute(compute_args).get_str() << '\n';
      return kExitOk;
    }
    if (*table_cmd) {
      const Table t = make_table(table_args.what, table_args.n);
      emit(table_args.out, out,
           [&](std::ostream& o) { write_table(o, t, table_args.what, table_args.n, table_args.format); });
      return kExitOk;
    }
    if (*gf_cmd) {
      const auto kind = series::SeriesId::kind_from_name(gf_args.name);
      if (!kind) throw UsageError("unknown series '" + gf_args.name + "'");
      const auto s = series::build({*kind, gf_args.k, gf_args.j}, gf_args.cap);
      emit(gf_args.out, out, [&](std::ostream& o) { series::write_dump(o, s); });
      return kExitOk;
    }
    return run_verify(verify_args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const oracle::CeilingExceeded& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace pathpairs::cli
