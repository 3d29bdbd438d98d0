#include "pathpairs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <thread>

namespace pathpairs::oracle {

namespace {

constexpr int kCacheVersion = 1;

void check_ceiling(int n, int ceiling) {
  if (n < 0) throw DomainError("path length must be nonnegative");
  if (n > ceiling || n > kMaxPathLength) {
    throw CeilingExceeded("n = " + std::to_string(n) + " exceeds the enumeration ceiling " +
                          std::to_string(std::min(ceiling, kMaxPathLength)));
  }
}

// Intersections of two encoded paths of length n. Only the running
// x-difference is tracked: same-step points coincide iff their x agree.
int meetings(std::uint32_t a, std::uint32_t b, int n) {
  int diff = 0;
  int count = 0;
  for (int m = 1; m < n; ++m) {
    diff += static_cast<int>((a >> (m - 1)) & 1u) - static_cast<int>((b >> (m - 1)) & 1u);
    count += diff == 0;
  }
  return count;
}

}  // namespace

LatticePath::LatticePath(std::uint32_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > kMaxPathLength) throw DomainError("LatticePath: bad length");
  if (length < 32 && (bits >> length) != 0) throw DomainError("LatticePath: bits beyond length");
}

LatticePath LatticePath::parse(const std::string& steps) {
  if (steps.size() > static_cast<std::size_t>(kMaxPathLength)) {
    throw DomainError("LatticePath: too many steps");
  }
  std::uint32_t bits = 0;
  for (std::size_t m = 0; m < steps.size(); ++m) {
    if (steps[m] == 'E') {
      bits |= 1u << m;
    } else if (steps[m] != 'N') {
      throw DomainError("LatticePath: step must be E or N, got '" + std::string(1, steps[m]) + "'");
    }
  }
  return LatticePath(bits, static_cast<int>(steps.size()));
}

int LatticePath::x_after(int m) const {
  const std::uint32_t mask = m >= 32 ? ~0u : ((1u << m) - 1u);
  return std::popcount(bits_ & mask);
}

std::string LatticePath::to_string() const {
  std::string out;
  for (int m = 1; m <= length_; ++m) out += step(m) == Step::E ? 'E' : 'N';
  return out;
}

IntersectionProfile profile(const LatticePath& p1, const LatticePath& p2) {
  if (p1.length() != p2.length()) throw DomainError("profile: paths differ in length");
  IntersectionProfile out;
  out.d.reserve(static_cast<std::size_t>(p1.length()) + 1);
  for (int m = 0; m <= p1.length(); ++m) {
    out.d.push_back(p1.x_after(m) - p2.x_after(m));
    if (m >= 1 && m < p1.length() && out.d.back() == 0) out.meets.push_back(m);
  }
  return out;
}

int count_intersections(const LatticePath& p1, const LatticePath& p2) {
  if (p1.length() != p2.length()) {
    throw DomainError("count_intersections: paths differ in length");
  }
  return meetings(p1.bits(), p2.bits(), p1.length());
}

Integer brute_m(int n, int k, int r, int s, int ceiling) {
  check_ceiling(n, ceiling);
  if (r < 0 || s < 0 || r > n || s > n || k < 0) return 0;
  std::vector<std::uint32_t> firsts;
  std::vector<std::uint32_t> seconds;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const int east = std::popcount(bits);
    if (east == r) firsts.push_back(bits);
    if (east == s) seconds.push_back(bits);
  }
  std::uint64_t count = 0;
  for (auto a : firsts) {
    for (auto b : seconds) count += meetings(a, b, n) == k;
  }
  return Integer(static_cast<unsigned long>(count));
}

OracleTable::OracleTable(int n) : n_(n) {
  if (n < 0) throw DomainError("OracleTable: negative n");
  const auto side = static_cast<std::size_t>(n + 1);
  counts_.assign(static_cast<std::size_t>(max_k() + 1) * side * side, Integer(0));
}

std::size_t OracleTable::index(int k, int r, int s) const {
  const auto side = static_cast<std::size_t>(n_ + 1);
  return (static_cast<std::size_t>(k) * side + static_cast<std::size_t>(r)) * side +
         static_cast<std::size_t>(s);
}

Integer OracleTable::at(int k, int r, int s) const {
  if (k < 0 || k > max_k() || r < 0 || r > n_ || s < 0 || s > n_) return 0;
  return counts_[index(k, r, s)];
}

void OracleTable::set(int k, int r, int s, const Integer& value) {
  if (k < 0 || k > max_k() || r < 0 || r > n_ || s < 0 || s > n_) {
    throw DomainError("OracleTable::set: index outside the table");
  }
  counts_[index(k, r, s)] = value;
}

Integer OracleTable::total_mass() const {
  Integer total = 0;
  for (const auto& c : counts_) total += c;
  return total;
}

OracleTable brute_table(int n, int ceiling, unsigned shards) {
  check_ceiling(n, ceiling);
  const std::uint32_t paths = 1u << n;
  if (shards == 0) shards = std::max(1u, std::thread::hardware_concurrency());
  shards = std::min<unsigned>(shards, paths);

  const auto side = static_cast<std::size_t>(n + 1);
  const std::size_t max_k = n == 0 ? 0 : static_cast<std::size_t>(n - 1);
  const std::size_t cells = (max_k + 1) * side * side;
  std::vector<std::vector<std::uint64_t>> partial(shards, std::vector<std::uint64_t>(cells, 0));

  auto work = [&](unsigned shard) {
    auto& local = partial[shard];
    const std::uint32_t begin = static_cast<std::uint32_t>(std::uint64_t{paths} * shard / shards);
    const std::uint32_t end = static_cast<std::uint32_t>(std::uint64_t{paths} * (shard + 1) / shards);
    for (std::uint32_t a = begin; a < end; ++a) {
      const auto r = static_cast<std::size_t>(std::popcount(a));
      for (std::uint32_t b = 0; b < paths; ++b) {
        const auto s = static_cast<std::size_t>(std::popcount(b));
        const auto k = static_cast<std::size_t>(meetings(a, b, n));
        ++local[(k * side + r) * side + s];
      }
    }
  };

  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(shards);
    for (unsigned shard = 0; shard < shards; ++shard) threads.emplace_back(work, shard);
  }

  OracleTable table(n);
  for (std::size_t k = 0; k <= max_k; ++k) {
    for (std::size_t r = 0; r < side; ++r) {
      for (std::size_t s = 0; s < side; ++s) {
        std::uint64_t total = 0;
        for (const auto& local : partial) total += local[(k * side + r) * side + s];
        if (total != 0) {
          table.set(static_cast<int>(k), static_cast<int>(r), static_cast<int>(s),
                    Integer(static_cast<unsigned long>(total)));
        }
      }
    }
  }
  return table;
}

nlohmann::json to_json(const OracleTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (int k = 0; k <= table.max_k(); ++k) {
    for (int r = 0; r <= table.n(); ++r) {
      for (int s = 0; s <= table.n(); ++s) {
        const Integer c = table.at(k, r, s);
        if (sgn(c) != 0) entries.push_back({k, r, s, c.get_str()});
      }
    }
  }
  return {{"version", kCacheVersion}, {"n", table.n()}, {"entries", std::move(entries)}};
}

OracleTable from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("version").get<int>() != kCacheVersion) {
      throw DomainError("oracle cache: unsupported version");
    }
    const int n = doc.at("n").get<int>();
    if (n < 0 || n > kMaxPathLength) throw DomainError("oracle cache: bad n");
    OracleTable table(n);
    for (const auto& entry : doc.at("entries")) {
      if (!entry.is_array() || entry.size() != 4) throw DomainError("oracle cache: malformed entry");
      table.set(entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>(),
                parse_integer(entry[3].get<std::string>()));
    }
    if (table.total_mass() != ipow(4, static_cast<unsigned>(n))) {
      throw DomainError("oracle cache: total mass is not 4^n");
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("oracle cache: ") + e.what());
  }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("oracle-n" + std::to_string(n) + ".json");
}

CacheResult load_or_build(const std::filesystem::path& dir, int n, int ceiling) {
  const auto path = cache_file(dir, n);
  std::optional<std::string> warning;
  if (std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      auto table = from_json(nlohmann::json::parse(in));
      if (table.n() != n) throw DomainError("oracle cache: file holds n = " + std::to_string(table.n()));
      return {std::move(table), true, std::nullopt};
    } catch (const std::exception& e) {
      warning = "discarding unreadable oracle cache " + path.string() + ": " + e.what();
    }
  }
  auto table = brute_table(n, ceiling);
  std::filesystem::create_directories(dir);
  std::ofstream out(path, std::ios::trunc);
  out << to_json(table).dump() << '\n';
  return {std::move(table), false, std::move(warning)};
}

}  // namespace pathpairs::oracle
