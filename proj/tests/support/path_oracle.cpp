#include "path_oracle.hpp"

#include <algorithm>

namespace testing_oracle {

std::vector<std::string> all_paths(int n) {
  std::vector<std::string> out{""};
  for (int step = 0; step < n; ++step) {
    std::vector<std::string> next;
    for (const auto& p : out) {
      next.push_back(p + 'E');
      next.push_back(p + 'N');
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::pair<int, int>> points(const std::string& path) {
  std::vector<std::pair<int, int>> out{{0, 0}};
  for (char c : path) {
    auto [x, y] = out.back();
    out.emplace_back(c == 'E' ? x + 1 : x, c == 'N' ? y + 1 : y);
  }
  return out;
}

int meetings(const std::string& a, const std::string& b) {
  const auto pa = points(a);
  const auto pb = points(b);
  int count = 0;
  for (std::size_t m = 1; m + 1 < pa.size(); ++m) count += pa[m] == pb[m];
  return count;
}

std::int64_t count_pairs(int n, int k, int r, int s) {
  const auto paths = all_paths(n);
  const auto east = [](const std::string& p) { return static_cast<int>(std::count(p.begin(), p.end(), 'E')); };
  std::int64_t total = 0;
  for (const auto& a : paths) {
    if (east(a) != r) continue;
    for (const auto& b : paths) {
      if (east(b) == s && meetings(a, b) == k) ++total;
    }
  }
  return total;
}

}  // namespace testing_oracle
