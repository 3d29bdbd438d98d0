#pragma once

// Test-only reference enumerator. Paths are strings over {E, N} and meeting
// points are found by comparing explicit coordinate lists, independently of
// the bit-encoded enumerator in the library.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace testing_oracle {

std::vector<std::string> all_paths(int n);
std::vector<std::pair<int, int>> points(const std::string& path);
int meetings(const std::string& a, const std::string& b);

/// Number of ordered pairs of n-step paths ending at (r, n-r), (s, n-s)
/// that meet exactly k times strictly between the start and the end.
std::int64_t count_pairs(int n, int k, int r, int s);

}  // namespace testing_oracle
