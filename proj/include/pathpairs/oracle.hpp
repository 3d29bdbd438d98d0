#pragma once

// Ground truth by exhaustive enumeration of ordered pairs of E/N paths.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathpairs/exactmath.hpp"

namespace pathpairs::oracle {

/// Enumeration is 4^n; queries above the ceiling are refused.
inline constexpr int kDefaultCeiling = 12;
/// Hard limit of the bit encoding.
inline constexpr int kMaxPathLength = 30;

class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Step : std::uint8_t { E, N };

/// n unit steps from the origin. Bit m of the encoding is step m + 1; a set
/// bit means E.
class LatticePath {
 public:
  LatticePath(std::uint32_t bits, int length);
  /// From a string over {E, N}, e.g. "ENE".
  static LatticePath parse(const std::string& steps);

  int length() const { return length_; }
  std::uint32_t bits() const { return bits_; }
  Step step(int m) const { return (bits_ >> (m - 1)) & 1u ? Step::E : Step::N; }
  /// x-coordinate after the first m steps.
  int x_after(int m) const;
  int east_steps() const { return x_after(length_); }
  std::string to_string() const;

 private:
  std::uint32_t bits_;
  int length_;
};

/// d[m] = x1(m) - x2(m) for m = 0..n, and the interior meeting indices.
struct IntersectionProfile {
  std::vector<int> d;
  std::vector<int> meets;
};

IntersectionProfile profile(const LatticePath& p1, const LatticePath& p2);

/// Number of 1 <= m <= n-1 at which the m-th points coincide. The origin and
/// the endpoints never count. DomainError on a length mismatch.
int count_intersections(const LatticePath& p1, const LatticePath& p2);

/// Ordered pairs ending at (r, n-r) and (s, n-s) with exactly k intersections.
Integer brute_m(int n, int k, int r, int s, int ceiling = kDefaultCeiling);

/// Counts for every (k, r, s) at one n, k in [0, max(n-1, 0)], r, s in [0, n].
class OracleTable {
 public:
  explicit OracleTable(int n);

  int n() const { return n_; }
  int max_k() const { return n_ == 0 ? 0 : n_ - 1; }

  /// Zero outside the stored ranges.
  Integer at(int k, int r, int s) const;
  void set(int k, int r, int s, const Integer& value);

  Integer total_mass() const;

  friend bool operator==(const OracleTable&, const OracleTable&) = default;

 private:
  std::size_t index(int k, int r, int s) const;

  int n_;
  std::vector<Integer> counts_;
};

/// One pass over all 4^n ordered pairs. The first path's range is split into
/// `shards` independent slices (0 = hardware concurrency) merged by addition;
/// the result does not depend on the shard count.
OracleTable brute_table(int n, int ceiling = kDefaultCeiling, unsigned shards = 0);

/// Cache document: {"version": 1, "n": n, "entries": [[k, r, s, "count"], ...]}.
/// Only nonzero entries are written.
nlohmann::json to_json(const OracleTable& table);
/// Throws DomainError on any schema or consistency problem (including a
/// total mass different from 4^n).
OracleTable from_json(const nlohmann::json& doc);

/// Cache file for length n inside a cache directory.
std::filesystem::path cache_file(const std::filesystem::path& dir, int n);

struct CacheResult {
  OracleTable table;
  bool loaded = false;            // served from the cache file
  std::optional<std::string> warning;  // set when an unreadable cache was replaced
};

/// Reads the cached table for n, or enumerates and (re)writes it.
CacheResult load_or_build(const std::filesystem::path& dir, int n, int ceiling = kDefaultCeiling);

}  // namespace pathpairs::oracle
