#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "twostack/bigint.hpp"

namespace twostack {

// One row of W(n, k) or T(n, k): k -> count for 1 <= k <= n.
struct CountTable {
  std::size_t n = 0;
  std::map<std::size_t, BigInt> row;

  BigInt total() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

// Header "n,k,count", one line per k ascending. Counts are decimal.
std::string to_csv(const CountTable& table);
// {"n": 4, "rows": [{"k": 1, "count": "1"}, ...]}; counts are strings.
std::string to_json(const CountTable& table);

// Multiset of (runs, rl) or (leaves, root label) pairs with multiplicities.
struct Distribution {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;

  void add(std::size_t first, std::size_t second, std::uint64_t times = 1) {
    counts[{first, second}] += times;
  }
  std::uint64_t total() const noexcept;
  Distribution& operator+=(const Distribution& other);

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

// "{(1,1):1, (2,2):1}"
std::string to_string(const Distribution& d);

}  // namespace twostack
