#pragma once

#include <cstddef>
#include <deque>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twostack {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

// Grows on demand; one instance per computation context. Returned
// references stay valid as the table grows.
class FactorialTable {
 public:
  FactorialTable() : table_{BigInt(1)} {}

  const BigInt& operator()(std::size_t n) {
    while (table_.size() <= n) {
      table_.push_back(table_.back() * BigInt(table_.size()));
    }
    return table_[n];
  }

 private:
  std::deque<BigInt> table_;
};

}  // namespace twostack
