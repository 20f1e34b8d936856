#include "twostack/count_table.hpp"

#include <json.hpp>

namespace twostack {

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& [k, count] : row) sum += count;
  return sum;
}

std::string to_csv(const CountTable& table) {
  std::string out = "n,k,count\n";
  for (const auto& [k, count] : table.row) {
    out += std::to_string(table.n) + "," + std::to_string(k) + "," +
           to_decimal(count) + "\n";
  }
  return out;
}

std::string to_json(const CountTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, count] : table.row) {
    rows.push_back({{"k", k}, {"count", to_decimal(count)}});
  }
  return nlohmann::json{{"n", table.n}, {"rows", std::move(rows)}}.dump();
}

std::uint64_t Distribution::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& [key, times] : counts) sum += times;
  return sum;
}

Distribution& Distribution::operator+=(const Distribution& other) {
  for (const auto& [key, times] : other.counts) counts[key] += times;
  return *this;
}

std::string to_string(const Distribution& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, times] : d.counts) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
           "):" + std::to_string(times);
  }
  return out + "}";
}

}  // namespace twostack
