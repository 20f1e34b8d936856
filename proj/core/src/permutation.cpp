#include "twostack/permutation.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "twostack/errors.hpp"

namespace twostack {

bool is_permutation_of_1_to_n(std::span<const Entry> entries) {
  const auto n = entries.size();
  std::vector<bool> seen(n + 1, false);
  for (Entry e : entries) {
    if (e < 1 || static_cast<std::size_t>(e) > n || seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  if (!is_permutation_of_1_to_n(entries_)) {
    throw DomainError("not a permutation of 1.." +
                      std::to_string(entries_.size()) + ": " +
                      to_string(*this));
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Entry> entries(n);
  for (std::size_t i = 0; i < n; ++i) entries[i] = static_cast<Entry>(i + 1);
  return from_trusted(std::move(entries));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != static_cast<Entry>(i + 1)) return false;
  }
  return true;
}

Permutation parse_permutation(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return Permutation{};
  text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);

  std::vector<Entry> entries;
  const char* pos = text.data();
  const char* const end = text.data() + text.size();
  while (true) {
    Entry value = 0;
    auto [next, ec] = std::from_chars(pos, end, value);
    if (ec != std::errc{} || next == pos) {
      throw ParseError("expected a positive integer at offset " +
                       std::to_string(pos - text.data()) + " in \"" +
                       std::string(text) + "\"");
    }
    if (value < 1) {
      throw ParseError("non-positive entry " + std::to_string(value));
    }
    entries.push_back(value);
    pos = next;
    if (pos == end) break;
    if (*pos != ' ' && *pos != ',') {
      throw ParseError(std::string("unexpected character '") + *pos + "'");
    }
    ++pos;
  }
  if (!is_permutation_of_1_to_n(entries)) {
    throw ParseError("\"" + std::string(text) +
                     "\" has a repeated or missing value; expected each of 1.." +
                     std::to_string(entries.size()) + " exactly once");
  }
  return Permutation::from_trusted(std::move(entries));
}

std::string to_string(const Permutation& p, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out += separator;
    out += std::to_string(p[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

}  // namespace twostack
