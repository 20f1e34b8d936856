#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twostack {

using Entry = std::int32_t;

// True iff `entries` is a rearrangement of 1..size with no repeats.
bool is_permutation_of_1_to_n(std::span<const Entry> entries);

// A permutation of {1, ..., n}, stored in one-line notation. The empty
// permutation (n = 0) is allowed; the 1-permutation "1" is often written ε.
class Permutation {
 public:
  Permutation() = default;

  // Throws DomainError unless `entries` is a permutation of 1..n.
  explicit Permutation(std::vector<Entry> entries);
  Permutation(std::initializer_list<Entry> entries)
      : Permutation(std::vector<Entry>(entries)) {}

  // Skips validation. For enumerators that generate entries by construction.
  static Permutation from_trusted(std::vector<Entry> entries) noexcept {
    Permutation p;
    p.entries_ = std::move(entries);
    return p;
  }

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Entry operator[](std::size_t i) const noexcept { return entries_[i]; }
  Entry back() const noexcept { return entries_.back(); }

  std::span<const Entry> entries() const noexcept { return entries_; }
  const std::vector<Entry>& vector() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Entry> entries_;
};

// Parses "3 5 2 4 1" or "3,5,2,4,1". Surrounding whitespace is ignored;
// separators are single spaces or single commas. Throws ParseError on
// malformed numbers, repeats, gaps or non-positive values.
Permutation parse_permutation(std::string_view text);

std::string to_string(const Permutation& p, std::string_view separator = " ");
std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace twostack
