#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "twostack/permutation.hpp"

namespace twostack {

// Type 1: writing p = s_1 a_1 s_2 a_2 ... s_t a_t around its right-to-left
// maxima, the entry a_t - 1 lies in the final segment s_t. Everything else,
// including ε and every permutation ending in 1, is Type 2.
enum class PermType { Type1, Type2 };

std::string_view to_string(PermType type) noexcept;

struct Statistics {
  std::size_t descents = 0;
  std::size_t ascents = 0;
  std::size_t runs = 0;
  // a_1 > a_2 > ... > a_t; a_1 = n and a_t is the last entry.
  std::vector<Entry> rl_maxima;
  PermType type = PermType::Type2;

  std::size_t rl_count() const noexcept { return rl_maxima.size(); }
};

// Throws DomainError for the empty permutation.
Statistics compute_statistics(const Permutation& p);

std::size_t count_descents(std::span<const Entry> p) noexcept;
std::size_t count_ascents(std::span<const Entry> p) noexcept;
// descents + 1, or 0 for the empty word.
std::size_t count_runs(std::span<const Entry> p) noexcept;
std::size_t count_rl_maxima(std::span<const Entry> p) noexcept;

// Right-to-left maxima in decreasing order of value (left to right).
std::vector<Entry> rl_maxima(std::span<const Entry> p);
// Positions (0-based) of the right-to-left maxima, left to right.
std::vector<std::size_t> rl_maxima_positions(std::span<const Entry> p);

// Throws DomainError for the empty permutation.
PermType classify(const Permutation& p);

}  // namespace twostack
