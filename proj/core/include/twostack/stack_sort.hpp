#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "twostack/permutation.hpp"

namespace twostack {

// One pass of the stack-sorting operator, by the recursive rule: if the
// maximum m splits the word as L m R, the image is sort(L) sort(R) m.
// The empty word maps to itself.
Permutation stack_sort(const Permutation& p);

// `passes` successive applications; zero passes returns `p`.
Permutation stack_sort(const Permutation& p, std::size_t passes);

// Appends the image of `word` to `out`. `word` need not use the values 1..n;
// only relative order matters.
void stack_sort_into(std::span<const Entry> word, std::vector<Entry>& out);

// True iff `passes` applications of the operator reach the identity.
bool is_t_stack_sortable(const Permutation& p, std::size_t passes);
bool is_t_stack_sortable(std::span<const Entry> p, std::size_t passes);

// Smallest t with is_t_stack_sortable(p, t). Always at most max(n - 1, 0),
// since each pass fixes the largest entry not yet in place.
std::size_t passes_to_sort(const Permutation& p);

// True iff `p` has a subsequence order-isomorphic to `pattern`. Plain
// backtracking over index choices. Throws DomainError on an empty pattern.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

}  // namespace twostack
