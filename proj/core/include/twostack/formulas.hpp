#pragma once

#include <cstddef>

#include "twostack/bigint.hpp"

namespace twostack {

// Closed forms, all in exact arithmetic. Each quotient is checked to divide
// exactly; a remainder throws ConsistencyError.

// 2-stack sortable n-permutations with k runs (k - 1 descents):
//   (n+k-1)! (2n-k)! / ( k! (n+1-k)! (2k-1)! (2n-2k+1)! ).
// Throws DomainError unless 1 <= k <= n.
BigInt w_formula(std::size_t n, std::size_t k);
BigInt w_formula(FactorialTable& factorials, std::size_t n, std::size_t k);

// All 2-stack sortable n-permutations: 2 (3n)! / ( (n+1)! (2n+1)! ).
// Throws DomainError for n = 0.
BigInt w_total_formula(std::size_t n);
BigInt w_total_formula(FactorialTable& factorials, std::size_t n);

// Nonseparable rooted planar maps with f + 1 faces and pv + 1 vertices:
//   (2f+pv-2)! (2pv+f-2)! / ( f! pv! (2f-1)! (2pv-1)! ).
// W(n, k) = map_count_formula(k, n + 1 - k). Throws DomainError unless
// f >= 1 and pv >= 1.
BigInt map_count_formula(std::size_t f, std::size_t pv);
BigInt map_count_formula(FactorialTable& factorials, std::size_t f,
                         std::size_t pv);

// (2n)! / ( n! (n+1)! ).
BigInt catalan(std::size_t n);
BigInt catalan(FactorialTable& factorials, std::size_t n);

}  // namespace twostack
