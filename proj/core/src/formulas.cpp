#include "twostack/formulas.hpp"

#include <string>

#include "twostack/errors.hpp"

namespace twostack {

namespace {

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator,
                      const char* what) {
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw ConsistencyError(std::string(what) + ": inexact division");
  }
  return quotient;
}

FactorialTable& local_factorials() {
  thread_local FactorialTable table;
  return table;
}

}  // namespace

BigInt w_formula(FactorialTable& fact, std::size_t n, std::size_t k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("W(n,k) needs 1 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  const BigInt numerator = fact(n + k - 1) * fact(2 * n - k);
  const BigInt denominator = fact(k) * fact(n + 1 - k) * fact(2 * k - 1) *
                             fact(2 * n - 2 * k + 1);
  return exact_quotient(numerator, denominator, "W(n,k)");
}

BigInt w_formula(std::size_t n, std::size_t k) {
  return w_formula(local_factorials(), n, k);
}

BigInt w_total_formula(FactorialTable& fact, std::size_t n) {
  if (n < 1) throw DomainError("W_n needs n >= 1");
  return exact_quotient(2 * fact(3 * n), fact(n + 1) * fact(2 * n + 1), "W_n");
}

BigInt w_total_formula(std::size_t n) {
  return w_total_formula(local_factorials(), n);
}

BigInt map_count_formula(FactorialTable& fact, std::size_t f, std::size_t pv) {
  if (f < 1 || pv < 1) {
    throw DomainError("map count needs f >= 1 and pv >= 1, got f=" +
                      std::to_string(f) + " pv=" + std::to_string(pv));
  }
  const BigInt numerator = fact(2 * f + pv - 2) * fact(2 * pv + f - 2);
  const BigInt denominator =
      fact(f) * fact(pv) * fact(2 * f - 1) * fact(2 * pv - 1);
  return exact_quotient(numerator, denominator, "map count");
}

BigInt map_count_formula(std::size_t f, std::size_t pv) {
  return map_count_formula(local_factorials(), f, pv);
}

BigInt catalan(FactorialTable& fact, std::size_t n) {
  return exact_quotient(fact(2 * n), fact(n) * fact(n + 1), "Catalan");
}

BigInt catalan(std::size_t n) { return catalan(local_factorials(), n); }

}  // namespace twostack
