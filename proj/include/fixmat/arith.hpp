#ifndef FIXMAT_ARITH_HPP
#define FIXMAT_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

// Divisor-counting kernels backed by a smallest-prime-factor sieve, plus
// the desk-scale exponential Diophantine check 2^(q-1) - 3^r = 1.

namespace fixmat {

class DivisorSieve {
 public:
  explicit DivisorSieve(uint32_t limit);

  uint32_t limit() const { return limit_; }

  // (prime, exponent) pairs, ascending primes. n >= 1.
  std::vector<std::pair<uint32_t, uint32_t>> factorize(uint32_t n) const;

  // All positive divisors, unsorted. n >= 1.
  std::vector<uint64_t> divisors(uint32_t n) const;

  long long tau(uint32_t n) const;       // number of divisors
  long long tau_odd(uint32_t n) const;   // number of odd divisors
  long long totient(uint32_t n) const;   // Euler phi

  // #{d : d | n, d > 1, d = 1 mod m}; m >= 1.
  long long d_congruent(uint32_t m, uint32_t n) const;

 private:
  uint32_t check(uint32_t n) const;
  uint32_t limit_;
  std::vector<uint32_t> spf_;
};

// All (q, r) with 2 <= q <= q_max, 1 <= r <= r_max and 2^(q-1) - 3^r = 1,
// evaluated in 128-bit arithmetic. q_max <= 120, r_max <= 75.
std::vector<std::pair<int, int>> catalan_case_scan(int q_max, int r_max);

}  // namespace fixmat

#endif
