#include "fixmat/arith.hpp"

#include <stdexcept>

namespace fixmat {

DivisorSieve::DivisorSieve(uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
  if (limit < 1) throw std::invalid_argument("DivisorSieve: limit must be >= 1");
  for (uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (uint64_t j = i; j <= limit; j += i)
        if (spf_[j] == 0) spf_[j] = i;
    }
  }
  spf_[1] = 1;
}

uint32_t DivisorSieve::check(uint32_t n) const {
  if (n < 1) throw std::invalid_argument("divisor query: n must be >= 1");
  if (n > limit_) throw std::out_of_range("divisor query: n exceeds sieve limit");
  return n;
}

std::vector<std::pair<uint32_t, uint32_t>> DivisorSieve::factorize(uint32_t n) const {
  n = check(n);
  std::vector<std::pair<uint32_t, uint32_t>> out;
  while (n > 1) {
    uint32_t p = spf_[n], e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<uint64_t> DivisorSieve::divisors(uint32_t n) const {
  std::vector<uint64_t> divs{1};
  for (auto [p, e] : factorize(n)) {
    size_t base = divs.size();
    uint64_t pk = 1;
    for (uint32_t i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

long long DivisorSieve::tau(uint32_t n) const {
  long long t = 1;
  for (auto [p, e] : factorize(n)) t *= e + 1;
  return t;
}

long long DivisorSieve::tau_odd(uint32_t n) const {
  long long t = 1;
  for (auto [p, e] : factorize(n))
    if (p != 2) t *= e + 1;
  return t;
}

long long DivisorSieve::totient(uint32_t n) const {
  long long t = check(n);
  for (auto [p, e] : factorize(n)) t -= t / p;
  return t;
}

long long DivisorSieve::d_congruent(uint32_t m, uint32_t n) const {
  if (m < 1) throw std::invalid_argument("d_congruent: m must be >= 1");
  long long count = 0;
  for (uint64_t d : divisors(n))
    if (d > 1 && d % m == 1 % m) ++count;
  return count;
}

std::vector<std::pair<int, int>> catalan_case_scan(int q_max, int r_max) {
  if (q_max < 2 || r_max < 1) throw std::invalid_argument("catalan_case_scan: bad bounds");
  if (q_max > 120 || r_max > 75) throw std::out_of_range("catalan_case_scan: exceeds 128-bit range");
  std::vector<std::pair<int, int>> sols;
  for (int q = 2; q <= q_max; ++q) {
    __int128 pow2 = static_cast<__int128>(1) << (q - 1);
    __int128 pow3 = 3;
    for (int r = 1; r <= r_max; ++r, pow3 *= 3)
      if (pow2 - pow3 == 1) sols.emplace_back(q, r);
  }
  return sols;
}

}  // namespace fixmat
