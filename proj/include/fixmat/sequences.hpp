#ifndef FIXMAT_SEQUENCES_HPP
#define FIXMAT_SEQUENCES_HPP

#include <string>
#include <vector>

#include "fixmat/arith.hpp"
#include "fixmat/descent.hpp"

// The row-sum sequence F_n, the divisor-certified subcount a_n computed by
// three independent formulas, the proved bounds on both, and numerical
// scans of the open conjectures.

namespace fixmat {

// F_n = sum_k F(n,k) by descent membership. O(n) descents; for bulk ranges
// prefer generate_by_descent + MatrixSnapshot::row_sum.
long long row_sum_F(long long n);

// F_0..F_N via a dense descent snapshot.
std::vector<long long> row_sums_to(long long max_row);

// a_n = 1 + #{x in [1,n-1] : exists h | x with (2x+1) | (2n-2h+1)}.
long long a_by_definition(long long n);

// a_n = 1 + #solutions of n = 2xyz + yz + x + y, y,z >= 1, x >= 0.
long long a_by_diophantine(long long n);

// a_n = 1 + sum_{0<=j<n} D_{2j+1}(n-j). Sieve limit must cover n.
long long a_by_divisor_sum(long long n, const DivisorSieve& sieve);

// a_1..a_N in one pass (index 0 unused), by counting Diophantine solutions
// for all n at once. O(N log N).
std::vector<long long> a_table(long long max_n);

// floor(ln n), n >= 1.
long long floor_ln(long long n);

struct BoundReport {
  long long n = 0;
  std::string kind;
  long long lhs = 0;
  long long rhs = 0;
  bool satisfied = false;
};

// Lower bounds on a_n and F_n:
//   a_n >= tau(n), tau(2n-1), tau_odd(n+1)
//   a_n >= tau(n)+tau(2n-1)+tau_odd(n+1)-3-[n even]-[n = 2 mod 3]
//   F_n >= a_n, F_n >= tau(n)
// Sieve limit must cover 2n-1.
std::vector<BoundReport> check_lower_bounds(long long n, const DivisorSieve& sieve,
                                            long long a_n, long long f_n);
std::vector<BoundReport> check_lower_bounds(long long n, const DivisorSieve& sieve);

// F_n >= 3, n > 7.
bool check_fn_at_least_3(long long n);

// Upper bounds: 12 F_n <= 10n - 13, F_n <= phi(2n+1), F_n <= n (n >= 2).
// Sieve limit must cover 2n+1.
std::vector<BoundReport> check_upper_bounds(long long n, const DivisorSieve& sieve, long long f_n);
std::vector<BoundReport> check_upper_bounds(long long n, const DivisorSieve& sieve);

// Per-cell constraints on a set cell (n,k), n >= 2:
// gcd(k, 2n+1) = 1 and k < n/2 + 1/4 or k > 2n/3 + 1/3.
bool cell_constraints_ok(long long n, long long k);

struct ConjectureAScan {
  long long max_n = 0;
  long long min_margin = 0;  // min over n of a_n - (floor_ln(n) - 1)
  long long argmin = 0;
  std::vector<long long> violations;       // n with a_n < floor_ln(n) - 1
  std::vector<long long> strict_failures;  // n with a_n < floor_ln(n)
};

// Evidence scan for a_n >= floor(ln n) - 1 over 2 <= n <= N; also reports
// where the stricter floor(ln n) form fails (first case: n = 18007).
ConjectureAScan scan_conjecture_a(long long max_n);

struct FnGrowthScan {
  long long max_n = 0;
  std::vector<std::pair<long long, long long>> record_lows;  // (n, F_n), n >= 8
  std::vector<long long> suffix_min;                         // index n: min F over [n, N]
};

// Evidence for F_n -> infinity: running records and suffix minima of F_n.
FnGrowthScan scan_fn_growth(const std::vector<long long>& f_values);

}  // namespace fixmat

#endif
