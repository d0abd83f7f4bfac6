#include "fixmat/sequences.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fixmat/snapshot.hpp"

namespace fixmat {

long long row_sum_F(long long n) {
  if (n < 0) throw std::invalid_argument("row_sum_F: n must be >= 0");
  long long sum = 0;
  for (long long k = 0; k <= n; ++k) sum += is_fixed_cell(n, k);
  return sum;
}

std::vector<long long> row_sums_to(long long max_row) {
  MatrixSnapshot snap = generate_by_descent(max_row);
  std::vector<long long> out(static_cast<size_t>(max_row) + 1);
  for (long long n = 0; n <= max_row; ++n) out[n] = snap.row_sum(n);
  return out;
}

long long a_by_definition(long long n) {
  if (n < 1) throw std::invalid_argument("a_by_definition: n must be >= 1");
  long long count = 1;  // x = 0
  for (long long x = 1; x < n; ++x) {
    long long mod = 2 * x + 1;
    for (long long h = 1; h * h <= x; ++h) {
      if (x % h != 0) continue;
      if ((2 * n - 2 * h + 1) % mod == 0 || (2 * n - 2 * (x / h) + 1) % mod == 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

long long a_by_diophantine(long long n) {
  if (n < 1) throw std::invalid_argument("a_by_diophantine: n must be >= 1");
  long long count = 0;
  for (long long y = 1; y <= n; ++y)
    for (long long z = 1; y * z + y <= n; ++z) {
      // x(2yz+1) = n - yz - y
      long long rest = n - y * z - y;
      if (rest % (2 * y * z + 1) == 0) ++count;
    }
  return 1 + count;
}

long long a_by_divisor_sum(long long n, const DivisorSieve& sieve) {
  if (n < 1) throw std::invalid_argument("a_by_divisor_sum: n must be >= 1");
  long long sum = 1;
  for (long long j = 0; j < n; ++j)
    sum += sieve.d_congruent(static_cast<uint32_t>(2 * j + 1), static_cast<uint32_t>(n - j));
  return sum;
}

std::vector<long long> a_table(long long max_n) {
  if (max_n < 1) throw std::invalid_argument("a_table: max_n must be >= 1");
  std::vector<long long> table(static_cast<size_t>(max_n) + 1, 1);
  table[0] = 0;
  for (long long y = 1; y <= max_n; ++y)
    for (long long z = 1; y * z + y <= max_n; ++z) {
      long long step = 2 * y * z + 1;
      for (long long v = y * z + y; v <= max_n; v += step) ++table[v];
    }
  return table;
}

long long floor_ln(long long n) {
  if (n < 1) throw std::invalid_argument("floor_ln: n must be >= 1");
  long long k = static_cast<long long>(std::log(static_cast<double>(n)));
  while (std::exp(static_cast<long double>(k + 1)) <= static_cast<long double>(n)) ++k;
  while (k > 0 && std::exp(static_cast<long double>(k)) > static_cast<long double>(n)) --k;
  return k;
}

std::vector<BoundReport> check_lower_bounds(long long n, const DivisorSieve& sieve,
                                            long long a_n, long long f_n) {
  if (n < 1) throw std::invalid_argument("check_lower_bounds: n must be >= 1");
  long long t = sieve.tau(static_cast<uint32_t>(n));
  long long t2 = sieve.tau(static_cast<uint32_t>(2 * n - 1));
  long long to = sieve.tau_odd(static_cast<uint32_t>(n + 1));
  long long refined = t + t2 + to - 3 - (n % 2 == 0) - (n % 3 == 2);
  std::vector<BoundReport> out;
  out.push_back({n, "a>=tau(n)", a_n, t, a_n >= t});
  out.push_back({n, "a>=tau(2n-1)", a_n, t2, a_n >= t2});
  out.push_back({n, "a>=tau_odd(n+1)", a_n, to, a_n >= to});
  out.push_back({n, "a>=refined-sum", a_n, refined, a_n >= refined});
  out.push_back({n, "F>=a", f_n, a_n, f_n >= a_n});
  out.push_back({n, "F>=tau(n)", f_n, t, f_n >= t});
  return out;
}

std::vector<BoundReport> check_lower_bounds(long long n, const DivisorSieve& sieve) {
  return check_lower_bounds(n, sieve, a_by_divisor_sum(n, sieve), row_sum_F(n));
}

bool check_fn_at_least_3(long long n) {
  if (n <= 7) throw std::invalid_argument("check_fn_at_least_3: n must be > 7");
  return row_sum_F(n) >= 3;
}

std::vector<BoundReport> check_upper_bounds(long long n, const DivisorSieve& sieve, long long f_n) {
  if (n < 2) throw std::invalid_argument("check_upper_bounds: n must be >= 2");
  long long phi = sieve.totient(static_cast<uint32_t>(2 * n + 1));
  std::vector<BoundReport> out;
  // 5n/6 - 13/12 cleared of denominators
  out.push_back({n, "12F<=10n-13", 12 * f_n, 10 * n - 13, 12 * f_n <= 10 * n - 13});
  out.push_back({n, "F<=phi(2n+1)", f_n, phi, f_n <= phi});
  out.push_back({n, "F<=n", f_n, n, f_n <= n});
  return out;
}

std::vector<BoundReport> check_upper_bounds(long long n, const DivisorSieve& sieve) {
  return check_upper_bounds(n, sieve, row_sum_F(n));
}

bool cell_constraints_ok(long long n, long long k) {
  if (std::gcd(k, 2 * n + 1) != 1) return false;
  return 4 * k < 2 * n + 1 || 3 * k > 2 * n + 1;
}

ConjectureAScan scan_conjecture_a(long long max_n) {
  if (max_n < 2) throw std::invalid_argument("scan_conjecture_a: max_n must be >= 2");
  ConjectureAScan scan;
  scan.max_n = max_n;
  std::vector<long long> a = a_table(max_n);
  bool first = true;
  for (long long n = 2; n <= max_n; ++n) {
    long long fl = floor_ln(n);
    long long margin = a[n] - (fl - 1);
    if (first || margin < scan.min_margin) {
      scan.min_margin = margin;
      scan.argmin = n;
      first = false;
    }
    if (margin < 0) scan.violations.push_back(n);
    if (a[n] < fl) scan.strict_failures.push_back(n);
  }
  return scan;
}

FnGrowthScan scan_fn_growth(const std::vector<long long>& f_values) {
  if (f_values.size() < 9) throw std::invalid_argument("scan_fn_growth: need F_0..F_8 at least");
  FnGrowthScan scan;
  long long max_n = static_cast<long long>(f_values.size()) - 1;
  scan.max_n = max_n;
  long long best = -1;
  for (long long n = 8; n <= max_n; ++n) {
    if (best < 0 || f_values[n] < best) {
      best = f_values[n];
      scan.record_lows.emplace_back(n, f_values[n]);
    }
  }
  scan.suffix_min.assign(f_values.size(), 0);
  long long m = f_values[max_n];
  for (long long n = max_n; n >= 0; --n) {
    m = std::min(m, f_values[n]);
    scan.suffix_min[n] = m;
  }
  return scan;
}

}  // namespace fixmat
