#include "fixmat/tracks.hpp"

#include <algorithm>
#include <stdexcept>

#include "fixmat/monoid.hpp"

namespace fixmat {

std::vector<long long> track_vector(Cell c) {
  if (c.n < 1 || !is_fixed_cell(c)) throw std::invalid_argument("track_vector: cell is zero in F");
  std::vector<long long> entries;  // collected outermost-first
  while (c.n != c.k) {
    long long m = 2 * (c.n - c.k) + 1;
    long long h = c.k % m;
    entries.push_back((c.k - h) / m + 1);
    c = {c.n - c.k, h};
  }
  entries.push_back(c.n);  // S^(m-1)(1,1) = (m,m)
  std::reverse(entries.begin(), entries.end());
  return entries;
}

long long breadth(Cell c) { return static_cast<long long>(track_vector(c).size()) - 1; }

std::pair<long long, long long> count_track_patterns(long long n) {
  if (n < 1) throw std::invalid_argument("count_track_patterns: n must be >= 1");
  long long a1b = 0, one_a_one = 0;
  for (long long k = 1; k <= n; ++k) {
    if (!is_fixed_cell(n, k)) continue;
    std::vector<long long> t = track_vector({n, k});
    size_t len = t.size();
    if (len >= 2) {
      bool interior_ones = true;
      for (size_t i = 1; i + 1 < len; ++i)
        if (t[i] != 1) { interior_ones = false; break; }
      if (interior_ones) ++a1b;
    }
    long long big = 0;
    for (long long e : t)
      if (e >= 2) ++big;
    if (big == 1) ++one_a_one;
  }
  return {a1b, one_a_one};
}

long long count_breadth3(long long n) {
  if (n < 1) throw std::invalid_argument("count_breadth3: n must be >= 1");
  long long count = 0;
  for (long long k = 1; k <= n; ++k)
    if (is_fixed_cell(n, k) && breadth({n, k}) == 3) ++count;
  return count;
}

PeriodReport check_subdiagonal_period(long long a, long long max_row) {
  if (a < 0) throw std::invalid_argument("check_subdiagonal_period: a must be >= 0");
  PeriodReport rep{a, 2 * a + 1, max_row, {}};
  long long period = 2 * a + 1;
  // one full period of reference values starting just past the diagonal
  for (long long n = a + 1; n <= std::min(a + period, max_row); ++n) {
    bool ref = is_fixed_cell(n, n - a);
    for (long long m = n + period; m <= max_row; m += period)
      if (is_fixed_cell(m, m - a) != ref) rep.violations.push_back({m, m - a});
  }
  return rep;
}

PeriodReport check_column_period(long long a, long long max_row) {
  if (a < 1) throw std::invalid_argument("check_column_period: a must be >= 1");
  PeriodReport rep{a, a, max_row, {}};
  for (long long n = a + 1; n <= max_row; ++n) {
    if (2 * (n - a) + 1 <= a) continue;  // below the periodicity threshold
    if (is_fixed_cell(n, a) != is_fixed_cell(n - a, a)) rep.violations.push_back({n, a});
  }
  return rep;
}

FamilyReport check_family_kdij(long long k_max, long long d_max, long long i_max,
                               long long j_max) {
  FamilyReport rep;
  for (long long k = 1; k <= k_max; ++k)
    for (long long d = 0; d <= d_max; ++d)
      for (long long i = 0; i <= i_max; ++i)
        for (long long j = 0; j <= j_max; ++j) {
          long long q = 2 * (k - 1) * d + 1;
          long long row = k * d + i * d + j * (i + 1) * q;
          long long col = d + j * q;
          ++rep.checked;
          if (!is_fixed_cell(row, col)) rep.failures.push_back({row, col});
        }
  return rep;
}

FamilyReport check_corollary_5t4(long long t_max) {
  FamilyReport rep;
  for (long long t = 0; t <= t_max; ++t) {
    ++rep.checked;
    if (!is_fixed_cell(5 * t + 4, 2 * t + 2)) rep.failures.push_back({5 * t + 4, 2 * t + 2});
  }
  return rep;
}

std::vector<StepRowStat> creation_row_stats(long long max_step) {
  if (max_step < 1) throw std::invalid_argument("creation_row_stats: max_step must be >= 1");
  if (max_step > 24) throw std::out_of_range("creation_row_stats: max_step > 24 leaves 64-bit range");
  std::vector<StepRowStat> stats;
  std::vector<Point> layer{{1, 1}};  // step-i cells are the words of length i-1 from (1,1)
  for (long long step = 1; step <= max_step; ++step) {
    long long rmax = 0, count = 0;
    for (const Point& p : layer) {
      if (p.x > rmax) { rmax = p.x; count = 1; }
      else if (p.x == rmax) ++count;
    }
    stats.push_back({step, rmax, count});
    if (step == max_step) break;
    std::vector<Point> next;
    next.reserve(layer.size() * 2);
    for (const Point& p : layer) {
      next.push_back(apply_G(p));
      next.push_back(apply_S(p));
    }
    layer = std::move(next);
  }
  return stats;
}

long long odd_step_rows_match_c(const std::vector<StepRowStat>& stats) {
  for (const StepRowStat& s : stats) {
    if (s.step % 2 == 0) continue;
    long long j = (s.step - 1) / 2;
    if (rec_c(j + 1) != static_cast<__int128>(s.max_row)) return s.step;
  }
  return -1;
}

}  // namespace fixmat
