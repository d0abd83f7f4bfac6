#ifndef FIXMAT_TRACKS_HPP
#define FIXMAT_TRACKS_HPP

#include <utility>
#include <vector>

#include "fixmat/descent.hpp"

// Track vectors (the S/G normal-form encoding of a cell), breadth,
// track-pattern counting, periodicity of subdiagonals and columns,
// parametric 1-cell families, and creation-step row statistics.

namespace fixmat {

// The tuple (i_0+1, ..., i_l+1) with (n,k) = S^{i_l} G ... G S^{i_0} (1,1);
// breadth = l. Requires a set cell with n >= 1.
std::vector<long long> track_vector(Cell c);
long long breadth(Cell c);

// Counts over the set cells of row n:
//  first:  tracks of the form (a, (1)^p, b), a,b >= 1, p >= 0 (length >= 2,
//          every interior entry 1)
//  second: tracks of the form ((1)^p, a, (1)^q), p,q >= 0, a >= 2 (exactly
//          one entry >= 2)
// Both counts equal a_n - 1.
std::pair<long long, long long> count_track_patterns(long long n);

long long count_breadth3(long long n);

struct PeriodReport {
  long long index = 0;   // a
  long long period = 0;  // claimed period
  long long max_row = 0;
  std::vector<Cell> violations;
  bool ok() const { return violations.empty(); }
};

// Subdiagonal a of F is periodic with period 2a+1:
// F(n, n-a) = F(n', n'-a) whenever n = n' mod 2a+1, a < n,n' <= N.
PeriodReport check_subdiagonal_period(long long a, long long max_row);

// Column a is eventually periodic with period a: F(n,a) = F(n-a,a) once
// 2(n-a)+1 > a.
PeriodReport check_column_period(long long a, long long max_row);

struct FamilyReport {
  long long checked = 0;
  std::vector<Cell> failures;
  bool ok() const { return failures.empty(); }
};

// F(kd + id + j(i+1)(2(k-1)d+1), d + j(2(k-1)d+1)) = 1 for all k >= 1 and
// d,i,j >= 0.
FamilyReport check_family_kdij(long long k_max, long long d_max, long long i_max,
                               long long j_max);

// F(5t+4, 2t+2) = 1 for t = 0..t_max.
FamilyReport check_corollary_5t4(long long t_max);

struct StepRowStat {
  long long step = 0;
  long long max_row = 0;       // r_i
  long long cells_in_max = 0;  // step-i cells in row r_i
};

// BFS layer statistics without a row bound: for each step i <= max_step,
// the maximal row r_i holding a step-i cell and how many step-i cells that
// row holds. Layer i holds 2^(i-1) points; rows grow ~3.73x every two
// steps, so max_step is capped at 24 to stay within 64 bits.
std::vector<StepRowStat> creation_row_stats(long long max_step);

// Empirical alignment of the odd-step row maxima with the c(.) recurrence:
// r_{2j+1} = c(j+1). Returns the first violating step, or -1 if none.
long long odd_step_rows_match_c(const std::vector<StepRowStat>& stats);

}  // namespace fixmat

#endif
