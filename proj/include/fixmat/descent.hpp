#ifndef FIXMAT_DESCENT_HPP
#define FIXMAT_DESCENT_HPP

#include <vector>

// The modular descent characterizing membership in the matrix F:
//   F(n,k) = F(n-k, k mod (2(n-k)+1)),  F(0,0) = 1.
// Each step strictly decreases n, so membership of any cell is decidable by
// iterating the step.

namespace fixmat {

struct Cell {
  long long n = 0;  // row (semilength)
  long long k = 0;  // column (principal-prefix length)
  friend bool operator==(const Cell&, const Cell&) = default;
};

// One descent stage: (n,k) -> (n-k, h) with h = k mod (2(n-k)+1); the
// exponent i = (k-h)/(2(n-k)+1) recovers the S^iG normal-form letter.
struct DescentStage {
  long long n, k;
  long long modulus;   // 2(n-k)+1
  long long h;         // k mod modulus
  long long exponent;  // (k-h) / modulus
};

// Requires 1 <= k <= n.
Cell phi_step(Cell c);

// F(n,k) as 0/1 for arbitrary n,k >= 0.
bool is_fixed_cell(Cell c);
inline bool is_fixed_cell(long long n, long long k) { return is_fixed_cell({n, k}); }

// Full descent of a cell down to a diagonal cell (m,m); empty when k = n.
std::vector<DescentStage> descent_trace(Cell c);

}  // namespace fixmat

#endif
