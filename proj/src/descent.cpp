#include "fixmat/descent.hpp"

#include <stdexcept>

namespace fixmat {

Cell phi_step(Cell c) {
  if (c.k < 1 || c.k > c.n) throw std::invalid_argument("phi_step: requires 1 <= k <= n");
  long long m = 2 * (c.n - c.k) + 1;
  return {c.n - c.k, c.k % m};
}

bool is_fixed_cell(Cell c) {
  long long n = c.n, k = c.k;
  while (true) {
    if (n == 0) return k == 0;
    if (k == 0 || k > n) return false;
    if (k == n) return true;
    long long m = 2 * (n - k) + 1;
    long long h = k % m;
    n -= k;
    k = h;
  }
}

std::vector<DescentStage> descent_trace(Cell c) {
  if (!is_fixed_cell(c)) throw std::invalid_argument("descent_trace: cell is zero in F");
  std::vector<DescentStage> trace;
  while (c.n != c.k) {
    long long m = 2 * (c.n - c.k) + 1;
    long long h = c.k % m;
    trace.push_back({c.n, c.k, m, h, (c.k - h) / m});
    c = {c.n - c.k, h};
  }
  return trace;
}

}  // namespace fixmat
