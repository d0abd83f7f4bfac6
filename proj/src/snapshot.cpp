#include "fixmat/snapshot.hpp"

#include <sstream>
#include <stdexcept>

namespace fixmat {

MatrixSnapshot::MatrixSnapshot(long long max_row) : max_row_(max_row) {
  if (max_row < 0) throw std::invalid_argument("MatrixSnapshot: negative row bound");
  rows_.resize(static_cast<size_t>(max_row) + 1);
  for (long long n = 0; n <= max_row; ++n)
    rows_[n].assign((static_cast<size_t>(n) + 64) / 64, 0);
}

bool MatrixSnapshot::set(long long n, long long k) {
  auto& word = rows_[n][static_cast<size_t>(k) >> 6];
  uint64_t mask = 1ULL << (k & 63);
  if (word & mask) return false;
  word |= mask;
  return true;
}

std::vector<long long> MatrixSnapshot::row_cells(long long n) const {
  std::vector<long long> out;
  const auto& r = rows_[n];
  for (size_t w = 0; w < r.size(); ++w) {
    uint64_t bits = r[w];
    while (bits) {
      int b = __builtin_ctzll(bits);
      out.push_back(static_cast<long long>(w * 64 + static_cast<size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

void MatrixSnapshot::record_step(Cell c, long long step) {
  has_steps_ = true;
  steps_.emplace(c, step);
}

std::optional<long long> MatrixSnapshot::creation_step(Cell c) const {
  auto it = steps_.find(c);
  if (it == steps_.end()) return std::nullopt;
  return it->second;
}

MatrixSnapshot generate_by_steps(long long max_row) {
  MatrixSnapshot snap(max_row);
  snap.set(0, 0);
  snap.record_step({0, 0}, 0);
  // Cells whose value changed during the previous step. The G-child of
  // (0,0) is (0,0) itself and is skipped; all other children strictly
  // increase the row, so pruning at max_row is exact.
  std::vector<Cell> changed{{0, 0}};
  long long step = 1;
  while (!changed.empty()) {
    std::vector<Cell> next;
    for (Cell c : changed) {
      Cell g{c.n + c.k, c.k};
      Cell s{3 * c.n + 1 - 2 * c.k, 2 * c.n + 1 - c.k};
      for (Cell child : {g, s}) {
        if (child == c) continue;  // (0,0) self-loop
        if (child.n > max_row) continue;
        if (!snap.set(child.n, child.k))
          throw std::logic_error("generate_by_steps: cell set twice (0-1 violation)");
        snap.record_step(child, step);
        next.push_back(child);
      }
    }
    changed = std::move(next);
    ++step;
  }
  return snap;
}

MatrixSnapshot generate_by_orbit(long long max_row) {
  MatrixSnapshot snap(max_row);
  snap.set(0, 0);
  snap.record_step({0, 0}, 0);
  if (max_row < 1) return snap;
  snap.set(1, 1);
  snap.record_step({1, 1}, 1);
  std::vector<Point> layer{{1, 1}};
  long long step = 2;  // creation step = 1 + word length from (1,1)
  while (!layer.empty()) {
    std::vector<Point> next;
    for (Point p : layer) {
      for (Point child : {apply_G(p), apply_S(p)}) {
        if (child.x > max_row) continue;
        if (!snap.set(child.x, child.y))
          throw std::logic_error("generate_by_orbit: duplicate orbit point");
        snap.record_step({child.x, child.y}, step);
        next.push_back(child);
      }
    }
    layer = std::move(next);
    ++step;
  }
  return snap;
}

MatrixSnapshot generate_by_descent(long long max_row) {
  MatrixSnapshot snap(max_row);
  snap.set(0, 0);
  // Bottom-up: row n only consults rows below it, so F(n,k) = F(n-k,h) is
  // a single bit test against an already-built row. For 3k <= 2n the
  // modulus exceeds k and h = k, no division needed.
  for (long long n = 1; n <= max_row; ++n) {
    for (long long k = 1; k < n; ++k) {
      long long x = n - k;
      long long m = 2 * x + 1;
      long long h = (k < m) ? k : k % m;
      if (snap.test(x, h)) snap.set(n, k);
    }
    snap.set(n, n);
  }
  return snap;
}

long long creation_step(Cell c, const MatrixSnapshot& snap) {
  if (!snap.has_steps()) throw std::invalid_argument("creation_step: snapshot has no step labels");
  auto s = snap.creation_step(c);
  if (!s) throw std::invalid_argument("creation_step: cell is not set");
  return *s;
}

AgreementReport methods_agree(long long max_row) {
  AgreementReport rep;
  rep.max_row = max_row;
  MatrixSnapshot by_steps = generate_by_steps(max_row);
  MatrixSnapshot by_orbit = generate_by_orbit(max_row);
  MatrixSnapshot by_descent = generate_by_descent(max_row);
  for (long long n = 0; n <= max_row; ++n) {
    if (by_steps.row_words(n) != by_orbit.row_words(n) ||
        by_steps.row_words(n) != by_descent.row_words(n)) {
      for (long long k = 0; k <= n; ++k) {
        int a = by_steps.test(n, k), b = by_orbit.test(n, k), c = by_descent.test(n, k);
        if (a != b || a != c) {
          std::ostringstream os;
          os << "bit mismatch at (" << n << "," << k << "): steps=" << a << " orbit=" << b
             << " descent=" << c;
          rep.ok = false;
          rep.detail = os.str();
          return rep;
        }
      }
    }
    for (long long k : by_steps.row_cells(n)) {
      auto s = by_steps.creation_step({n, k});
      auto o = by_orbit.creation_step({n, k});
      if (!s || !o || *s != *o) {
        std::ostringstream os;
        os << "creation-step mismatch at (" << n << "," << k << ")";
        rep.ok = false;
        rep.detail = os.str();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace fixmat
