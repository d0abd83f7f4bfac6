#ifndef FIXMAT_SNAPSHOT_HPP
#define FIXMAT_SNAPSHOT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixmat/descent.hpp"
#include "fixmat/kernels.hpp"
#include "fixmat/monoid.hpp"

// Dense snapshots of F up to a row bound, built three independent ways:
// the creation-step process, BFS of the monoid orbit of (1,1), and the
// modular-descent membership test. Rows are packed bit arrays; creation
// steps live in a sparse map (only the step and orbit builders produce
// them).

namespace fixmat {

struct CellHash {
  size_t operator()(const Cell& c) const noexcept {
    return PointHash{}(Point{c.n, c.k});
  }
};

class MatrixSnapshot {
 public:
  explicit MatrixSnapshot(long long max_row);

  long long max_row() const { return max_row_; }

  bool test(long long n, long long k) const {
    if (n < 0 || n > max_row_ || k < 0 || k > n) return false;
    return (rows_[n][static_cast<size_t>(k) >> 6] >> (k & 63)) & 1;
  }

  // Sets a cell; returns false if it was already set (a 0-1 violation in
  // the step/orbit builders).
  bool set(long long n, long long k);

  long long row_sum(long long n) const {
    const auto& r = rows_[n];
    return static_cast<long long>(kernels::popcount_words(r.data(), r.size()));
  }

  // Columns of the set cells of row n, ascending.
  std::vector<long long> row_cells(long long n) const;

  bool has_steps() const { return has_steps_; }
  void record_step(Cell c, long long step);
  std::optional<long long> creation_step(Cell c) const;

  const std::vector<uint64_t>& row_words(long long n) const { return rows_[n]; }

 private:
  long long max_row_;
  std::vector<std::vector<uint64_t>> rows_;
  bool has_steps_ = false;
  std::unordered_map<Cell, long long, CellHash> steps_;
};

MatrixSnapshot generate_by_steps(long long max_row);
MatrixSnapshot generate_by_orbit(long long max_row);
MatrixSnapshot generate_by_descent(long long max_row);

// Step label of a set cell; throws if the cell is unset or the snapshot
// carries no labels.
long long creation_step(Cell c, const MatrixSnapshot& snap);

struct AgreementReport {
  long long max_row = 0;
  bool ok = true;
  std::string detail;  // first mismatch, when any
};

// Bit-level equality of the three builders plus step-label equality
// between the step and orbit builders.
AgreementReport methods_agree(long long max_row);

}  // namespace fixmat

#endif
