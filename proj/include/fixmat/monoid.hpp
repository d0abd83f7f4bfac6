#ifndef FIXMAT_MONOID_HPP
#define FIXMAT_MONOID_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// Affine lattice maps G: (x,y) -> (x+y, y) and S: (x,y) -> (3x-2y+1, 2x-y+1),
// their homogeneous 3x3 integer matrix forms, closed-form powers, the
// ping-pong regions certifying that the monoid <S,G> is free, and a
// finite-range certificate that its action on the orbit of (1,1) is free.

namespace fixmat {

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct PointHash {
  size_t operator()(const Point& p) const noexcept {
    uint64_t h = static_cast<uint64_t>(p.x) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<uint64_t>(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

Point apply_G(Point p);
Point apply_S(Point p);

enum class Letter : char { S = 'S', G = 'G' };

// A word over {S,G}; the rightmost letter acts first.
using Word = std::vector<Letter>;

Point apply_word(const Word& w, Point p);

// 3x3 integer matrix with last row (0,0,1). Entries are 128-bit because the
// closed-form entries grow like 4^i; arithmetic is overflow-checked and
// throws std::overflow_error.
struct HomMatrix3 {
  __int128 m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  static HomMatrix3 identity() { return {}; }
  static HomMatrix3 gen_G();
  static HomMatrix3 gen_S();

  HomMatrix3 operator*(const HomMatrix3& rhs) const;
  bool operator==(const HomMatrix3& rhs) const;

  // Applies the affine map to (x,y,1); requires the result to fit long long.
  Point apply(Point p) const;

  // Inverse of a matrix whose 2x2 block is unimodular (det = +/-1).
  HomMatrix3 inverse() const;

  std::string to_string() const;
};

enum class ClosedFormKind { GPow, SPow, SPowG, SGPow };

// Closed forms of G^i, S^i, S^iG and (SG)^i.
HomMatrix3 closed_form(ClosedFormKind kind, long long i);

// The linear recurrences underlying (SG)^i:
//   a(n) = 4a(n-1) - a(n-2), a(0)=1, a(1)=3
//   b(n) = 4b(n-1) - b(n-2), b(0)=0, b(1)=1
//   c(n) = 5c(n-1) - 5c(n-2) + c(n-3), c(1)=1, c(n)=0 for n<=0
//   d(n) = 4d(n-1) - d(n-2), d(0)=0, d(1)=2
__int128 rec_a(long long n);
__int128 rec_b(long long n);
__int128 rec_c(long long n);
__int128 rec_d(long long n);

enum class Region { X1, X2, Outside };

// Ping-pong regions, evaluated with exact integer cross-multiplications:
//   X1: 2x+1 > 0, 0 < y, 4y < 2x+1
//   X2: 2x+1 > 0, 3y > 2x+1, 2y < 2x+1
Region classify_region(Point p);

struct PingPongReport {
  long long bound = 0;
  long long points_in_regions = 0;
  std::vector<Point> counterexamples;  // points where G/S leave the target region
  bool ok() const { return counterexamples.empty(); }
};

// Scans 0 <= x,y <= bound and checks G(X1 u X2) in X1, S(X1 u X2) in X2.
PingPongReport verify_pingpong(long long bound);

// True iff (G S^-1)^4 is the identity.
bool gs_inverse_identity();

struct FreeActionReport {
  long long row_bound = 0;
  long long orbit_size = 0;  // points reached from (1,1), rows <= row_bound
  std::vector<Point> duplicates;
  bool ok() const { return duplicates.empty(); }
};

// BFS of the orbit of (1,1) under {G,S}, pruning rows > row_bound. Both maps
// strictly increase x on points with 1 <= y <= x, so pruning is exact.
FreeActionReport certify_free_action(long long row_bound);

}  // namespace fixmat

#endif
