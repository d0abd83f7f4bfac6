#include "fixmat/monoid.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace fixmat {

namespace {

__int128 checked_add(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("HomMatrix3 add overflow");
  return r;
}

__int128 checked_mul(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("HomMatrix3 mul overflow");
  return r;
}

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace

Point apply_G(Point p) { return {p.x + p.y, p.y}; }

Point apply_S(Point p) { return {3 * p.x - 2 * p.y + 1, 2 * p.x - p.y + 1}; }

Point apply_word(const Word& w, Point p) {
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    p = (*it == Letter::G) ? apply_G(p) : apply_S(p);
  return p;
}

HomMatrix3 HomMatrix3::gen_G() {
  HomMatrix3 g;
  g.m[0][1] = 1;
  return g;
}

HomMatrix3 HomMatrix3::gen_S() {
  HomMatrix3 s;
  s.m[0][0] = 3; s.m[0][1] = -2; s.m[0][2] = 1;
  s.m[1][0] = 2; s.m[1][1] = -1; s.m[1][2] = 1;
  return s;
}

HomMatrix3 HomMatrix3::operator*(const HomMatrix3& rhs) const {
  HomMatrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      __int128 acc = 0;
      for (int k = 0; k < 3; ++k) acc = checked_add(acc, checked_mul(m[i][k], rhs.m[k][j]));
      out.m[i][j] = acc;
    }
  return out;
}

bool HomMatrix3::operator==(const HomMatrix3& rhs) const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != rhs.m[i][j]) return false;
  return true;
}

Point HomMatrix3::apply(Point p) const {
  __int128 x = checked_add(checked_add(checked_mul(m[0][0], p.x), checked_mul(m[0][1], p.y)), m[0][2]);
  __int128 y = checked_add(checked_add(checked_mul(m[1][0], p.x), checked_mul(m[1][1], p.y)), m[1][2]);
  constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
  if (x < lo || x > hi || y < lo || y > hi) throw std::overflow_error("point out of 64-bit range");
  return {static_cast<long long>(x), static_cast<long long>(y)};
}

HomMatrix3 HomMatrix3::inverse() const {
  __int128 a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
  __int128 det = a * d - b * c;
  if (det != 1 && det != -1) throw std::invalid_argument("2x2 block is not unimodular");
  HomMatrix3 inv;
  inv.m[0][0] = d * det;  inv.m[0][1] = -b * det;
  inv.m[1][0] = -c * det; inv.m[1][1] = a * det;
  // translation: -A^-1 t
  inv.m[0][2] = -(inv.m[0][0] * m[0][2] + inv.m[0][1] * m[1][2]);
  inv.m[1][2] = -(inv.m[1][0] * m[0][2] + inv.m[1][1] * m[1][2]);
  return inv;
}

std::string HomMatrix3::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += (i ? "; " : "");
    for (int j = 0; j < 3; ++j) s += (j ? "," : "") + int128_to_string(m[i][j]);
  }
  return s + "]";
}

namespace {

// Runs x(n) = 4x(n-1) - x(n-2) forward from x(0), x(1).
__int128 rec4(long long n, __int128 x0, __int128 x1) {
  if (n <= 0) return x0;
  __int128 prev = x0, cur = x1;
  for (long long i = 2; i <= n; ++i) {
    __int128 next = checked_add(checked_mul(4, cur), -prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

__int128 rec_a(long long n) { return rec4(n, 1, 3); }
__int128 rec_b(long long n) { return rec4(n, 0, 1); }
__int128 rec_d(long long n) { return rec4(n, 0, 2); }

__int128 rec_c(long long n) {
  if (n <= 0) return 0;
  // c(n) = 5c(n-1) - 5c(n-2) + c(n-3), c(1) = 1
  __int128 c0 = 0, c1 = 0, c2 = 0;  // c(n-3), c(n-2), c(n-1)
  __int128 cur = 1;
  for (long long i = 2; i <= n; ++i) {
    c0 = c1; c1 = c2; c2 = cur;
    cur = checked_add(checked_add(checked_mul(5, c2), checked_mul(-5, c1)), c0);
  }
  return cur;
}

HomMatrix3 closed_form(ClosedFormKind kind, long long i) {
  if (i < 0) throw std::invalid_argument("closed_form: negative exponent");
  HomMatrix3 r;
  switch (kind) {
    case ClosedFormKind::GPow:
      r.m[0][1] = i;
      return r;
    case ClosedFormKind::SPow:
      r.m[0][0] = 2 * static_cast<__int128>(i) + 1;
      r.m[0][1] = -2 * static_cast<__int128>(i);
      r.m[0][2] = i;
      r.m[1][0] = 2 * static_cast<__int128>(i);
      r.m[1][1] = -(2 * static_cast<__int128>(i) - 1);
      r.m[1][2] = i;
      return r;
    case ClosedFormKind::SPowG:
      r.m[0][0] = 2 * static_cast<__int128>(i) + 1;
      r.m[0][1] = 1;
      r.m[0][2] = i;
      r.m[1][0] = 2 * static_cast<__int128>(i);
      r.m[1][1] = 1;
      r.m[1][2] = i;
      return r;
    case ClosedFormKind::SGPow:
      if (i == 0) return HomMatrix3::identity();
      r.m[0][0] = rec_a(i);
      r.m[0][1] = rec_b(i);
      r.m[0][2] = rec_c(i);
      r.m[1][0] = rec_d(i);
      r.m[1][1] = rec_a(i - 1);
      r.m[1][2] = rec_b(i);
      return r;
  }
  throw std::logic_error("unreachable");
}

Region classify_region(Point p) {
  long long x = p.x, y = p.y;
  if (2 * x + 1 > 0 && 0 < y && 4 * y < 2 * x + 1) return Region::X1;
  if (2 * x + 1 > 0 && 3 * y > 2 * x + 1 && 2 * y < 2 * x + 1) return Region::X2;
  return Region::Outside;
}

PingPongReport verify_pingpong(long long bound) {
  if (bound < 1) throw std::invalid_argument("verify_pingpong: bound must be >= 1");
  PingPongReport rep;
  rep.bound = bound;
  for (long long x = 0; x <= bound; ++x)
    for (long long y = 0; y <= bound; ++y) {
      Point p{x, y};
      Region r = classify_region(p);
      if (r == Region::Outside) continue;
      ++rep.points_in_regions;
      if (classify_region(apply_G(p)) != Region::X1 || classify_region(apply_S(p)) != Region::X2)
        rep.counterexamples.push_back(p);
    }
  return rep;
}

bool gs_inverse_identity() {
  HomMatrix3 s_inv = HomMatrix3::gen_S().inverse();
  HomMatrix3 gsi = HomMatrix3::gen_G() * s_inv;
  HomMatrix3 p = gsi * gsi;
  return (p * p) == HomMatrix3::identity();
}

FreeActionReport certify_free_action(long long row_bound) {
  if (row_bound < 1) throw std::invalid_argument("certify_free_action: row_bound must be >= 1");
  FreeActionReport rep;
  rep.row_bound = row_bound;
  std::unordered_set<Point, PointHash> seen;
  std::deque<Point> frontier;
  seen.insert({1, 1});
  frontier.push_back({1, 1});
  while (!frontier.empty()) {
    Point p = frontier.front();
    frontier.pop_front();
    for (Point child : {apply_G(p), apply_S(p)}) {
      if (child.x > row_bound) continue;
      if (!seen.insert(child).second)
        rep.duplicates.push_back(child);
      else
        frontier.push_back(child);
    }
  }
  rep.orbit_size = static_cast<long long>(seen.size());
  return rep;
}

}  // namespace fixmat
