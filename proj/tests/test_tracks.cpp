#include "fixmat/tracks.hpp"

#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "fixmat/monoid.hpp"
#include "fixmat/sequences.hpp"
#include "fixmat/snapshot.hpp"

using namespace fixmat;

TEST_CASE("track vectors of sample cells") {
  for (long long m = 1; m <= 5; ++m)
    CHECK(track_vector({m, m}) == std::vector<long long>{m});
  CHECK(track_vector({35, 15}) == std::vector<long long>{1, 2, 2, 1});
  CHECK(track_vector({2, 1}) == std::vector<long long>{1, 1});
  CHECK(track_vector({6, 2}) == std::vector<long long>{2, 1, 1});
  CHECK_THROWS_AS(track_vector({7, 3}), std::invalid_argument);
}

TEST_CASE("breadth") {
  CHECK(breadth({9, 9}) == 0);
  CHECK(breadth({35, 15}) == 3);
  // (6,2) = G G S (1,1): two G letters, two descent steps to the diagonal
  CHECK(breadth({6, 2}) == 2);
}

TEST_CASE("track round trip reconstructs the cell") {
  for (long long n = 1; n <= 500; ++n)
    for (long long k = 1; k <= n; ++k) {
      if (!is_fixed_cell(n, k)) continue;
      std::vector<long long> t = track_vector({n, k});
      Word w;
      for (size_t i = t.size(); i-- > 0;) {
        // word S^{i_l} G ... G S^{i_0}, outermost letter first
        for (long long s = 0; s < t[i] - 1; ++s) w.push_back(Letter::S);
        if (i > 0) w.push_back(Letter::G);
      }
      CHECK(apply_word(w, {1, 1}) == Point{n, k});
    }
}

TEST_CASE("creation step equals the sum of track entries") {
  MatrixSnapshot snap = generate_by_orbit(200);
  for (long long n = 1; n <= 200; ++n)
    for (long long k : snap.row_cells(n)) {
      std::vector<long long> t = track_vector({n, k});
      long long sum = std::accumulate(t.begin(), t.end(), 0LL);
      CHECK(creation_step({n, k}, snap) == sum);
    }
}

TEST_CASE("pattern counts") {
  CHECK(count_track_patterns(1) == std::pair<long long, long long>{0, 0});
  CHECK(count_track_patterns(7) == std::pair<long long, long long>{1, 1});
  CHECK(count_track_patterns(8) == std::pair<long long, long long>{5, 5});
  std::vector<long long> a = a_table(300);
  for (long long n = 1; n <= 300; ++n) {
    auto [a1b, one_a_one] = count_track_patterns(n);
    CHECK(a1b == a[n] - 1);
    CHECK(one_a_one == a[n] - 1);
  }
}

TEST_CASE("breadth-3 counts") {
  CHECK(count_breadth3(1) == 0);
  CHECK(count_breadth3(35) == 1);  // the cell (35,15)
  CHECK(breadth({35, 15}) == 3);
}

TEST_CASE("subdiagonal periodicity") {
  CHECK(check_subdiagonal_period(0, 100).ok());
  PeriodReport r = check_subdiagonal_period(1, 17);
  CHECK(r.ok());
  CHECK(r.period == 3);
  // reference: subdiagonal 1 reads 1,0,0 repeating from row 2
  CHECK(is_fixed_cell(2, 1));
  CHECK_FALSE(is_fixed_cell(3, 2));
  CHECK_FALSE(is_fixed_cell(4, 3));
  CHECK(is_fixed_cell(5, 4));
  CHECK(is_fixed_cell(8, 7));
  CHECK(check_subdiagonal_period(20, 500).ok());
}

TEST_CASE("column periodicity") {
  for (long long n = 1; n <= 100; ++n) CHECK(is_fixed_cell(n, 1));
  PeriodReport r = check_column_period(2, 17);
  CHECK(r.ok());
  for (long long n = 2; n <= 17; ++n) CHECK(is_fixed_cell(n, 2) == (n % 2 == 0));
  CHECK(check_column_period(7, 700).ok());
}

TEST_CASE("parametric families") {
  // (k,d,i,j) = (t+1,1,0,1) gives (3t+2, 2t+2)
  for (long long t = 0; t <= 50; ++t) CHECK(is_fixed_cell(3 * t + 2, 2 * t + 2));
  FamilyReport kdij = check_family_kdij(6, 6, 6, 6);
  CHECK(kdij.ok());
  CHECK(kdij.checked == 6 * 7 * 7 * 7);
  CHECK(is_fixed_cell(4, 2));
  CHECK(is_fixed_cell(9, 4));
  CHECK(check_corollary_5t4(200).ok());
}

TEST_CASE("creation-step row statistics") {
  auto stats = creation_row_stats(10);
  REQUIRE(stats.size() == 10);
  CHECK(stats[0].step == 1);
  CHECK(stats[0].max_row == 1);
  CHECK(stats[0].cells_in_max == 1);
  CHECK(stats[1].max_row == 2);
  CHECK(stats[1].cells_in_max == 2);
  CHECK(stats[2].max_row == 5);
  CHECK(stats[3].max_row == 9);
  CHECK(stats[4].max_row == 20);
  CHECK(stats[5].max_row == 35);
  CHECK(stats[5].cells_in_max == 2);
  CHECK(stats[6].max_row == 76);
  CHECK(stats[7].max_row == 132);
  CHECK(odd_step_rows_match_c(stats) == -1);
}

TEST_CASE("step-6 maximal row cells are (35,15) and (35,26)") {
  MatrixSnapshot snap = generate_by_orbit(35);
  std::vector<long long> step6;
  for (long long k : snap.row_cells(35))
    if (*snap.creation_step({35, k}) == 6) step6.push_back(k);
  CHECK(step6 == std::vector<long long>{15, 26});
}
