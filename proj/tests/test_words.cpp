#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "words.hpp"

using namespace rw;

TEST_SUITE("words") {

TEST_CASE("evaluate") {
  CHECK(evaluate({1, 2, 1}) == Perm::from_window({3, 2, 1}));
  CHECK(evaluate({}) == Perm::identity());
  CHECK(evaluate({4, 3, 5, 6, 4, 3, 5}) == Perm::from_window({1, 2, 6, 5, 7, 3, 4}));
  CHECK_THROWS_AS(evaluate({1, 0}), std::invalid_argument);
}

TEST_CASE("reduced status") {
  CHECK(word_status({1, 2, 1}) == WordStatus::reduced);
  CHECK(is_reduced({1, 2, 1}));
  CHECK_FALSE(is_reduced({2, 1, 2, 1}));
  CHECK(is_nearly_reduced_at({2, 1, 2, 1}, 1));
  CHECK(word_status({2, 1, 2, 1}) == WordStatus::nearly_reduced);
  CHECK_FALSE(is_reduced({1, 1}));
  CHECK(is_nearly_reduced_at({1, 1}, 1));
  CHECK(is_nearly_reduced_at({1, 1}, 2));
  CHECK(word_status({1, 2, 1, 1, 2, 1}) == WordStatus::neither);
  CHECK_THROWS_AS(is_nearly_reduced_at({1, 2}, 3), std::invalid_argument);
}

TEST_CASE("defect") {
  CHECK(defect({2, 1, 2, 1}, 1) == 4);
  CHECK(defect({2, 1, 2, 1}, 4) == 1);
  CHECK(defect({1, 2, 1, 1}, 3) == 4);
  CHECK_THROWS_AS(defect({1, 2, 1}, 1), std::invalid_argument);   // reduced
  CHECK(defect({1, 2, 1, 2}, 1) == 4);  // nearly reduced at 1: deleting it gives (2,1,2)
  CHECK_THROWS_AS(defect({1, 2, 1, 2}, 2), std::invalid_argument);  // not nearly reduced at 2
}

TEST_CASE("right labeled crossings") {
  CHECK(right_labeled_crossing({1, 3, 2}, 1) == WirePair{1, 3});
  CHECK(right_labeled_crossing({2, 3, 2}, 1) == WirePair{3, 4});
  CHECK(right_labeled_crossing({1}, 1) == WirePair{1, 2});
  CHECK(column_of_crossing({2, 3, 2}, {3, 4}) == 1);
  CHECK(column_of_crossing({1, 3, 2}, {1, 3}) == 1);
  CHECK(column_of_crossing({1}, {1, 2}) == 1);
  CHECK_THROWS_AS(column_of_crossing({1}, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(right_labeled_crossing({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("crossings enumerate the inversion set") {
  for (const Perm& pi : all_perms(4)) {
    const auto inv = pi.inversions();
    const std::set<WirePair> inv_set(inv.begin(), inv.end());
    for (const Word& a : reduced_words(pi)) {
      std::set<WirePair> seen;
      for (int t = 1; t <= static_cast<int>(a.size()); ++t)
        CHECK(seen.insert(right_labeled_crossing(a, t)).second);
      CHECK(seen == inv_set);
      for (const WirePair& pr : inv_set)
        CHECK(right_labeled_crossing(a, column_of_crossing(a, pr)) == pr);
    }
  }
}

TEST_CASE("defect is an involution on single insertions") {
  for (const Perm& pi : all_perms(4)) {
    for (const Word& a : reduced_words(pi)) {
      for (int t = 1; t <= static_cast<int>(a.size()) + 1; ++t) {
        for (int x = 1; x <= 4; ++x) {
          const Word w = insert_at(a, t, x);
          if (is_reduced(w)) continue;
          // w is nearly reduced at t by construction
          const int t2 = defect(w, t);
          CHECK(t2 != t);
          CHECK(defect(w, t2) == t);
        }
      }
    }
  }
}

TEST_CASE("comaj and ascents") {
  CHECK(comaj({1, 2, 1}) == 1);
  CHECK(ascent_set({1, 2, 1}) == std::vector<int>{1});
  CHECK(comaj({2, 1, 2}) == 2);
  CHECK(ascent_set({2, 1, 2}) == std::vector<int>{2});
  CHECK(comaj({4, 3, 5, 6, 4, 3, 5}) == 11);
  CHECK(ascent_set({4, 3, 5, 6, 4, 3, 5}) == std::vector<int>{2, 3, 6});
  CHECK(comaj({}) == 0);
  CHECK(ascent_set({}).empty());
}

TEST_CASE("comaj stays within the staircase bound") {
  for (const Perm& pi : all_perms(4))
    for (const Word& a : reduced_words(pi)) {
      const int p = static_cast<int>(a.size());
      const int cm = comaj(a);
      CHECK(cm >= 0);
      CHECK(cm <= p * (p - 1) / 2);
      int total = 0;
      for (int i : ascent_set(a)) total += i;
      CHECK(cm == total);
    }
}

TEST_CASE("reduced word enumeration") {
  CHECK(reduced_words(Perm::from_window({3, 2, 1})) ==
        std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  CHECK(reduced_words(Perm::identity()) == std::vector<Word>{{}});
  const auto big = reduced_words(Perm::from_window({4, 3, 2, 1}));
  CHECK(big.size() == 16);
  CHECK(big.size() == static_cast<size_t>(oracle::syt_count({3, 2, 1})));
  CHECK(std::is_sorted(big.begin(), big.end()));
  for (const Word& a : big) {
    CHECK(is_reduced(a));
    CHECK(evaluate(a) == Perm::from_window({4, 3, 2, 1}));
  }
}

TEST_CASE("wire rows") {
  const Word a{4, 3, 5, 6, 4, 3, 5};
  CHECK(wire_row(a, 5, 2) == 4);
  CHECK(wire_row(a, 5, 1) == 5);
  CHECK(wire_row({2, 1, 2}, 7, 1) == 7);
  CHECK(wire_row(a, 5, 8) == 4);
  CHECK_THROWS_AS(wire_row(a, 5, 9), std::invalid_argument);
  CHECK_THROWS_AS(wire_row(a, 0, 1), std::invalid_argument);
}

}  // TEST_SUITE
