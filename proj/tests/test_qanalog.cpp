#include <doctest.h>

#include <random>

#include "macdonald.hpp"
#include "qanalog.hpp"
#include "verify.hpp"

using namespace rw;

TEST_SUITE("qanalog") {

TEST_CASE("combined weight") {
  CHECK(combined_weight({{1, 2, 1}, {1, 1, 1}}) == QPoly::q_power(2));
  CHECK(combined_weight({{1, 2, 1}, {1, 2, 1}}) == QPoly::q_power(1));
  CHECK(combined_weight({{}, {}}) == QPoly::constant(1));
}

TEST_CASE("specialized bounded pair polynomial") {
  CHECK(specialized_bpoly(Perm::from_window({3, 2, 1})).coeffs() ==
        std::vector<i64>{0, 1, 2, 2, 1});
  for (int r = 1; r <= 4; ++r)
    CHECK(specialized_bpoly(Perm::transposition(r, r + 1)) == q_int(r));
  CHECK(specialized_bpoly(Perm::identity()) == QPoly::constant(1));
  // It really is the combined-weight generating function.
  for (const Perm& pi : all_perms(4)) {
    QPoly total;
    for_each_bounded_pair(pi,
                          [&](const Word& a, const Word& b) { total += combined_weight({a, b}); });
    CHECK(total == specialized_bpoly(pi));
  }
}

TEST_CASE("insertion along a wire") {
  const Word a{4, 3, 5, 6, 4, 3, 5};
  CHECK(insert_along_wire(a, 5, 2) == Word{5, 4, 3, 5, 6, 5, 4, 5});
  CHECK(insert_along_wire(a, 5, 8) == Word{4, 3, 5, 6, 4, 3, 5, 4});
  CHECK(insert_along_wire({}, 4, 1) == Word{4});  // the spliced 3 is pushed once
  CHECK_THROWS_AS(insert_along_wire({1}, 2, 2), std::invalid_argument);  // top wire, letter 0
  CHECK_THROWS_AS(insert_along_wire({1, 1}, 3, 1), std::invalid_argument);  // not reduced
}

TEST_CASE("augmented comaj difference word") {
  CHECK(augmented_comaj_word({4, 3, 5, 6, 4, 3, 5}, 5).values ==
        std::vector<int>{7, 6, 5, 4, 8, 9, 10, 3});
  CHECK(augmented_comaj_word({4}, 5).values == std::vector<int>{4, 3});
  CHECK(augmented_comaj_word({}, 7).values == std::vector<int>{6});
  CHECK(augmented_comaj_word({}, 1).values == std::vector<int>{0});
  // The top-wire case runs through the spliced transient zero.
  CHECK(augmented_comaj_word({1}, 2).values == std::vector<int>{1, 0});
}

TEST_CASE("augmented comaj words are record permutations of an interval") {
  std::mt19937 rng(99);
  const auto s5 = all_perms(5);
  const auto s6 = all_perms(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Perm& pi = trial % 2 == 0 ? s5[rng() % s5.size()] : s6[rng() % s6.size()];
    const auto words = reduced_words(pi);
    if (words.empty()) continue;
    const Word& a = words[rng() % words.size()];
    const int p = static_cast<int>(a.size());
    for (int j = 1; j <= 7; ++j) {
      const auto v = augmented_comaj_word(a, j).values;
      const int h = wire_row(a, j, p + 1);
      std::vector<int> sorted = v;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> interval;
      for (int x = h - 1; x <= h + p - 1; ++x) interval.push_back(x);
      CHECK(sorted == interval);
      for (size_t i = 1; i < v.size(); ++i) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.begin() + i);
        CHECK((v[i] < *lo || v[i] > *hi));
      }
    }
  }
}

TEST_CASE("comaj insertion profile") {
  CHECK(comaj_insertion_profile({2, 3, 5, 2}, 4) == std::vector<int>{2, 1, 3, 0, 4});
  CHECK(comaj_insertion_profile({}, 9) == std::vector<int>{0});
  const auto small = comaj_insertion_profile({1, 3}, 2);
  std::vector<int> sorted = small;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(comaj_insertion_profile({1, 1, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(comaj_insertion_profile({1, 3}, 3), std::invalid_argument);
}

TEST_CASE("insertion profiles are permutations of 0..p") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    const int p = std::uniform_int_distribution<int>(0, 8)(rng);
    std::vector<int> a;
    while (static_cast<int>(a.size()) < p) {
      const int v = std::uniform_int_distribution<int>(1, 6)(rng);
      if (a.empty() || a.back() != v) a.push_back(v);
    }
    // Half-integer insertions are always distinct from the entries.
    const HalfInt j{2 * std::uniform_int_distribution<int>(1, 6)(rng) + 1};
    auto profile = comaj_insertion_profile(a, j);
    std::sort(profile.begin(), profile.end());
    std::vector<int> want;
    for (int x = 0; x <= p; ++x) want.push_back(x);
    CHECK(profile == want);
  }
}

TEST_CASE("bump images insert a half step in comaj terms") {
  for (const Perm& pi : all_perms(4)) {
    for (const Word& a : reduced_words(pi)) {
      for (int j = 1; j <= 5; ++j) {
        const auto rows = wire_insertion_rows(a, j);
        for (const auto& row : rows) {
          Word doubled;
          for (int v : a) doubled.push_back(2 * v);
          const Word half_spliced = insert_at(doubled, row.i, 2 * row.h - 1);
          CHECK(row.comaj_y == comaj(half_spliced));
        }
      }
    }
  }
}

TEST_CASE("one parameter transition identity") {
  const Report r = verify_q_transition(4);
  CHECK(r.ok);
  CHECK(r.rows.size() == 24);
  // Spot-check the [3,2,1] branch sum by hand: both sides q + 2q^2 + 2q^3 + q^4.
  const Perm pi = Perm::from_window({3, 2, 1});
  const TransitionContext ctx = transition_context(pi);
  QPoly rhs = q_int(3) * QPoly::q_power(ctx.r - 1) * specialized_bpoly(ctx.nu);
  for (const auto& [q, target] : ctx.lower) rhs += specialized_bpoly(target);
  CHECK(rhs.coeffs() == std::vector<i64>{0, 1, 2, 2, 1});
  CHECK(specialized_bpoly(pi) == rhs);
}

TEST_CASE("q analog of the counting identity") {
  const Report r = verify_q_macdonald(4);
  CHECK(r.ok);
  CHECK(r.rows.size() == 24);
  const QPoly lhs = specialized_bpoly(Perm::from_window({3, 2, 1}));
  const QPoly rhs =
      q_factorial(3) * principal_specialization(schubert(Perm::from_window({3, 2, 1})));
  CHECK(lhs == rhs);
  CHECK(lhs == q_factorial(3) * QPoly::q_power(1));
}

TEST_CASE("length and comaj share a generating function") {
  const Report r = verify_macmahon(6);
  CHECK(r.ok);
  CHECK(r.rows.size() == 5);  // n = 2..6
  QPoly total;
  for (const Perm& pi : all_perms(3)) total += QPoly::q_power(pi.length());
  CHECK(total.coeffs() == std::vector<i64>{1, 2, 2, 1});
  QPoly total2;
  for (const Perm& pi : all_perms(2)) total2 += QPoly::q_power(comaj(pi.window(2)));
  CHECK(total2.coeffs() == std::vector<i64>{1, 1});
}

}  // TEST_SUITE
