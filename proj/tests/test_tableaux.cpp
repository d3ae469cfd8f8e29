#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tableaux.hpp"
#include "verify.hpp"

using namespace rw;

TEST_SUITE("tableaux") {

TEST_CASE("insertion basics") {
  const EGResult one = eg_insert({1});
  CHECK(one.p == Tableau{{1}});
  CHECK(one.q == Tableau{{1}});
  const EGResult braid1 = eg_insert({1, 2, 1});
  const EGResult braid2 = eg_insert({2, 1, 2});
  CHECK(braid1.p == braid2.p);
  CHECK(braid1.p == Tableau{{1, 2}, {2}});
  CHECK(braid1.q != braid2.q);
  CHECK_THROWS_AS(eg_insert({1, 1}), std::invalid_argument);
}

TEST_CASE("insertion tableaux strictly increase and fibers count standard tableaux") {
  for (const Perm& pi : all_perms(4)) {
    std::map<Tableau, std::set<Tableau>> fibers;
    size_t total = 0;
    for (const Word& a : reduced_words(pi)) {
      ++total;
      const EGResult eg = eg_insert(a);
      CHECK(tableau_shape(eg.p) == tableau_shape(eg.q));
      for (size_t u = 0; u < eg.p.size(); ++u)
        for (size_t v = 0; v < eg.p[u].size(); ++v) {
          if (v > 0) CHECK(eg.p[u][v] > eg.p[u][v - 1]);
          if (u > 0 && eg.p[u - 1].size() > v) CHECK(eg.p[u][v] > eg.p[u - 1][v]);
        }
      CHECK(fibers[eg.p].insert(eg.q).second);  // (P,Q) injective
    }
    size_t by_fibers = 0;
    for (const auto& [p_tab, qs] : fibers) {
      CHECK(qs.size() == static_cast<size_t>(oracle::syt_count(tableau_shape(p_tab))));
      by_fibers += qs.size();
    }
    CHECK(by_fibers == total);
  }
}

TEST_CASE("pipe dreams become flagged tableaux") {
  // lambda = (2,1), x = 0: the single pipe dream maps to the row-filling.
  const auto dreams = pipe_dreams(dominant_from_partition({2, 1}));
  REQUIRE(dreams.size() == 1);
  CHECK(pipedream_to_flagged(dreams[0], 0) == Tableau{{1, 1}, {2}});
  // lambda = (1): x+1 single-cell pipe dreams and tableaux.
  for (int x = 0; x <= 2; ++x) {
    const auto cells = pipe_dreams(shift_embed(x, dominant_from_partition({1})));
    CHECK(cells.size() == static_cast<size_t>(x + 1));
    std::set<Tableau> seen;
    for (const PipeDream& d : cells) {
      const Tableau t = pipedream_to_flagged(d, x);
      CHECK(tableau_shape(t) == std::vector<int>{1});
      CHECK(t[0][0] <= 1 + x);
      seen.insert(t);
    }
    CHECK(seen.size() == cells.size());
  }
  CHECK(pipedream_to_flagged(PipeDream(), 2).empty());
  CHECK_THROWS_AS(pipedream_to_flagged(PipeDream::from_cells({{2, 1}}), 0),
                  std::invalid_argument);  // [1,3,2] is not dominant
}

TEST_CASE("flagged tableaux and reverse plane partitions") {
  CHECK(flagged_to_rpp({{1, 1}, {2}}, {2, 1}, 0) == Tableau{{0, 0}, {0}});
  CHECK(rpp_to_flagged({{0, 0}, {0}}, {2, 1}, 0) == Tableau{{1, 1}, {2}});
  CHECK(flagged_to_rpp({{1 + 2}}, {1}, 2) == Tableau{{2}});
  CHECK_THROWS_AS(flagged_to_rpp({{1, 3}, {2}}, {2, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(flagged_to_rpp({{1, 1}}, {2, 1}, 1), std::invalid_argument);
  for (int x = 0; x <= 2; ++x) {
    const auto rpps = enumerate_rpp({2, 1}, x);
    for (const Tableau& k : rpps)
      CHECK(flagged_to_rpp(rpp_to_flagged(k, {2, 1}, x), {2, 1}, x) == k);
  }
}

TEST_CASE("reverse plane partition enumeration") {
  CHECK(enumerate_rpp({1}, 2).size() == 3);
  CHECK(rpp_q_weight({1}, 2) == q_int(3));
  CHECK(enumerate_rpp({2, 1}, 0).size() == 1);
  CHECK(rpp_q_weight({2, 1}, 0) == QPoly::constant(1));
  // Must match the five terms of the Schubert polynomial of [1,4,3,2]:
  // the fillings 000, 010, 001, 011, 111 of the hook.
  CHECK(enumerate_rpp({2, 1}, 1).size() == 5);
  CHECK(enumerate_rpp({}, 3) == std::vector<Tableau>{{}});
}

TEST_CASE("the three families match in size") {
  const std::vector<Partition> shapes{{1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}};
  for (const Partition& lambda : shapes) {
    for (int x = 0; x <= 2; ++x) {
      const auto dreams = pipe_dreams(shift_embed(x, dominant_from_partition(lambda)));
      const auto flagged = enumerate_flagged(lambda, x);
      const auto rpps = enumerate_rpp(lambda, x);
      CHECK(dreams.size() == flagged.size());
      CHECK(flagged.size() == rpps.size());
      // D -> I_D -> K_D is injective and weight preserving.
      std::set<Tableau> images;
      for (const PipeDream& d : dreams) {
        const Tableau i_d = pipedream_to_flagged(d, x);
        CHECK(images.insert(i_d).second);
        const Tableau k = flagged_to_rpp(i_d, lambda, x);
        CHECK(principal_specialization(d.weight()) ==
              QPoly::q_power(b_of_lambda(lambda) + rpp_entry_sum(k)));
      }
      for (const Tableau& t : flagged) CHECK(images.count(t) == 1);
    }
  }
}

TEST_CASE("minimal specialized weight is b(lambda)") {
  const std::vector<Partition> shapes{{1}, {2, 1}, {2, 2}, {3, 1}};
  for (const Partition& lambda : shapes) {
    int min_deg = -1;
    for (const PipeDream& d : pipe_dreams(dominant_from_partition(lambda))) {
      const int deg = principal_specialization(d.weight()).degree();
      if (min_deg < 0 || deg < min_deg) min_deg = deg;
    }
    CHECK(min_deg == b_of_lambda(lambda));
  }
}

TEST_CASE("the composite map") {
  CHECK(fk_map({1}, {1}, 0) == FKResult{{1}, {{0}}});
  // lambda = (2,1), x = 0: all six bounded pairs land on the zero filling.
  std::set<Word> cs;
  for (const BoundedPair& ab : bounded_pairs(Perm::from_window({3, 2, 1}))) {
    const FKResult out = fk_map(ab.a, ab.b, 0);
    CHECK(out.rpp == Tableau{{0, 0}, {0}});
    CHECK(cs.insert(out.c).second);
  }
  CHECK(cs.size() == 6);
  CHECK_THROWS_AS(fk_map({1, 3, 2}, {1, 1, 1}, 0), std::invalid_argument);  // not dominant
  CHECK_THROWS_AS(fk_map({1}, {2}, 0), std::invalid_argument);        // bound out of range
}

TEST_CASE("fk roundtrips through the inverse table") {
  const Partition lambda{2, 1};
  const int x = 1;
  std::map<std::pair<Word, Tableau>, BoundedPair> inverse;
  const Perm sigma = dominant_from_partition(lambda);
  for (const Word& a : reduced_words(sigma)) {
    Word b(a.size(), 1);
    for (;;) {
      const FKResult out = fk_map(a, b, x);
      CHECK(inverse.emplace(std::make_pair(out.c, out.rpp), BoundedPair{a, b}).second);
      int i = static_cast<int>(b.size()) - 1;
      while (i >= 0 && b[i] == a[i] + x) b[i--] = 1;
      if (i < 0) break;
      ++b[i];
    }
  }
  CHECK(inverse.size() == factorial(3) * enumerate_rpp(lambda, x).size());
}

TEST_CASE("staircase product formula") {
  CHECK(staircase_rhs(3, 0) == 6);
  CHECK(staircase_rhs(3, 1) == 30);
  CHECK(staircase_rhs(1, 5) == 1);
  CHECK(staircase_lhs(3, 1) == 30);
  for (int n = 1; n <= 4; ++n)
    for (int x = 0; x <= 2; ++x) CHECK(staircase_lhs(n, x) == staircase_rhs(n, x));
}

TEST_CASE("fk verification") {
  CHECK(verify_fk({2, 1}, 0).ok);
  CHECK(verify_fk({1}, 2).ok);
  CHECK(verify_fk({2, 1}, 1).ok);
}

}  // TEST_SUITE
