#include <doctest.h>

#include <algorithm>

#include "perm.hpp"
#include "transition.hpp"
#include "words.hpp"

using namespace rw;

namespace {
Perm P(Window w) { return Perm::from_window(std::move(w)); }
}  // namespace

TEST_SUITE("perm") {

TEST_CASE("composition") {
  CHECK((P({1, 3, 2}) * P({2, 1, 3})).window() == Window{3, 1, 2});
  CHECK(Perm::identity() * P({2, 4, 1, 3}) == P({2, 4, 1, 3}));
  const Perm s1 = Perm::transposition(1, 2), s2 = Perm::transposition(2, 3);
  CHECK(s1 * s2 * s1 == P({3, 2, 1}));
  CHECK(P({3, 2, 1}).inverse() == P({3, 2, 1}));
  CHECK(P({2, 4, 1, 3}).inverse() == P({3, 1, 4, 2}));
}

TEST_CASE("normalization and window access") {
  CHECK(P({1, 4, 3, 2, 5, 6}).window() == Window{1, 4, 3, 2});
  CHECK(P({1, 2, 3}).is_identity());
  CHECK(P({2, 1})(5) == 5);
  CHECK(P({2, 1}).window(4) == Window{2, 1, 3, 4});
  CHECK_THROWS_AS(P({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 3}), std::invalid_argument);
}

TEST_CASE("inversions and length") {
  CHECK(P({1, 4, 3, 2}).length() == 3);
  using IV = std::vector<Inversion>;
  CHECK(P({1, 4, 3, 2}).inversions() == IV{{3, 4}, {2, 4}, {2, 3}});
  CHECK(Perm::identity().inversions().empty());
  CHECK(P({2, 4, 1, 3}).inversions() == IV{{2, 4}, {2, 3}, {1, 3}});
  CHECK(P({2, 3, 1}).inversions() == IV{{2, 3}, {1, 3}});
  CHECK(P({2, 3, 1}).length() == 2);
}

TEST_CASE("lex largest inversion") {
  CHECK(P({1, 4, 3, 2}).lex_largest_inversion() == Inversion{3, 4});
  CHECK(P({2, 4, 1, 3}).lex_largest_inversion() == Inversion{2, 4});
  CHECK(P({2, 1}).lex_largest_inversion() == Inversion{1, 2});
  CHECK_THROWS_AS(Perm::identity().lex_largest_inversion(), std::invalid_argument);
}

TEST_CASE("lex largest inversion drops length by one across S4") {
  for (const Perm& pi : all_perms(4)) {
    if (pi.is_identity()) continue;
    auto [r, s] = pi.lex_largest_inversion();
    CHECK(pi.times_transposition(r, s).length() == pi.length() - 1);
    CHECK(pi.length() == static_cast<int>(pi.inversions().size()));
  }
}

TEST_CASE("inversion order") {
  CHECK(inversion_order_cmp(P({2, 4, 1, 3}), P({1, 4, 3, 2})) == std::strong_ordering::less);
  CHECK(inversion_order_cmp(P({1, 4, 3, 2}), P({1, 4, 3, 2})) == std::strong_ordering::equal);
  CHECK(inversion_order_cmp(Perm::identity(), P({2, 1})) == std::strong_ordering::less);
}

TEST_CASE("inversion order is a strict total order on S4") {
  auto perms = all_perms(4);
  for (const Perm& a : perms)
    for (const Perm& b : perms) {
      const auto ab = inversion_order_cmp(a, b);
      if (a == b)
        CHECK(ab == std::strong_ordering::equal);
      else
        CHECK(ab != std::strong_ordering::equal);
      CHECK((ab == std::strong_ordering::less) ==
            (inversion_order_cmp(b, a) == std::strong_ordering::greater));
    }
  std::sort(perms.begin(), perms.end(), [](const Perm& a, const Perm& b) {
    return inversion_order_cmp(a, b) == std::strong_ordering::less;
  });
  for (size_t i = 0; i + 1 < perms.size(); ++i)
    CHECK(inversion_order_cmp(perms[i], perms[i + 1]) == std::strong_ordering::less);
}

TEST_CASE("every transition branch target is strictly smaller") {
  for (const Perm& pi : all_perms(4)) {
    if (pi.is_identity()) continue;
    const TransitionContext ctx = transition_context(pi);
    CHECK(inversion_order_cmp(ctx.nu, pi) == std::strong_ordering::less);
    for (const auto& [q, target] : ctx.lower)
      CHECK(inversion_order_cmp(target, pi) == std::strong_ordering::less);
  }
}

TEST_CASE("lehmer code") {
  CHECK(lehmer_code(P({3, 2, 1})) == std::vector<int>{2, 1, 0});
  CHECK(lehmer_code(Perm::identity()).empty());
  CHECK(lehmer_decode({2, 1, 0, 0}) == P({3, 2, 1}));
  CHECK_THROWS_AS(lehmer_decode({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(lehmer_decode({-1}), std::invalid_argument);
  for (const Perm& pi : all_perms(5)) {
    CHECK(lehmer_decode(lehmer_code(pi)) == pi);
    bool weakly_decreasing = true;
    const auto code = lehmer_code(pi);
    for (size_t i = 1; i < code.size(); ++i) weakly_decreasing &= code[i] <= code[i - 1];
    CHECK(pi.is_dominant() == weakly_decreasing);
  }
}

TEST_CASE("dominant from partition") {
  CHECK(dominant_from_partition({2, 1}) == P({3, 2, 1}));
  CHECK(dominant_from_partition({}) == Perm::identity());
  CHECK(dominant_from_partition({1}) == P({2, 1}));
  CHECK(dominant_from_partition({2, 1}).is_dominant());
  CHECK_THROWS_AS(dominant_from_partition({1, 2}), std::invalid_argument);
}

TEST_CASE("shift embed") {
  CHECK(shift_embed(0, P({2, 1})) == P({2, 1}));
  CHECK(shift_embed(1, P({2, 1})) == P({1, 3, 2}));
  CHECK(shift_embed(2, P({3, 2, 1})) == P({1, 2, 5, 4, 3}));
}

TEST_CASE("shift embed preserves length and shifts reduced words") {
  for (const Perm& pi : all_perms(3))
    for (int x = 0; x <= 2; ++x) {
      const Perm shifted = shift_embed(x, pi);
      CHECK(shifted.length() == pi.length());
      std::vector<Word> want;
      for (Word w : reduced_words(pi)) {
        for (int& v : w) v += x;
        want.push_back(std::move(w));
      }
      std::sort(want.begin(), want.end());
      CHECK(reduced_words(shifted) == want);
    }
}

}  // TEST_SUITE
