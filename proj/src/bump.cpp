#include "bump.hpp"

#include <stdexcept>

namespace rw {

void check_bounded_pair(const BoundedPair& ab) {
  if (ab.a.size() != ab.b.size()) throw std::invalid_argument("bounded pair length mismatch");
  for (size_t i = 0; i < ab.a.size(); ++i)
    if (ab.b[i] < 1 || ab.b[i] > ab.a[i])
      throw std::invalid_argument("bound entries must satisfy 1 <= b_i <= a_i");
  if (!is_reduced(ab.a)) throw std::invalid_argument("word of a bounded pair must be reduced");
}

bool is_bounded_pair(const BoundedPair& ab) {
  try {
    check_bounded_pair(ab);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

void check_edit_column(const Word& a, int t, bool for_insert = false) {
  const int hi = static_cast<int>(a.size()) + (for_insert ? 1 : 0);
  if (t < 1 || t > hi) throw std::invalid_argument("column out of range");
}

// Stack-buffer crossing sweep for the inner bump loop. Mid-bump words are
// nearly reduced at the push column t, so when they are not reduced the wires
// crossing at t cross at exactly one other column, the defect. Other wire
// pairs may be doubled too, so the reduced test must scan every pair.
constexpr int kBumpCap = 96;

// Returns the defect column of t, or 0 if the word is reduced.
int defect_or_zero(const Word& a, int t) {
  int rows[kBumpCap + 2];
  int codes[kBumpCap];
  int n = 1;
  for (int x : a) n = std::max(n, x + 1);
  if (n >= kBumpCap || a.size() > kBumpCap)
    throw std::invalid_argument("word too large for the bump engine");
  for (int i = 1; i <= n; ++i) rows[i] = i;
  for (size_t u = 0; u < a.size(); ++u) {
    const int x = a[u];
    const int lo = std::min(rows[x], rows[x + 1]);
    const int hi = std::max(rows[x], rows[x + 1]);
    codes[u] = lo * 1024 + hi;
    std::swap(rows[x], rows[x + 1]);
  }
  const int m = static_cast<int>(a.size());
  const int code_t = codes[t - 1];
  for (int u = 0; u < m; ++u)
    if (u != t - 1 && codes[u] == code_t) return u + 1;
  for (int u = 0; u + 1 < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (codes[u] == codes[v])
        throw std::logic_error("bump reached a state that is not nearly reduced");
  return 0;
}

}  // namespace

Word dec_push(const Word& a, int t) {
  check_edit_column(a, t);
  if (a[t - 1] <= 0) throw std::invalid_argument("decrement would produce a negative letter");
  Word r = a;
  --r[t - 1];
  return r;
}

Word inc_push(const Word& a, int t) {
  check_edit_column(a, t);
  Word r = a;
  ++r[t - 1];
  return r;
}

Word delete_at(const Word& a, int t) {
  check_edit_column(a, t);
  Word r = a;
  r.erase(r.begin() + (t - 1));
  return r;
}

Word insert_at(const Word& a, int t, int x) {
  check_edit_column(a, t, /*for_insert=*/true);
  Word r = a;
  r.insert(r.begin() + (t - 1), x);
  return r;
}

BumpResult bounded_bump(const Word& a, const Word& b, int t0, Direction dir,
                        const PushObserver& observe) {
  const int p = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != p) throw std::invalid_argument("length mismatch");
  if (t0 < 1 || t0 > p) throw std::invalid_argument("start column out of range");
  for (int i = 0; i < p; ++i) {
    const int lo = (i == t0 - 1 && dir == Direction::increment) ? 0 : 1;
    if (a[i] < lo || b[i] < lo || b[i] > a[i])
      throw std::invalid_argument("not a bounded word for the input");
  }
  if (!is_reduced_skipping(a, t0))
    throw std::invalid_argument("word not nearly reduced at t0");

  const int d = dir == Direction::increment ? 1 : -1;
  Word wa = a, wb = b;
  int t = t0;
  for (int guard = 0;; ++guard) {
    if (guard > 1000000) throw std::logic_error("bump failed to terminate");
    wa[t - 1] += d;
    wb[t - 1] += d;
    if (observe) observe(t, wa, wb);
    if (wb[t - 1] == 0) {
      const int row = wa[t - 1];
      wa.erase(wa.begin() + (t - 1));
      wb.erase(wb.begin() + (t - 1));
      return {std::move(wa), std::move(wb), row, t, Outcome::deleted};
    }
    const int next = defect_or_zero(wa, t);
    if (next == 0) {
      const int row = wa[t - 1];
      return {std::move(wa), std::move(wb), row, t, Outcome::bumped};
    }
    t = next;
  }
}

Word little_bump(const Word& a, int t0, Direction dir) {
  return bounded_bump(a, a, t0, dir).a;
}

}  // namespace rw
