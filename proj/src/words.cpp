#include "words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rw {

namespace {

void check_letters(const Word& a) {
  for (int x : a)
    if (x < 1) throw std::invalid_argument("word letters must be positive");
}

int wire_count(const Word& a) {
  int n = 1;
  for (int x : a) n = std::max(n, x + 1);
  return n;
}

void check_column(const Word& a, int t) {
  if (t < 1 || t > static_cast<int>(a.size())) throw std::invalid_argument("column out of range");
}

}  // namespace

Perm evaluate(const Word& a) {
  check_letters(a);
  Window w(wire_count(a));
  std::iota(w.begin(), w.end(), 1);
  for (int x : a) std::swap(w[x - 1], w[x]);
  return Perm::from_window(std::move(w));
}

std::vector<WirePair> left_labeled_crossings(const Word& a) {
  std::vector<int> arr(wire_count(a));
  std::iota(arr.begin(), arr.end(), 1);
  std::vector<WirePair> pairs;
  pairs.reserve(a.size());
  for (int x : a) {
    pairs.emplace_back(std::min(arr[x - 1], arr[x]), std::max(arr[x - 1], arr[x]));
    std::swap(arr[x - 1], arr[x]);
  }
  return pairs;
}

std::vector<WirePair> right_labeled_crossings(const Word& a) {
  std::vector<int> arr(wire_count(a));
  std::iota(arr.begin(), arr.end(), 1);
  std::vector<WirePair> pairs(a.size());
  for (int t = static_cast<int>(a.size()); t >= 1; --t) {
    const int x = a[t - 1];
    pairs[t - 1] = {std::min(arr[x - 1], arr[x]), std::max(arr[x - 1], arr[x])};
    std::swap(arr[x - 1], arr[x]);
  }
  return pairs;
}

namespace {

// Crossing pairs packed into ints in a stack buffer; a word is reduced iff
// all of them are distinct. Everything here is desk scale, so the fixed
// capacity is generous; longer words fall back to the allocating path.
constexpr int kStackLen = 96;

struct CodeBuf {
  int rows[kStackLen + 2];
  int codes[kStackLen];
};

// Packs the left-labeled crossing codes of a, skipping column skip (0 skips
// nothing). Returns the count, or -1 when the word is too large for the
// buffer.
int fill_codes(const Word& a, int skip, CodeBuf& buf) {
  int n = 1;
  for (size_t u = 0; u < a.size(); ++u)
    if (static_cast<int>(u) != skip - 1) n = std::max(n, a[u] + 1);
  if (n >= kStackLen || a.size() > kStackLen) return -1;
  for (int i = 1; i <= n; ++i) buf.rows[i] = i;
  int m = 0;
  for (size_t u = 0; u < a.size(); ++u) {
    if (static_cast<int>(u) == skip - 1) continue;
    const int x = a[u];
    const int lo = std::min(buf.rows[x], buf.rows[x + 1]);
    const int hi = std::max(buf.rows[x], buf.rows[x + 1]);
    buf.codes[m++] = lo * 1024 + hi;
    std::swap(buf.rows[x], buf.rows[x + 1]);
  }
  return m;
}

bool all_distinct(const int* codes, int m) {
  for (int u = 0; u + 1 < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (codes[u] == codes[v]) return false;
  return true;
}

bool is_reduced_slow(const Word& a, int skip) {
  Word d = a;
  if (skip > 0) d.erase(d.begin() + (skip - 1));
  auto pairs = left_labeled_crossings(d);
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

}  // namespace

bool is_reduced(const Word& a) {
  check_letters(a);
  CodeBuf buf;
  const int m = fill_codes(a, 0, buf);
  if (m < 0) return is_reduced_slow(a, 0);
  return all_distinct(buf.codes, m);
}

bool is_reduced_skipping(const Word& a, int t) {
  CodeBuf buf;
  const int m = fill_codes(a, t, buf);
  if (m < 0) return is_reduced_slow(a, t);
  return all_distinct(buf.codes, m);
}

bool is_nearly_reduced_at(const Word& a, int t) {
  check_column(a, t);
  for (size_t u = 0; u < a.size(); ++u)
    if (static_cast<int>(u) != t - 1 && a[u] < 1)
      throw std::invalid_argument("word letters must be positive");
  return is_reduced_skipping(a, t);
}

WordStatus word_status(const Word& a) {
  if (is_reduced(a)) return WordStatus::reduced;
  for (int t = 1; t <= static_cast<int>(a.size()); ++t)
    if (is_nearly_reduced_at(a, t)) return WordStatus::nearly_reduced;
  return WordStatus::neither;
}

int defect(const Word& a, int t) {
  check_column(a, t);
  if (is_reduced(a)) throw std::invalid_argument("defect undefined for reduced words");
  if (!is_nearly_reduced_at(a, t)) throw std::invalid_argument("word is not nearly reduced at t");
  auto pairs = left_labeled_crossings(a);
  int found = 0;
  for (int u = 1; u <= static_cast<int>(a.size()); ++u)
    if (u != t && pairs[u - 1] == pairs[t - 1]) found = u;
  if (found == 0) throw std::logic_error("defect column not found");
  return found;
}

WirePair right_labeled_crossing(const Word& a, int t) {
  check_column(a, t);
  check_letters(a);
  return right_labeled_crossings(a)[t - 1];
}

int column_of_crossing(const Word& a, WirePair wires) {
  check_letters(a);
  if (!is_reduced(a)) throw std::invalid_argument("column_of_crossing requires a reduced word");
  return column_of_crossing_unchecked(a, wires);
}

int column_of_crossing_unchecked(const Word& a, WirePair wires) {
  if (wires.first > wires.second) std::swap(wires.first, wires.second);
  const int n = wire_count(a);
  if (n < kStackLen && a.size() <= kStackLen) {
    CodeBuf buf;
    const int want = wires.first * 1024 + wires.second;
    for (int i = 1; i <= n; ++i) buf.rows[i] = i;
    int found = 0;
    for (int t = static_cast<int>(a.size()); t >= 1; --t) {
      const int x = a[t - 1];
      const int lo = std::min(buf.rows[x], buf.rows[x + 1]);
      const int hi = std::max(buf.rows[x], buf.rows[x + 1]);
      if (lo * 1024 + hi == want) found = t;
      std::swap(buf.rows[x], buf.rows[x + 1]);
    }
    if (found == 0)
      throw std::invalid_argument("pair is not an inversion of the word's permutation");
    return found;
  }
  const auto pairs = right_labeled_crossings(a);
  for (int t = 1; t <= static_cast<int>(a.size()); ++t)
    if (pairs[t - 1] == wires) return t;
  throw std::invalid_argument("pair is not an inversion of the word's permutation");
}

int comaj(const Word& a) {
  int s = 0;
  for (int i = 1; i + 1 <= static_cast<int>(a.size()); ++i)
    if (a[i - 1] < a[i]) s += i;
  return s;
}

std::vector<int> ascent_set(const Word& a) {
  std::vector<int> asc;
  for (int i = 1; i + 1 <= static_cast<int>(a.size()); ++i)
    if (a[i - 1] < a[i]) asc.push_back(i);
  return asc;
}

namespace {

// First letters j with l(s_j pi) = l(pi) - 1 are those with j+1 before j in
// the one-line notation; recursing on them in increasing order emits R(pi)
// lexicographically sorted.
void reduced_words_rec(const Perm& pi, Word& prefix, std::vector<Word>& out) {
  if (pi.is_identity()) {
    out.push_back(prefix);
    return;
  }
  const Perm inv = pi.inverse();
  const int n = pi.size();
  for (int j = 1; j < n; ++j) {
    if (inv(j) > inv(j + 1)) {
      prefix.push_back(j);
      reduced_words_rec(Perm::transposition(j, j + 1) * pi, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> reduced_words(const Perm& pi) {
  std::vector<Word> out;
  Word prefix;
  reduced_words_rec(pi, prefix, out);
  return out;
}

int wire_row(const Word& a, int j, int i) {
  if (j < 1) throw std::invalid_argument("wire label must be positive");
  if (i < 1 || i > static_cast<int>(a.size()) + 1)
    throw std::invalid_argument("column out of range");
  int h = j;
  for (int u = 0; u < i - 1; ++u) {
    if (h == a[u])
      h = a[u] + 1;
    else if (h == a[u] + 1)
      h = a[u];
  }
  return h;
}

}  // namespace rw
