#include "perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rw {

void Perm::normalize() {
  while (!win_.empty() && win_.back() == static_cast<int>(win_.size())) win_.pop_back();
}

Perm Perm::from_window(Window w) {
  const int n = static_cast<int>(w.size());
  if (n <= 64) {
    unsigned long long seen = 0;
    for (int v : w) {
      if (v < 1 || v > n || (seen >> (v - 1)) & 1ull)
        throw std::invalid_argument("window is not a permutation of {1,...,n}");
      seen |= 1ull << (v - 1);
    }
  } else {
    std::vector<bool> seen(n, false);
    for (int v : w) {
      if (v < 1 || v > n || seen[v - 1])
        throw std::invalid_argument("window is not a permutation of {1,...,n}");
      seen[v - 1] = true;
    }
  }
  Perm p;
  p.win_ = std::move(w);
  p.normalize();
  return p;
}

Perm Perm::transposition(int i, int j) {
  if (i < 1 || j < 1 || i == j) throw std::invalid_argument("bad transposition");
  if (i > j) std::swap(i, j);
  Perm p;
  p.win_.resize(j);
  std::iota(p.win_.begin(), p.win_.end(), 1);
  std::swap(p.win_[i - 1], p.win_[j - 1]);
  return p;
}

int Perm::operator()(int i) const {
  if (i < 1) throw std::invalid_argument("permutations act on positive integers");
  if (i <= size()) return win_[i - 1];
  return i;
}

Window Perm::window(int n) const {
  Window w = win_;
  for (int i = size() + 1; i <= n; ++i) w.push_back(i);
  return w;
}

Perm Perm::inverse() const {
  Window w(win_.size());
  for (int i = 1; i <= size(); ++i) w[win_[i - 1] - 1] = i;
  Perm p;
  p.win_ = std::move(w);
  return p;  // already normalized: window(n) != n iff inverse window(n) != n for the tail
}

Perm Perm::times_transposition(int i, int j) const {
  if (i < 1 || j < 1 || i == j) throw std::invalid_argument("bad transposition");
  if (i > j) std::swap(i, j);
  Window w = window(std::max(j, size()));
  std::swap(w[i - 1], w[j - 1]);
  Perm p;
  p.win_ = std::move(w);
  p.normalize();
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  const int n = std::max(a.size(), b.size());
  Window w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = a(b(i));
  return Perm::from_window(std::move(w));
}

int Perm::length() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (win_[i] > win_[j]) ++count;
  return count;
}

std::vector<Inversion> Perm::inversions() const {
  std::vector<Inversion> inv;
  for (int i = size() - 1; i >= 0; --i)
    for (int j = size() - 1; j > i; --j)
      if (win_[i] > win_[j]) inv.emplace_back(i + 1, j + 1);
  // i descending, j descending within each i: reverse lex order by construction.
  return inv;
}

Inversion Perm::lex_largest_inversion() const {
  if (is_identity()) throw std::invalid_argument("no inversions");
  int r = 0;
  for (int i = 1; i < size(); ++i)
    if (win_[i - 1] > win_[i]) r = i;
  if (r == 0) throw std::logic_error("non-identity permutation without descent");
  int s = 0;
  for (int j = r + 1; j <= size(); ++j)
    if (win_[r - 1] > win_[j - 1]) s = j;
  return {r, s};
}

bool Perm::is_dominant() const {
  auto code = lehmer_code(*this);
  for (size_t i = 1; i < code.size(); ++i)
    if (code[i] > code[i - 1]) return false;
  return true;
}

std::string Perm::str() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string(win_[i]);
  }
  return s + "]";
}

std::string Perm::one_line(int n) const {
  Window w = window(std::max(n, size()));
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

std::strong_ordering inversion_order_cmp(const Perm& tau, const Perm& pi) {
  auto a = tau.inversions();
  auto b = pi.inversions();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<int> lehmer_code(const Perm& pi) {
  const auto& w = pi.window();
  const int n = pi.size();
  std::vector<int> code(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) ++code[i];
  return code;
}

Perm lehmer_decode(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  Window w;
  w.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (code[i] < 0 || code[i] > n - i - 1)
      throw std::invalid_argument("Lehmer code entry out of bounds");
    w.push_back(pool[code[i]]);
    pool.erase(pool.begin() + code[i]);
  }
  return Perm::from_window(std::move(w));
}

Perm dominant_from_partition(const std::vector<int>& lambda) {
  int p = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1]))
      throw std::invalid_argument("not a partition");
    p += lambda[i];
  }
  std::vector<int> code(lambda.begin(), lambda.end());
  code.resize(p + 1, 0);
  return lehmer_decode(code);
}

Perm shift_embed(int x, const Perm& pi) {
  if (x < 0) throw std::invalid_argument("shift must be nonnegative");
  Window w;
  w.reserve(x + pi.size());
  for (int i = 1; i <= x; ++i) w.push_back(i);
  for (int v : pi.window()) w.push_back(v + x);
  return Perm::from_window(std::move(w));
}

std::vector<Perm> all_perms(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Window w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_window(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace rw
