#include "pipedream.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "transition.hpp"

namespace rw {

namespace {

// Reading order: by row ascending, then column descending.
bool reading_less(const Cell& a, const Cell& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second > b.second;
}

}  // namespace

PipeDream PipeDream::from_cells(std::vector<Cell> cells) {
  for (const auto& [i, j] : cells)
    if (i < 1 || j < 1) throw std::invalid_argument("cells must lie in the positive quadrant");
  std::sort(cells.begin(), cells.end(), reading_less);
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw std::invalid_argument("duplicate cell");
  PipeDream d;
  d.cells_ = std::move(cells);
  return d;
}

PipeDream PipeDream::decode(const Biword& bw) {
  if (!encodes_pipe_dream(bw.r, bw.j)) throw std::invalid_argument("not a pipe dream");
  PipeDream d;
  d.cells_.reserve(bw.r.size());
  for (size_t k = 0; k < bw.r.size(); ++k)
    d.cells_.emplace_back(bw.r[k] - bw.j[k] + 1, bw.j[k]);
  return d;
}

Biword PipeDream::biword() const {
  Biword bw;
  bw.r.reserve(cells_.size());
  bw.j.reserve(cells_.size());
  for (const auto& [i, j] : cells_) {
    bw.r.push_back(i + j - 1);
    bw.j.push_back(j);
  }
  return bw;
}

Word PipeDream::row_numbers() const {
  Word rows;
  rows.reserve(cells_.size());
  for (const auto& [i, j] : cells_) rows.push_back(i);
  return rows;
}

Perm PipeDream::permutation() const {
  if (empty()) return Perm::identity();
  int n = 1;
  for (const auto& [i, j] : cells_) n = std::max(n, i + j);
  Window w(n);
  std::iota(w.begin(), w.end(), 1);
  for (const auto& [i, j] : cells_) std::swap(w[i + j - 2], w[i + j - 1]);
  return Perm::from_window(std::move(w));
}

bool PipeDream::reduced() const { return permutation().length() == size(); }

Polynomial PipeDream::weight() const {
  Polynomial::Exponents e;
  for (const auto& [i, j] : cells_) {
    if (static_cast<int>(e.size()) < i) e.resize(i, 0);
    ++e[i - 1];
  }
  return Polynomial::monomial(std::move(e));
}

std::string PipeDream::str() const {
  std::string s;
  for (const auto& [i, j] : cells_)
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return s.empty() ? "()" : s;
}

bool encodes_pipe_dream(const Word& r, const Word& j) {
  if (r.size() != j.size()) return false;
  std::pair<int, int> prev{0, 0};
  for (size_t k = 0; k < r.size(); ++k) {
    if (j[k] < 1 || j[k] > r[k]) return false;
    std::pair<int, int> cur{r[k] - j[k] + 1, -j[k]};
    if (k > 0 && !(prev < cur)) return false;
    prev = cur;
  }
  return true;
}

namespace {

std::vector<PipeDream> pipe_dreams_brute(const Perm& pi) {
  const int n = std::max(pi.size(), 2);
  if (n > 6) throw std::invalid_argument("brute enumeration is limited to windows of size <= 6");
  std::vector<Cell> staircase;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) staircase.emplace_back(i, j);
  const int m = static_cast<int>(staircase.size());
  const int want = pi.length();
  std::vector<PipeDream> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != want) continue;
    std::vector<Cell> cells;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) cells.push_back(staircase[b]);
    PipeDream d = PipeDream::from_cells(std::move(cells));
    if (d.permutation() == pi) out.push_back(std::move(d));  // |D| = l(pi) forces reduced
  }
  std::sort(out.begin(), out.end());
  return out;
}

void pipe_dreams_chains(const Perm& pi, std::map<Perm, std::vector<PipeDream>>& memo) {
  if (memo.count(pi)) return;
  if (pi.is_identity()) {
    memo.emplace(pi, std::vector<PipeDream>{PipeDream()});
    return;
  }
  const TransitionContext ctx = transition_context(pi);
  std::vector<PipeDream> out;
  auto extend = [&](const Perm& target, int q) {
    pipe_dreams_chains(target, memo);
    for (const PipeDream& e : memo.at(target)) out.push_back(inverse_transition_map(e, q, ctx.r));
  };
  extend(ctx.nu, ctx.r);
  for (const auto& [q, target] : ctx.lower) extend(target, q);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("transition branches produced a duplicate pipe dream");
  memo.emplace(pi, std::move(out));
}

}  // namespace

std::vector<PipeDream> pipe_dreams(const Perm& pi, EnumStrategy s) {
  if (s == EnumStrategy::brute) return pipe_dreams_brute(pi);
  std::map<Perm, std::vector<PipeDream>> memo;
  pipe_dreams_chains(pi, memo);
  return memo.at(pi);
}

Polynomial schubert(const Perm& pi) {
  Polynomial out;
  for (const PipeDream& d : pipe_dreams(pi)) out += d.weight();
  return out;
}

namespace {

const Polynomial& schubert_rec(const Perm& pi, std::map<Perm, Polynomial>& memo) {
  auto it = memo.find(pi);
  if (it != memo.end()) return it->second;
  Polynomial result;
  if (pi.is_identity()) {
    result = Polynomial::constant(1);
  } else {
    const TransitionContext ctx = transition_context(pi);
    result = Polynomial::variable(ctx.r) * schubert_rec(ctx.nu, memo);
    for (const auto& [q, target] : ctx.lower) result += schubert_rec(target, memo);
  }
  return memo.emplace(pi, std::move(result)).first->second;
}

}  // namespace

Polynomial schubert_via_transition(const Perm& pi) {
  std::map<Perm, Polynomial> memo;
  return schubert_rec(pi, memo);
}

}  // namespace rw
