#include "tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rw {

std::vector<int> tableau_shape(const Tableau& t) {
  std::vector<int> shape;
  for (const auto& row : t) shape.push_back(static_cast<int>(row.size()));
  return shape;
}

Tableau transpose(const Tableau& t) {
  Tableau out;
  for (size_t u = 0; u < t.size(); ++u)
    for (size_t v = 0; v < t[u].size(); ++v) {
      if (out.size() <= v) out.resize(v + 1);
      if (out[v].size() <= u) out[v].resize(u + 1);
      out[v][u] = t[u][v];
    }
  return out;
}

EGResult eg_insert(const Word& a) {
  if (!is_reduced(a)) throw std::invalid_argument("insertion requires a reduced word");
  EGResult res;
  for (int t = 1; t <= static_cast<int>(a.size()); ++t) {
    int carry = a[t - 1];
    for (size_t row = 0;; ++row) {
      if (res.p.size() <= row) {
        res.p.emplace_back();
        res.q.emplace_back();
      }
      auto& r = res.p[row];
      auto it = std::upper_bound(r.begin(), r.end(), carry);
      if (it == r.end()) {
        r.push_back(carry);
        res.q[row].push_back(t);
        break;
      }
      if (*it == carry + 1 && it != r.begin() && *(it - 1) == carry) {
        carry = carry + 1;  // row already holds carry and carry+1: bump without writing
      } else {
        std::swap(*it, carry);
      }
    }
  }
  return res;
}

namespace {

void check_partition(const Partition& lambda) {
  for (size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 1 || (i > 0 && lambda[i] > lambda[i - 1]))
      throw std::invalid_argument("not a partition");
}

bool shapes_equal(const Tableau& t, const Partition& lambda) {
  return tableau_shape(t) == static_cast<std::vector<int>>(lambda);
}

}  // namespace

Tableau pipedream_to_flagged(const PipeDream& d, int x) {
  if (x < 0) throw std::invalid_argument("x must be nonnegative");
  if (!d.reduced()) throw std::invalid_argument("pipe dream must be reduced");
  const Perm pi = d.permutation();
  for (int i = 1; i <= x; ++i)
    if (pi(i) != i) throw std::invalid_argument("permutation does not fix 1..x");
  Window sigma_win;
  for (int i = x + 1; i <= std::max(pi.size(), x); ++i) sigma_win.push_back(pi(i) - x);
  const Perm sigma = Perm::from_window(std::move(sigma_win));
  if (!sigma.is_dominant()) throw std::invalid_argument("shape mismatch: permutation not dominant");
  Partition lambda = lehmer_code(sigma);
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();

  if (d.empty()) return {};
  const Biword bw = d.biword();
  const Word rows = d.row_numbers();
  const EGResult eg = eg_insert(bw.r);
  Tableau qt = transpose(eg.q);
  for (auto& row : qt)
    for (int& entry : row) entry = rows[entry - 1];

  if (!shapes_equal(qt, lambda)) throw std::invalid_argument("shape mismatch");
  for (size_t u = 0; u < qt.size(); ++u)
    for (size_t v = 0; v < qt[u].size(); ++v) {
      const int val = qt[u][v];
      if (v > 0 && qt[u][v - 1] > val) throw std::logic_error("rows not weakly increasing");
      if (u > 0 && qt[u - 1][v] >= val) throw std::logic_error("columns not strictly increasing");
      if (val > static_cast<int>(u) + 1 + x) throw std::logic_error("flag bound violated");
    }
  return qt;
}

Tableau flagged_to_rpp(const Tableau& flagged, const Partition& lambda, int x) {
  if (!lambda.empty()) check_partition(lambda);
  if (!shapes_equal(flagged, lambda)) throw std::invalid_argument("shape mismatch");
  Tableau out = flagged;
  for (size_t u = 0; u < out.size(); ++u)
    for (int& entry : out[u]) {
      entry -= static_cast<int>(u) + 1;
      if (entry < 0 || entry > x) throw std::invalid_argument("flag violation");
    }
  return out;
}

Tableau rpp_to_flagged(const Tableau& rpp, const Partition& lambda, int x) {
  if (!lambda.empty()) check_partition(lambda);
  if (!shapes_equal(rpp, lambda)) throw std::invalid_argument("shape mismatch");
  Tableau out = rpp;
  for (size_t u = 0; u < out.size(); ++u)
    for (int& entry : out[u]) {
      if (entry < 0 || entry > x) throw std::invalid_argument("entry out of [0,x]");
      entry += static_cast<int>(u) + 1;
    }
  return out;
}

namespace {

// Fills the shape in row-major order. Bounds receive the partially built
// tableau; cells above and to the left of (u,v) are already final.
template <class Lo, class Hi>
void enumerate_fillings(const Partition& lambda, Tableau& work, size_t u, size_t v,
                        const Lo& lo, const Hi& hi, std::vector<Tableau>& out) {
  if (u == lambda.size()) {
    out.push_back(work);
    return;
  }
  const bool row_continues = v + 1 < static_cast<size_t>(lambda[u]);
  const size_t nu = row_continues ? u : u + 1;
  const size_t nv = row_continues ? v + 1 : 0;
  for (int val = lo(work, u, v); val <= hi(u); ++val) {
    work[u][v] = val;
    enumerate_fillings(lambda, work, nu, nv, lo, hi, out);
  }
}

template <class Lo, class Hi>
std::vector<Tableau> enumerate_shape(const Partition& lambda, const Lo& lo, const Hi& hi) {
  if (lambda.empty()) return {Tableau{}};
  check_partition(lambda);
  Tableau work;
  for (int part : lambda) work.emplace_back(part, 0);
  std::vector<Tableau> out;
  enumerate_fillings(lambda, work, 0, 0, lo, hi, out);
  return out;
}

}  // namespace

std::vector<Tableau> enumerate_rpp(const Partition& lambda, int x) {
  if (x < 0) throw std::invalid_argument("x must be nonnegative");
  auto lo = [](const Tableau& t, size_t u, size_t v) {
    int m = 0;
    if (v > 0) m = std::max(m, t[u][v - 1]);
    if (u > 0 && t[u - 1].size() > v) m = std::max(m, t[u - 1][v]);
    return m;
  };
  return enumerate_shape(lambda, lo, [x](size_t) { return x; });
}

QPoly rpp_q_weight(const Partition& lambda, int x) {
  QPoly out;
  for (const Tableau& t : enumerate_rpp(lambda, x)) out += QPoly::q_power(rpp_entry_sum(t));
  return out;
}

std::vector<Tableau> enumerate_flagged(const Partition& lambda, int x) {
  if (x < 0) throw std::invalid_argument("x must be nonnegative");
  auto lo = [](const Tableau& t, size_t u, size_t v) {
    int m = 1;
    if (v > 0) m = std::max(m, t[u][v - 1]);
    if (u > 0 && t[u - 1].size() > v) m = std::max(m, t[u - 1][v] + 1);
    return m;
  };
  return enumerate_shape(lambda, lo, [x](size_t u) { return static_cast<int>(u) + 1 + x; });
}

int rpp_entry_sum(const Tableau& t) {
  int s = 0;
  for (const auto& row : t)
    for (int v : row) s += v;
  return s;
}

int b_of_lambda(const Partition& lambda) {
  int s = 0;
  for (size_t i = 0; i < lambda.size(); ++i) s += static_cast<int>(i) * lambda[i];
  return s;
}

FKResult fk_map(const Word& a, const Word& b, int x) {
  if (x < 0) throw std::invalid_argument("x must be nonnegative");
  const Perm sigma = evaluate(a);
  if (!sigma.is_dominant()) throw std::invalid_argument("word must evaluate to a dominant permutation");
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (b[i] < 1 || b[i] > a[i] + x) throw std::invalid_argument("bounds must satisfy 1 <= b_i <= a_i + x");
  Partition lambda = lehmer_code(sigma);
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();

  Word shifted = a;
  for (int& v : shifted) v += x;
  CDPair cd = macdonald_map({std::move(shifted), b});
  Tableau flagged = pipedream_to_flagged(cd.d, x);
  return {std::move(cd.c), flagged_to_rpp(flagged, lambda, x)};
}

i64 staircase_rhs(int n, int x) {
  if (n < 1 || x < 0) throw std::invalid_argument("need n >= 1 and x >= 0");
  i64 num = factorial(n * (n - 1) / 2);
  i64 den = 1;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num = checked_mul(num, 2 * x + i + j - 1);
      den = checked_mul(den, i + j - 1);
      const i64 g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  if (den != 1) throw std::logic_error("product formula did not reduce to an integer");
  return num;
}

i64 staircase_lhs(int n, int x) {
  if (n < 1 || x < 0) throw std::invalid_argument("need n >= 1 and x >= 0");
  Window w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  i64 total = 0;
  for (const Word& a : reduced_words(Perm::from_window(std::move(w)))) {
    i64 prod = 1;
    for (int v : a) prod = checked_mul(prod, v + x);
    total = checked_add(total, prod);
  }
  return total;
}

}  // namespace rw
