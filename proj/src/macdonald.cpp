#include "macdonald.hpp"

#include <stdexcept>

namespace rw {

void for_each_bounded_pair(const Perm& pi,
                           const std::function<void(const Word&, const Word&)>& fn) {
  for (const Word& a : reduced_words(pi)) {
    Word b(a.size(), 1);
    for (;;) {
      fn(a, b);
      int i = static_cast<int>(b.size()) - 1;
      while (i >= 0 && b[i] == a[i]) b[i--] = 1;
      if (i < 0) break;
      ++b[i];
    }
  }
}

std::vector<BoundedPair> bounded_pairs(const Perm& pi) {
  std::vector<BoundedPair> out;
  for_each_bounded_pair(pi, [&](const Word& a, const Word& b) { out.push_back({a, b}); });
  return out;
}

i64 bounded_pair_count(const Perm& pi) {
  i64 total = 0;
  for (const Word& a : reduced_words(pi)) {
    i64 prod = 1;
    for (int x : a) prod = checked_mul(prod, x);
    total = checked_add(total, prod);
  }
  return total;
}

namespace {

struct StepRecord {
  int q, r, k;
};

std::vector<StepRecord> descend(const BoundedPair& ab) {
  std::vector<StepRecord> records;
  BoundedPair cur = ab;
  Perm pi = evaluate(cur.a);
  while (!cur.a.empty()) {
    Perm next;
    BoundedPairStep step = bounded_transition_at(cur, pi, &next);
    records.push_back({step.q, step.r, step.k});
    cur = std::move(step.out);
    pi = std::move(next);
  }
  return records;
}

}  // namespace

CDPair macdonald_map(const BoundedPair& ab) {
  check_bounded_pair(ab);
  const auto records = descend(ab);
  CDPair out;
  Perm pi;
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    out.d = inverse_transition_map_at(out.d, pi, it->q, it->r, &pi);
    if (it->q == it->r) out.c.push_back(it->k);  // becomes column p = l(pi) of c
  }
  return out;
}

BoundedPair inverse_macdonald(const CDPair& cd) {
  if (!cd.d.reduced()) throw std::invalid_argument("pipe dream must be reduced");
  Perm pi = cd.d.permutation();
  if (static_cast<int>(cd.c.size()) != pi.length())
    throw std::invalid_argument("length of c must equal the length of the permutation");
  for (size_t i = 0; i < cd.c.size(); ++i)
    if (cd.c[i] < 1 || cd.c[i] > static_cast<int>(i) + 1)
      throw std::invalid_argument("c is not a sub-staircase word");

  std::vector<StepRecord> records;
  Word c = cd.c;
  PipeDream d = cd.d;
  while (!d.empty()) {
    Perm next;
    PipeDreamStep step = transition_map_at(d, pi, &next);
    int k = 0;
    if (step.q == step.r) {
      k = c.back();  // the deletion column comes from c, not from the pipe dream
      c.pop_back();
    }
    records.push_back({step.q, step.r, k});
    d = std::move(step.out);
    pi = std::move(next);
  }
  BoundedPair out;
  Perm cur;
  for (auto it = records.rbegin(); it != records.rend(); ++it)
    out = inverse_bounded_transition_at(out, cur, it->k, it->q, it->r, &cur);
  return out;
}

std::vector<MacdonaldTraceRow> macdonald_trace(const BoundedPair& ab) {
  check_bounded_pair(ab);
  std::vector<BoundedPairStep> steps;
  BoundedPair cur = ab;  // keep the per-level pairs for the trace
  std::vector<BoundedPair> pairs{cur};
  while (!cur.a.empty()) {
    BoundedPairStep step = bounded_transition(cur);
    steps.push_back(step);
    cur = step.out;
    pairs.push_back(cur);
  }

  const size_t levels = pairs.size();
  std::vector<MacdonaldTraceRow> rows(levels);
  Word c;
  PipeDream d;
  Perm pi;
  for (size_t idx = levels; idx-- > 0;) {
    MacdonaldTraceRow& row = rows[idx];
    row.ab = pairs[idx];
    row.pi = evaluate(pairs[idx].a);
    if (idx < steps.size()) {
      row.q = steps[idx].q;
      row.r = steps[idx].r;
      row.k = steps[idx].k;
      d = inverse_transition_map_at(d, pi, row.q, row.r, &pi);
      if (row.q == row.r) c.push_back(row.k);
    }
    row.c = c;
    row.d = d;
  }
  return rows;
}

}  // namespace rw
