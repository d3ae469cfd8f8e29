#include "transition.hpp"

#include <stdexcept>
#include <string>

namespace rw {

TransitionContext transition_context(const Perm& pi) {
  TransitionContext ctx;
  ctx.pi = pi;
  auto [r, s] = pi.lex_largest_inversion();
  ctx.r = r;
  ctx.s = s;
  ctx.nu = pi.times_transposition(r, s);
  const int len = pi.length();
  for (int q = 1; q < r; ++q) {
    Perm cand = ctx.nu.times_transposition(q, r);
    if (cand.length() == len) ctx.lower.emplace_back(q, std::move(cand));
  }
  return ctx;
}

TransitionCore transition_core(const Perm& pi) {
  TransitionCore core;
  auto [r, s] = pi.lex_largest_inversion();
  core.r = r;
  core.s = s;
  core.nu = pi.times_transposition(r, s);
  return core;
}

namespace {

// Recovers pi from the landing permutation nu*t_{qr} and the branch pair:
// s is the unique m > r with nu(m) > nu(r) and no value between, and the
// lex largest inversion of nu*t_{rs} must come out as (r,s). For q < r the
// landing permutation must sit one transposition above nu at the length of
// pi, which is exactly membership in the branch list.
struct BranchContext {
  Perm pi;
  Perm nu;
  int r = 0, s = 0;
};

BranchContext context_from_branch(const Perm& landed, int q, int r) {
  if (q < 1 || r < q) throw std::invalid_argument("branch pair must satisfy 1 <= q <= r");
  BranchContext ctx;
  if (q == r) {
    ctx.nu = landed;
  } else {
    ctx.nu = landed.times_transposition(q, r);
    if (ctx.nu.length() != landed.length() - 1)
      throw std::invalid_argument("branch pair inconsistent with the permutation");
  }
  int s = r + 1;
  while (ctx.nu(s) < ctx.nu(r)) ++s;
  ctx.s = s;
  ctx.r = r;
  ctx.pi = ctx.nu.times_transposition(r, s);
  if (ctx.pi.length() != ctx.nu.length() + 1 ||
      ctx.pi.lex_largest_inversion() != Inversion{r, s})
    throw std::invalid_argument("branch pair inconsistent with the permutation");
  return ctx;
}

}  // namespace

PipeDreamStep transition_map_at(const PipeDream& d, const Perm& pi, Perm* out_perm) {
  const TransitionCore ctx = transition_core(pi);
  const Biword bw = d.biword();
  const int t0 = column_of_crossing_unchecked(bw.r, {ctx.r, ctx.s});
  BumpResult res = bounded_bump(bw.r, bw.j, t0, Direction::decrement);

  PipeDreamStep step;
  step.r = ctx.r;
  if (res.outcome == Outcome::deleted) {
    if (res.row != ctx.r - 1 || res.column != pi.length())
      throw std::logic_error("deleted transition step with unexpected row or column");
    step.q = ctx.r;
    step.k = res.column;
  } else {
    auto [x, y] = right_labeled_crossing(res.a, res.column);
    if (y != ctx.r) throw std::logic_error("bumped transition step lost the r-wire");
    step.q = x;
    step.k = 0;
  }
  if (out_perm)
    *out_perm = step.q == step.r ? ctx.nu : ctx.nu.times_transposition(step.q, step.r);
  step.out = PipeDream::decode({std::move(res.a), std::move(res.b)});
  return step;
}

PipeDreamStep transition_map(const PipeDream& d, const PushObserver& observe) {
  if (d.empty()) throw std::invalid_argument("transition of the empty pipe dream");
  const Biword bw = d.biword();
  const Perm pi = evaluate(bw.r);
  if (pi.length() != d.size())
    throw std::invalid_argument("transition requires a reduced pipe dream");
  if (!observe) return transition_map_at(d, pi, nullptr);

  // Observed run: same steps, with the observer threaded into the bump.
  const TransitionCore ctx = transition_core(pi);
  const int t0 = column_of_crossing_unchecked(bw.r, {ctx.r, ctx.s});
  BumpResult res = bounded_bump(bw.r, bw.j, t0, Direction::decrement, observe);
  PipeDreamStep step;
  step.r = ctx.r;
  if (res.outcome == Outcome::deleted) {
    step.q = ctx.r;
    step.k = res.column;
  } else {
    auto [x, y] = right_labeled_crossing(res.a, res.column);
    if (y != ctx.r) throw std::logic_error("bumped transition step lost the r-wire");
    step.q = x;
    step.k = 0;
  }
  step.out = PipeDream::decode({std::move(res.a), std::move(res.b)});
  return step;
}

PipeDream inverse_transition_map_at(const PipeDream& e, const Perm& landed, int q, int r,
                                    Perm* out_perm) {
  const BranchContext ctx = context_from_branch(landed, q, r);
  const Biword bw = e.biword();
  Word g, h;
  int j;
  if (q == r) {
    j = ctx.pi.length();  // one more crossing than e has
    g = insert_at(bw.r, j, r - 1);
    h = insert_at(bw.j, j, 0);
  } else {
    j = column_of_crossing_unchecked(bw.r, {q, r});
    g = bw.r;
    h = bw.j;
  }
  BumpResult res = bounded_bump(g, h, j, Direction::increment);
  if (res.outcome != Outcome::bumped) throw std::logic_error("increment bump deleted");
  if (out_perm) *out_perm = ctx.pi;
  return PipeDream::decode({std::move(res.a), std::move(res.b)});
}

PipeDream inverse_transition_map(const PipeDream& e, int q, int r) {
  const Biword bw = e.biword();
  const Perm landed = bw.r.empty() ? Perm::identity() : evaluate(bw.r);
  if (landed.length() != e.size())
    throw std::invalid_argument("inverse transition requires a reduced pipe dream");
  Perm pi;
  PipeDream out = inverse_transition_map_at(e, landed, q, r, &pi);
  if (out.permutation() != pi)
    throw std::logic_error("inverse transition landed on the wrong permutation");
  return out;
}

TransitionChain transition_chain(const PipeDream& d) {
  if (!d.reduced()) throw std::invalid_argument("transition chain requires a reduced pipe dream");
  TransitionChain chain;
  PipeDream cur = d;
  Perm pi = cur.permutation();
  while (!cur.empty()) {
    Perm next;
    PipeDreamStep step = transition_map_at(cur, pi, &next);
    chain.emplace_back(step.q, step.r);
    cur = std::move(step.out);
    pi = std::move(next);
  }
  return chain;
}

PipeDream pipe_dream_from_chain(const TransitionChain& chain) {
  PipeDream d;
  Perm pi;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    try {
      d = inverse_transition_map_at(d, pi, it->first, it->second, &pi);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("unreplayable chain: ") + e.what());
    }
  }
  return d;
}

BoundedPairStep bounded_transition_at(const BoundedPair& ab, const Perm& pi, Perm* out_perm) {
  const TransitionCore ctx = transition_core(pi);
  const int t0 = column_of_crossing_unchecked(ab.a, {ctx.r, ctx.s});
  BumpResult res = bounded_bump(ab.a, ab.b, t0, Direction::decrement);

  BoundedPairStep step;
  step.r = ctx.r;
  if (res.outcome == Outcome::deleted) {
    step.q = ctx.r;
    step.k = res.column;
  } else {
    auto [x, y] = right_labeled_crossing(res.a, res.column);
    if (y != ctx.r) throw std::logic_error("bumped transition step lost the r-wire");
    step.q = x;
    step.k = 0;
  }
  if (out_perm)
    *out_perm = step.q == step.r ? ctx.nu : ctx.nu.times_transposition(step.q, step.r);
  step.out = {std::move(res.a), std::move(res.b)};
  return step;
}

BoundedPairStep bounded_transition(const BoundedPair& ab) {
  check_bounded_pair(ab);
  const Perm pi = evaluate(ab.a);
  if (pi.is_identity()) throw std::invalid_argument("transition of the identity");
  return bounded_transition_at(ab, pi, nullptr);
}

BoundedPair inverse_bounded_transition_at(const BoundedPair& ef, const Perm& landed, int k,
                                          int q, int r, Perm* out_perm) {
  if ((k == 0) != (q < r)) throw std::invalid_argument("k must be 0 exactly when q < r");
  const BranchContext ctx = context_from_branch(landed, q, r);
  const int p = ctx.pi.length();
  Word g, h;
  int j;
  if (q == r) {
    if (k < 1 || k > p) throw std::invalid_argument("deletion column out of range");
    // The removed crossing sat just below the wire that is labeled r down the
    // right edge, i.e. the nu(r)-wire of the left labeling; its row is one
    // less than that wire's row at time k-1.
    const int row = wire_row(ef.a, ctx.nu(ctx.r), k) - 1;
    g = insert_at(ef.a, k, row);
    h = insert_at(ef.b, k, 0);
    j = k;
  } else {
    g = ef.a;
    h = ef.b;
    j = column_of_crossing_unchecked(ef.a, {q, r});
  }
  BumpResult res = bounded_bump(g, h, j, Direction::increment);
  if (res.outcome != Outcome::bumped) throw std::logic_error("increment bump deleted");
  if (out_perm) *out_perm = ctx.pi;
  return {std::move(res.a), std::move(res.b)};
}

BoundedPair inverse_bounded_transition(const BoundedPair& ef, int k, int q, int r) {
  check_bounded_pair(ef);
  Perm pi;
  BoundedPair out = inverse_bounded_transition_at(ef, evaluate(ef.a), k, q, r, &pi);
  if (evaluate(out.a) != pi)
    throw std::logic_error("inverse bounded transition landed on the wrong permutation");
  return out;
}

TransitionChain bounded_chain(const BoundedPair& ab) {
  check_bounded_pair(ab);
  TransitionChain chain;
  BoundedPair cur = ab;
  Perm pi = evaluate(cur.a);
  while (!cur.a.empty()) {
    Perm next;
    BoundedPairStep step = bounded_transition_at(cur, pi, &next);
    chain.emplace_back(step.q, step.r);
    cur = std::move(step.out);
    pi = std::move(next);
  }
  return chain;
}

}  // namespace rw
