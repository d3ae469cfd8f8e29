#pragma once

#include <utility>
#include <vector>

#include "bump.hpp"
#include "perm.hpp"
#include "pipedream.hpp"

namespace rw {

// Branch data shared by every transition recursion on pi != id:
// (r,s) is the lex largest inversion, nu = pi*t_{rs}, and lower holds the
// pairs (q, nu*t_{qr}) with q < r and l(nu*t_{qr}) = l(pi).
struct TransitionContext {
  Perm pi;
  Perm nu;
  int r = 0, s = 0;
  std::vector<std::pair<int, Perm>> lower;
};

TransitionContext transition_context(const Perm& pi);

// The part of the context every single step needs; skips the branch list.
struct TransitionCore {
  Perm nu;
  int r = 0, s = 0;
};
TransitionCore transition_core(const Perm& pi);

using ChainPair = std::pair<int, int>;  // (q, r) with 1 <= q <= r
using TransitionChain = std::vector<ChainPair>;

struct PipeDreamStep {
  PipeDream out;
  int q = 0, r = 0;
  int k = 0;  // deletion column when q == r, else 0
};

struct BoundedPairStep {
  BoundedPair out;
  int q = 0, r = 0;
  int k = 0;
};

// One step of the transition bijection on reduced pipe dreams: bumps the
// {r,s}-crossing downward and lands in RP(nu*t_{qr}). Weight law: the weight
// drops by x_r exactly when q == r.
PipeDreamStep transition_map(const PipeDream& d, const PushObserver& observe = nullptr);

// Inverse step. The permutation context is reconstructed from e and (q,r);
// inconsistent inputs are rejected.
PipeDream inverse_transition_map(const PipeDream& e, int q, int r);

// Branch pairs recorded while reducing d to the empty pipe dream,
// most recent first.
TransitionChain transition_chain(const PipeDream& d);
// Replays a chain from the empty pipe dream; errors if some step is
// inconsistent ("unreplayable chain").
PipeDream pipe_dream_from_chain(const TransitionChain& chain);

// The same step on arbitrary bounded pairs. k is the deletion column in
// [1, l(pi)] when the bump deletes (then q == r), and 0 when it lands in
// BP(nu*t_{qr}) with q < r.
BoundedPairStep bounded_transition(const BoundedPair& ab);
BoundedPair inverse_bounded_transition(const BoundedPair& ef, int k, int q, int r);

TransitionChain bounded_chain(const BoundedPair& ab);

// Leaner step variants for the chain walkers: the caller hands over the
// permutation of its input (and receives the one of the output), skipping the
// re-derivations and revalidation every public call performs. Inputs must
// already be valid; end-to-end roundtrips are checked by the callers.
BoundedPairStep bounded_transition_at(const BoundedPair& ab, const Perm& pi, Perm* out_perm);
BoundedPair inverse_bounded_transition_at(const BoundedPair& ef, const Perm& landed, int k,
                                          int q, int r, Perm* out_perm);
PipeDreamStep transition_map_at(const PipeDream& d, const Perm& pi, Perm* out_perm);
PipeDream inverse_transition_map_at(const PipeDream& e, const Perm& landed, int q, int r,
                                    Perm* out_perm);

}  // namespace rw
