#pragma once

#include <functional>
#include <vector>

#include "pipedream.hpp"
#include "transition.hpp"

namespace rw {

// Image of the Macdonald map: a sub-staircase word (1 <= c_i <= i) together
// with a reduced pipe dream of the same length.
struct CDPair {
  Word c;
  PipeDream d;
  bool operator==(const CDPair&) const = default;
};

// Streams every bounded pair of pi in deterministic order: words of R(pi)
// lexicographically, bounds in odometer order.
void for_each_bounded_pair(const Perm& pi,
                           const std::function<void(const Word&, const Word&)>& fn);
std::vector<BoundedPair> bounded_pairs(const Perm& pi);
// |BP(pi)| = sum over R(pi) of a_1*...*a_p, without materializing the set.
i64 bounded_pair_count(const Perm& pi);

// The bijection BP(pi) -> C(pi) x RP(pi): walks the bounded-pair transition
// chain down to the identity, then rebuilds the pipe dream with inverse
// transition steps, appending each deletion column to c on the way back up.
CDPair macdonald_map(const BoundedPair& ab);
BoundedPair inverse_macdonald(const CDPair& cd);

// One row per permutation visited while computing macdonald_map, ending with
// the identity row; used by the worked-example replays.
struct MacdonaldTraceRow {
  Perm pi;
  BoundedPair ab;
  int q = 0, r = 0, k = 0;  // branch taken at this row (absent on the last row)
  Word c;                   // partial image at this level
  PipeDream d;
};
std::vector<MacdonaldTraceRow> macdonald_trace(const BoundedPair& ab);

}  // namespace rw
