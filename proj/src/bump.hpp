#pragma once

#include <functional>

#include "words.hpp"

namespace rw {

enum class Direction { decrement, increment };
enum class Outcome { bumped, deleted };

// A reduced word plus a companion word metering how many decrements each
// column tolerates before deletion: 1 <= b_i <= a_i.
struct BoundedPair {
  Word a, b;
  bool operator==(const BoundedPair&) const = default;
  bool operator<(const BoundedPair& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

void check_bounded_pair(const BoundedPair& ab);  // throws std::invalid_argument
bool is_bounded_pair(const BoundedPair& ab);

struct BumpResult {
  Word a, b;
  int row = 0;     // value of the last pushed letter
  int column = 0;  // column of the last push
  Outcome outcome = Outcome::bumped;
  bool operator==(const BumpResult&) const = default;
};

// The four elementary word edits.
Word dec_push(const Word& a, int t);  // errors if the result would be negative
Word inc_push(const Word& a, int t);
Word delete_at(const Word& a, int t);
Word insert_at(const Word& a, int t, int x);  // x becomes column t

// Invoked after every push with (t, a', b').
using PushObserver = std::function<void(int, const Word&, const Word&)>;

// Repeatedly pushes in the given direction starting at column t0, following
// the defect column, until the word becomes reduced (bumped) or a bound hits
// zero (deleted; only possible when decrementing).
//
// Requires a nearly reduced at t0 and b bounded for a. A zero entry is
// tolerated at column t0 only, and only when incrementing: inverse transitions
// splice in a crossing with letter r-1 and bound 0 and immediately push it up.
BumpResult bounded_bump(const Word& a, const Word& b, int t0, Direction dir,
                        const PushObserver& observe = nullptr);

// bounded_bump with the word bounding itself. When incrementing the outcome
// is always bumped; the returned word is the classical bump image.
Word little_bump(const Word& a, int t0, Direction dir);

}  // namespace rw
