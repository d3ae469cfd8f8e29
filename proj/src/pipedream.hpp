#pragma once

#include <utility>
#include <vector>

#include "bump.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "words.hpp"

namespace rw {

using Cell = std::pair<int, int>;  // (row, column), both >= 1

// Diagonal numbers r and column numbers j of the crossings in reading order.
struct Biword {
  Word r, j;
  bool operator==(const Biword&) const = default;
};

// Finite set of occupied positions in the positive quadrant, kept in reading
// order: rows top to bottom, right to left within a row.
class PipeDream {
 public:
  PipeDream() = default;
  static PipeDream from_cells(std::vector<Cell> cells);  // rejects duplicates
  // Rejects bounded pairs whose crossing list is not in reading order
  // ("not a pipe dream").
  static PipeDream decode(const Biword& bw);

  Biword biword() const;
  Word row_numbers() const;  // i-coordinates in reading order
  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  int size() const { return static_cast<int>(cells_.size()); }

  Perm permutation() const;  // evaluate of the diagonal word
  bool reduced() const;
  Polynomial weight() const;  // the monomial prod_{(i,j) in D} x_i

  bool operator==(const PipeDream&) const = default;
  bool operator<(const PipeDream& o) const { return cells_ < o.cells_; }

  std::string str() const;  // cells in reading order, "(1,2)(2,2)(2,1)"

 private:
  std::vector<Cell> cells_;
};

// Whether the bounded pair (r, j) lists the crossings of a pipe dream in
// reading order, i.e. the pairs (r_k - j_k + 1, -j_k) strictly increase.
bool encodes_pipe_dream(const Word& r, const Word& j);

enum class EnumStrategy { chains, brute };

// All reduced pipe dreams for pi, sorted by cell list. The chains strategy
// replays every transition chain; brute searches subsets of the staircase
// region (guarded to small windows, used as an independent oracle).
std::vector<PipeDream> pipe_dreams(const Perm& pi, EnumStrategy s = EnumStrategy::chains);

// Schubert polynomial as the weight generating function of pipe_dreams(pi).
Polynomial schubert(const Perm& pi);
// Same polynomial by the transition recurrence with memoization on the
// permutation; an algebraically independent route.
Polynomial schubert_via_transition(const Perm& pi);

}  // namespace rw
