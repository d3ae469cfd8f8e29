#pragma once

#include <vector>

#include "macdonald.hpp"
#include "pipedream.hpp"
#include "poly.hpp"

namespace rw {

// Left-justified rows of positive integers (or of values in [0,x] for weak
// reverse plane partitions).
using Tableau = std::vector<std::vector<int>>;
using Partition = std::vector<int>;  // weakly decreasing, positive parts

std::vector<int> tableau_shape(const Tableau& t);
Tableau transpose(const Tableau& t);

struct EGResult {
  Tableau p;  // increasing insertion tableau
  Tableau q;  // standard recording tableau
};

// Row insertion with the Coxeter bump: inserting i into a row containing both
// i and i+1 leaves the row alone and carries i+1 to the next row. Letters are
// inserted left to right; errors on non-reduced input.
EGResult eg_insert(const Word& a);

// I_D: the recording tableau of the column insertion of the diagonal word,
// with entry t replaced by the row number of the t-th crossing. For a reduced
// pipe dream of 1^x x sigma_lambda this is a column-strict tableau of shape
// lambda with row u bounded by u + x; violations are reported as errors.
Tableau pipedream_to_flagged(const PipeDream& d, int x);

// Subtract u from every entry of row u (1-based) and back.
Tableau flagged_to_rpp(const Tableau& flagged, const Partition& lambda, int x);
Tableau rpp_to_flagged(const Tableau& rpp, const Partition& lambda, int x);

// All weak reverse plane partitions of shape lambda with entries in [0,x],
// rows and columns weakly increasing; deterministic order.
std::vector<Tableau> enumerate_rpp(const Partition& lambda, int x);
QPoly rpp_q_weight(const Partition& lambda, int x);  // sum of q^|P|

// All column-strict tableaux of shape lambda with row u entries <= u + x.
std::vector<Tableau> enumerate_flagged(const Partition& lambda, int x);

int rpp_entry_sum(const Tableau& t);
int b_of_lambda(const Partition& lambda);  // sum (i-1) lambda_i

struct FKResult {
  Word c;
  Tableau rpp;
  bool operator==(const FKResult&) const = default;
};

// The composite bijection for a dominant permutation sigma_lambda: shift the
// word up by x, apply the Macdonald map, convert the pipe dream to a flagged
// tableau and subtract the row index. Requires evaluate(a) dominant and
// 1 <= b_i <= a_i + x.
FKResult fk_map(const Word& a, const Word& b, int x);

// Product formula count of bounded pairs with letters offset by x for the
// longest permutation of S_n: C(n,2)! * prod (2x+i+j-1)/(i+j-1).
i64 staircase_rhs(int n, int x);
// The matching sum over R(w0 in S_n) of prod (x + a_i).
i64 staircase_lhs(int n, int x);

}  // namespace rw
