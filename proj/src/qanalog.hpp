#pragma once

#include <vector>

#include "bump.hpp"
#include "poly.hpp"
#include "words.hpp"

namespace rw {

// comaj(a) + sum_i (a_i - b_i), the exponent of the combined weight q^(a,b).
int combined_weight_exponent(const BoundedPair& ab);
QPoly combined_weight(const BoundedPair& ab);

// sum over R(pi) of q^comaj(a) [a_1][a_2]...[a_p]; equals the combined-weight
// generating function of BP(pi).
QPoly specialized_bpoly(const Perm& pi);

// y^j_i: splice a crossing into column i with its left foot on the j-wire
// (letter wire_row(a,j,i) - 1) and push it up until reduced. Rejects
// insertions at the top wire (letter 0); the unchecked variant below admits
// them, as the transition machinery does.
Word insert_along_wire(const Word& a, int j, int i);

// The augmented comaj difference word v^j(a): entry i is
// comaj(y^j_i(a)) - comaj(a) + wire_row(a,j,i) - 1, for i = 1..len(a)+1.
// A permutation of [h-1, h+p-1] with h = wire_row(a,j,p+1), every entry a
// record.
struct ComajProfile {
  Word base;
  int wire = 0;
  std::vector<int> values;
};
ComajProfile augmented_comaj_word(const Word& a, int j);

// Single entry v^j_k(a) without building the whole profile.
int augmented_comaj_value(const Word& a, int j, int k);

// Exact half-integers, for insertions strictly between adjacent values.
struct HalfInt {
  int twice = 0;  // the value is twice/2
};
inline HalfInt half(int num, int den2 = 1) { return HalfInt{num * 2 / den2}; }

// Comaj differences (comaj(a with j at column i) - comaj(a)) for
// i = 1..len(a)+1: a permutation of {0,...,p} whenever no two adjacent
// entries of a are equal and j avoids every entry.
std::vector<int> comaj_insertion_profile(const std::vector<int>& a, HalfInt j);
std::vector<int> comaj_insertion_profile(const std::vector<int>& a, int j);

// Data behind one row of the wire-insertion tables: column index i (1-based),
// wire height h, the spliced word, its bump image y, and the comaj statistics.
struct WireInsertionRow {
  int i = 0;
  int h = 0;
  Word spliced;
  Word y;
  int comaj_y = 0;
  int v = 0;
};
std::vector<WireInsertionRow> wire_insertion_rows(const Word& a, int j);

}  // namespace rw
