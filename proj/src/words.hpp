#pragma once

#include <utility>
#include <vector>

#include "perm.hpp"

namespace rw {

// A word is a tuple of positive integers; the empty word is the identity.
using Word = std::vector<int>;
using WirePair = std::pair<int, int>;  // unordered pair stored as (min, max)

enum class WordStatus { reduced, nearly_reduced, neither };

// s_{a_1} s_{a_2} ... s_{a_k}, normalized.
Perm evaluate(const Word& a);

bool is_reduced(const Word& a);
// Whether deleting column t leaves a reduced word.
bool is_nearly_reduced_at(const Word& a, int t);
// Same check without materializing the deletion.
bool is_reduced_skipping(const Word& a, int t);
WordStatus word_status(const Word& a);

// For a non-reduced word that is nearly reduced at t: the unique other column
// where the two wires crossing at column t cross again.
int defect(const Word& a, int t);

// Wire pair crossing at column t with wires labeled 1,2,... down the right
// edge. For reduced a, over all t this enumerates Inv(evaluate(a)).
WirePair right_labeled_crossing(const Word& a, int t);
std::vector<WirePair> right_labeled_crossings(const Word& a);
// Same with wires labeled down the left edge; columns with equal pairs are
// exactly the repeated crossings of a non-reduced word.
std::vector<WirePair> left_labeled_crossings(const Word& a);

// Column of the {q,r}-wire crossing in a reduced word; errors if (q,r) is not
// an inversion of evaluate(a).
int column_of_crossing(const Word& a, WirePair wires);
// Trusting callers that already validated reducedness.
int column_of_crossing_unchecked(const Word& a, WirePair wires);

// Sum of ascent positions {i : a_i < a_{i+1}}. Defined for arbitrary integer
// sequences.
int comaj(const Word& a);
std::vector<int> ascent_set(const Word& a);

// R(pi) in lexicographic order; R(id) = {()}.
std::vector<Word> reduced_words(const Perm& pi);

// Row of the j-wire of the left-labeled diagram at time i-1, for
// 1 <= i <= len(a)+1:  s_{a_{i-1}} ... s_{a_1}(j).
int wire_row(const Word& a, int j, int i);

}  // namespace rw
