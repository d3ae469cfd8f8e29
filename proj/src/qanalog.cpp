#include "qanalog.hpp"

#include <stdexcept>

namespace rw {

int combined_weight_exponent(const BoundedPair& ab) {
  int e = comaj(ab.a);
  for (size_t i = 0; i < ab.a.size(); ++i) e += ab.a[i] - ab.b[i];
  return e;
}

QPoly combined_weight(const BoundedPair& ab) {
  check_bounded_pair(ab);
  return QPoly::q_power(combined_weight_exponent(ab));
}

QPoly specialized_bpoly(const Perm& pi) {
  QPoly total;
  for (const Word& a : reduced_words(pi)) {
    QPoly term = QPoly::q_power(comaj(a));
    for (int x : a) term *= q_int(x);
    total += term;
  }
  return total;
}

namespace {

Word splice_and_bump(const Word& a, int i, int letter) {
  Word spliced = insert_at(a, i, letter);
  BumpResult res = bounded_bump(spliced, spliced, i, Direction::increment);
  if (res.outcome != Outcome::bumped) throw std::logic_error("increment bump deleted");
  return std::move(res.a);
}

}  // namespace

Word insert_along_wire(const Word& a, int j, int i) {
  if (!is_reduced(a)) throw std::invalid_argument("word must be reduced");
  const int h = wire_row(a, j, i);
  if (h == 1) throw std::invalid_argument("insertion along the top wire would place letter 0");
  return splice_and_bump(a, i, h - 1);
}

int augmented_comaj_value(const Word& a, int j, int k) {
  if (!is_reduced(a)) throw std::invalid_argument("word must be reduced");
  const int h = wire_row(a, j, k);
  const Word y = splice_and_bump(a, k, h - 1);
  return comaj(y) - comaj(a) + h - 1;
}

ComajProfile augmented_comaj_word(const Word& a, int j) {
  ComajProfile prof;
  prof.base = a;
  prof.wire = j;
  for (int i = 1; i <= static_cast<int>(a.size()) + 1; ++i)
    prof.values.push_back(augmented_comaj_value(a, j, i));
  return prof;
}

std::vector<int> comaj_insertion_profile(const std::vector<int>& a, HalfInt j) {
  for (size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] == a[i + 1]) throw std::invalid_argument("adjacent entries must differ");
  for (int x : a)
    if (2 * x == j.twice) throw std::invalid_argument("inserted value must avoid every entry");
  Word doubled;
  doubled.reserve(a.size());
  for (int x : a) doubled.push_back(2 * x);
  const int base = comaj(doubled);
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(a.size()) + 1; ++i) {
    Word w = doubled;
    w.insert(w.begin() + (i - 1), j.twice);
    out.push_back(comaj(w) - base);
  }
  return out;
}

std::vector<int> comaj_insertion_profile(const std::vector<int>& a, int j) {
  return comaj_insertion_profile(a, HalfInt{2 * j});
}

std::vector<WireInsertionRow> wire_insertion_rows(const Word& a, int j) {
  if (!is_reduced(a)) throw std::invalid_argument("word must be reduced");
  std::vector<WireInsertionRow> rows;
  const int base = comaj(a);
  for (int i = 1; i <= static_cast<int>(a.size()) + 1; ++i) {
    WireInsertionRow row;
    row.i = i;
    row.h = wire_row(a, j, i);
    row.spliced = insert_at(a, i, row.h - 1);
    row.y = splice_and_bump(a, i, row.h - 1);
    row.comaj_y = comaj(row.y);
    row.v = row.comaj_y - base + row.h - 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rw
