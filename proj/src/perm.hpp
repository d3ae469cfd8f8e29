#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace rw {

using Window = std::vector<int>;
using Inversion = std::pair<int, int>;  // (i, j) with i < j and pi(i) > pi(j)

// Permutation of {1,2,3,...} fixing all but finitely many points. Stored as
// the one-line window [pi(1),...,pi(n)] with trailing fixed points trimmed,
// so equal permutations compare equal regardless of the ambient S_n they came
// from. The identity has an empty window.
class Perm {
 public:
  Perm() = default;

  static Perm identity() { return Perm(); }
  // Validates that w is a rearrangement of {1,...,n}; trims trailing fixed points.
  static Perm from_window(Window w);
  // The transposition t_{ij} swapping i and j.
  static Perm transposition(int i, int j);

  int operator()(int i) const;  // pi(i), defined for every i >= 1
  const Window& window() const { return win_; }
  // Window padded with fixed points up to length n.
  Window window(int n) const;
  int size() const { return static_cast<int>(win_.size()); }
  bool is_identity() const { return win_.empty(); }

  Perm inverse() const;
  // this * t_{ij}: swaps the window entries at positions i and j.
  Perm times_transposition(int i, int j) const;

  int length() const;  // number of inversions
  // Inv(pi) in reverse lexicographic order (lex largest inversion first).
  std::vector<Inversion> inversions() const;
  // Errors on the identity ("no inversions"). The first coordinate is the
  // position of the last descent; the second is the largest s with
  // pi(r) > pi(s).
  Inversion lex_largest_inversion() const;

  bool is_dominant() const;

  bool operator==(const Perm&) const = default;
  // Window order; used for map keys, not the inversion order below.
  bool operator<(const Perm& o) const { return win_ < o.win_; }

  std::string str() const;            // "[2,4,1,3]", identity is "[]"
  std::string one_line(int n) const;  // "2,4,1,3" padded to length n

 private:
  Window win_;
  void normalize();
};

// Composition: (a*b)(i) = a(b(i)).
Perm operator*(const Perm& a, const Perm& b);

// The inversion order used as the termination measure of every transition
// recursion: tau < pi iff Inv(tau) < Inv(pi) lexicographically as lists.
std::strong_ordering inversion_order_cmp(const Perm& tau, const Perm& pi);

// Lehmer code of length size(); entry i counts inversions (i, j).
std::vector<int> lehmer_code(const Perm& pi);
// Inverse of lehmer_code; rejects codes violating 0 <= L_i <= n-i.
Perm lehmer_decode(const std::vector<int>& code);
// Dominant permutation in S_{p+1} whose code is lambda padded with zeros,
// where p = |lambda|. Rejects inputs that are not weakly decreasing.
Perm dominant_from_partition(const std::vector<int>& lambda);
// 1^x x pi: fixes 1..x and maps x+i to pi(i)+x.
Perm shift_embed(int x, const Perm& pi);

// All of S_n in lexicographic window order (n! elements, identity first).
std::vector<Perm> all_perms(int n);

}  // namespace rw
