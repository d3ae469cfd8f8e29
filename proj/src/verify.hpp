#pragma once

#include "macdonald.hpp"
#include "qanalog.hpp"
#include "report.hpp"
#include "tableaux.hpp"

namespace rw {

struct VerifyOptions {
  int jobs = 1;
  // Also map every (c,D) pair back through the inverse and forward again.
  // The forward sweep alone already certifies bijectivity (roundtrip plus
  // exact cardinality); this doubles the work for a direct surjectivity run.
  bool reverse_roundtrip = true;
};

// For every pi in S_n: the counting identity sum_{R(pi)} a_1...a_p =
// p! * S_pi(1,...,1) via two independent routes, and the Macdonald map as a
// bijection BP(pi) -> C(pi) x RP(pi) checked pair by pair.
Report verify_macdonald(int n, const VerifyOptions& opt = {});

// For every pi in S_n: specialized_bpoly(pi) equals
// [p]! * S_pi(1,q,q^2,...) exactly. extra_sample_n5 > 0 additionally checks
// that many seeded-random elements of S_5.
Report verify_q_macdonald(int n, const VerifyOptions& opt = {}, int extra_sample_n5 = 0);

// For every pi != id in S_n: the one-variable transition identity
// B_pi = [p] q^{r-1} B_nu + sum B_{nu t_{qr}}, plus the per-pair weight
// transfer law through the bounded transition.
Report verify_q_transition(int n, const VerifyOptions& opt = {});

// Both equalities relating length and comaj generating functions over S_m,
// for every 2 <= m <= n.
Report verify_macmahon(int n);

// The three-way q-identity for the dominant permutation of shape lambda with
// offset x, plus bijectivity and weight preservation of the composite map.
Report verify_fk(const Partition& lambda, int x, const VerifyOptions& opt = {});

// The transition maps as weight-respecting bijections RP(pi) -> U(pi) and
// BP(pi) -> X(pi) for every pi != id in S_n (brute-force pipe dream domains).
Report verify_transition_bijections(int n, const VerifyOptions& opt = {});

// schubert(pi) == schubert_via_transition(pi) for every pi in S_n.
Report verify_schubert_routes(int n, const VerifyOptions& opt = {});

}  // namespace rw
