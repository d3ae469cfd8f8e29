#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>

namespace rw {

namespace {

struct CaseResult {
  std::vector<std::string> row;
  bool ok = true;
  std::vector<std::string> failures;
};

// Runs fn(i) for i in [0, count) on opt.jobs workers; results keep index order.
std::vector<CaseResult> run_cases(int count, int jobs,
                                  const std::function<CaseResult(int)>& fn) {
  std::vector<CaseResult> results(count);
  jobs = std::clamp(jobs, 1, 16);
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      results[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

Report collect(std::string title, std::vector<std::string> header, int count, int jobs,
               const std::function<CaseResult(int)>& fn) {
  Report rep;
  rep.title = std::move(title);
  rep.header = std::move(header);
  for (CaseResult& res : run_cases(count, jobs, fn)) {
    rep.rows.push_back(std::move(res.row));
    rep.ok = rep.ok && res.ok;
    for (auto& f : res.failures) rep.failures.push_back(std::move(f));
  }
  return rep;
}

std::string word_str(const Word& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

Report verify_macdonald(int n, const VerifyOptions& opt) {
  const auto perms = all_perms(n);
  auto fn = [&](int idx) {
    const Perm& pi = perms[idx];
    CaseResult res;
    const int p = pi.length();
    const auto words = reduced_words(pi);
    const auto dreams = pipe_dreams(pi);
    const i64 n_bp = bounded_pair_count(pi);
    const i64 schubert_ones = schubert_via_transition(pi).eval_ones();
    bool ok = true;
    auto fail = [&](const std::string& msg) {
      ok = false;
      res.failures.push_back(pi.str() + ": " + msg);
    };

    if (schubert_ones != static_cast<i64>(dreams.size()))
      fail("pipe dream count disagrees with the transition recurrence");
    if (n_bp != checked_mul(factorial(p), schubert_ones))
      fail("counting identity |BP| = p! * S(1,...,1) failed");

    // Forward roundtrip on every bounded pair; injectivity follows, and the
    // exact cardinality match upgrades it to a bijection.
    std::set<PipeDream> dream_set(dreams.begin(), dreams.end());
    i64 seen = 0;
    for_each_bounded_pair(pi, [&](const Word& a, const Word& b) {
      if (!ok) return;
      ++seen;
      const BoundedPair ab{a, b};
      CDPair cd = macdonald_map(ab);
      for (size_t i = 0; i < cd.c.size(); ++i)
        if (cd.c[i] < 1 || cd.c[i] > static_cast<int>(i) + 1) fail("image c not sub-staircase");
      if (static_cast<int>(cd.c.size()) != p) fail("image c has wrong length");
      if (!dream_set.count(cd.d)) fail("image pipe dream not in RP(pi)");
      if (inverse_macdonald(cd) != ab) fail("inverse failed to recover " + word_str(a));
    });
    if (ok && seen != n_bp) fail("bounded pair iteration count mismatch");

    if (ok && opt.reverse_roundtrip && p > 0) {
      Word c(p, 1);
      for (const PipeDream& d : dreams) {
        std::fill(c.begin(), c.end(), 1);
        for (;;) {
          const CDPair cd{c, d};
          BoundedPair ab = inverse_macdonald(cd);
          if (evaluate(ab.a) != pi || !(macdonald_map(ab) == cd)) {
            fail("reverse roundtrip failed at c=" + word_str(c));
            break;
          }
          int i = p - 1;
          while (i >= 0 && c[i] == i + 1) c[i--] = 1;
          if (i < 0) break;
          ++c[i];
        }
        if (!ok) break;
      }
    }

    res.ok = ok;
    res.row = {pi.one_line(n), std::to_string(p), std::to_string(words.size()),
               std::to_string(n_bp), std::to_string(dreams.size()), pass_fail(ok)};
    return res;
  };
  return collect("macdonald", {"pi", "p", "|R|", "|BP|", "|RP|", "status"},
                 static_cast<int>(perms.size()), opt.jobs, fn);
}

namespace {

CaseResult q_macdonald_case(const Perm& pi, int n) {
  CaseResult res;
  const QPoly lhs = specialized_bpoly(pi);
  const QPoly rhs = q_factorial(pi.length()) * principal_specialization(schubert(pi));
  const bool ok = lhs == rhs;
  if (!ok)
    res.failures.push_back(pi.str() + ": " + lhs.str() + " != " + rhs.str());
  res.ok = ok;
  res.row = {pi.one_line(n), std::to_string(pi.length()), pass_fail(ok)};
  return res;
}

}  // namespace

Report verify_q_macdonald(int n, const VerifyOptions& opt, int extra_sample_n5) {
  const auto perms = all_perms(n);
  Report rep = collect("q-macdonald", {"pi", "p", "status"}, static_cast<int>(perms.size()),
                       opt.jobs, [&](int idx) { return q_macdonald_case(perms[idx], n); });
  if (extra_sample_n5 > 0) {
    const auto pool = all_perms(5);
    std::mt19937 rng(20240311);
    std::vector<int> indices(pool.size());
    for (size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<int>(i);
    std::shuffle(indices.begin(), indices.end(), rng);
    for (int i = 0; i < extra_sample_n5 && i < static_cast<int>(indices.size()); ++i) {
      CaseResult res = q_macdonald_case(pool[indices[i]], 5);
      rep.rows.push_back(std::move(res.row));
      rep.ok = rep.ok && res.ok;
      for (auto& f : res.failures) rep.failures.push_back(std::move(f));
    }
  }
  return rep;
}

Report verify_q_transition(int n, const VerifyOptions& opt) {
  const auto perms = all_perms(n);
  auto fn = [&](int idx) {
    const Perm& pi = perms[idx];
    CaseResult res;
    if (pi.is_identity()) {
      res.row = {pi.one_line(n), "0", "-", "-", "pass"};
      return res;
    }
    bool eq_recurrence = true, eq_weights = true;
    const TransitionContext ctx = transition_context(pi);
    const int p = pi.length();

    QPoly rhs = q_int(p) * QPoly::q_power(ctx.r - 1) * specialized_bpoly(ctx.nu);
    for (const auto& [q, target] : ctx.lower) rhs += specialized_bpoly(target);
    eq_recurrence = specialized_bpoly(pi) == rhs;
    if (!eq_recurrence) res.failures.push_back(pi.str() + ": transition identity failed");

    for_each_bounded_pair(pi, [&](const Word& a, const Word& b) {
      if (!eq_weights) return;
      const BoundedPair ab{a, b};
      BoundedPairStep step = bounded_transition(ab);
      int expected = combined_weight_exponent(step.out);
      if (step.k > 0) {
        // The deleted crossing rode the wire labeled r down the right edge,
        // i.e. the nu(r)-wire of the left labeling of the output word.
        const Perm nu = evaluate(step.out.a);
        expected += augmented_comaj_value(step.out.a, nu(ctx.r), step.k);
      }
      if (combined_weight_exponent(ab) != expected) {
        eq_weights = false;
        res.failures.push_back(pi.str() + ": weight transfer failed at " + word_str(a) + "," +
                               word_str(b));
      }
    });

    res.ok = eq_recurrence && eq_weights;
    res.row = {pi.one_line(n), std::to_string(p), pass_fail(eq_recurrence),
               pass_fail(eq_weights), pass_fail(res.ok)};
    return res;
  };
  return collect("q-transition", {"pi", "p", "recurrence", "weights", "status"},
                 static_cast<int>(perms.size()), opt.jobs, fn);
}

Report verify_macmahon(int n) {
  Report rep;
  rep.title = "macmahon";
  rep.header = {"n", "insert", "comaj", "status"};
  for (int m = 2; m <= n; ++m) {
    QPoly by_length, by_comaj, prev_by_length;
    for (const Perm& pi : all_perms(m)) by_length += QPoly::q_power(pi.length());
    for (const Perm& pi : all_perms(m)) by_comaj += QPoly::q_power(comaj(pi.window(m)));
    if (m == 2) {
      prev_by_length = QPoly::constant(1);
    } else {
      for (const Perm& pi : all_perms(m - 1)) prev_by_length += QPoly::q_power(pi.length());
    }
    const bool eq_insert = by_length == q_int(m) * prev_by_length;
    const bool eq_comaj = by_length == by_comaj;
    if (!eq_insert) rep.failures.push_back("n=" + std::to_string(m) + ": insertion identity failed");
    if (!eq_comaj) rep.failures.push_back("n=" + std::to_string(m) + ": comaj identity failed");
    rep.ok = rep.ok && eq_insert && eq_comaj;
    rep.rows.push_back({std::to_string(m), pass_fail(eq_insert), pass_fail(eq_comaj),
                        pass_fail(eq_insert && eq_comaj)});
  }
  return rep;
}

Report verify_fk(const Partition& lambda, int x, const VerifyOptions&) {
  Report rep;
  rep.title = "fomin-kirillov";
  rep.header = {"lambda", "x", "p", "|BP|", "|rpp|", "identity", "bijection", "status"};

  const Perm sigma = dominant_from_partition(lambda);
  const Perm shifted_perm = shift_embed(x, sigma);
  const int p = sigma.length();
  std::string lam = "(";
  for (size_t i = 0; i < lambda.size(); ++i) lam += (i ? "," : "") + std::to_string(lambda[i]);
  lam += ")";

  // Three routes to the same polynomial.
  QPoly lhs;
  for (const Word& a : reduced_words(sigma)) {
    QPoly term = QPoly::q_power(comaj(a));
    for (int v : a) term *= q_int(v + x);
    lhs += term;
  }
  const QPoly mid = q_factorial(p) * principal_specialization(schubert(shifted_perm));
  const QPoly rhs = q_factorial(p) * QPoly::q_power(b_of_lambda(lambda)) * rpp_q_weight(lambda, x);
  const bool identity_ok = lhs == mid && mid == rhs;
  if (!identity_ok)
    rep.failures.push_back(lam + " x=" + std::to_string(x) + ": " + lhs.str() + " / " +
                           mid.str() + " / " + rhs.str());

  // Bijectivity of the composite map: injectivity plus an exact cardinality
  // match, with the image weights re-summing to the right side (the sense in
  // which the map preserves the q-weight).
  bool bijection_ok = true;
  std::set<std::pair<Word, Tableau>> images;
  QPoly image_weight;
  i64 pairs = 0;
  const auto rpps = enumerate_rpp(lambda, x);
  for (const Word& a : reduced_words(sigma)) {
    Word b(a.size(), 1);
    for (;;) {
      ++pairs;
      FKResult out = fk_map(a, b, x);
      int expo = b_of_lambda(lambda) + rpp_entry_sum(out.rpp);
      for (size_t i = 0; i < out.c.size(); ++i) expo += out.c[i] - 1;
      image_weight += QPoly::q_power(expo);
      if (!images.emplace(out.c, out.rpp).second) {
        bijection_ok = false;
        rep.failures.push_back(lam + ": image collision at " + word_str(a));
      }
      int i = static_cast<int>(b.size()) - 1;
      while (i >= 0 && b[i] == a[i] + x) b[i--] = 1;
      if (i < 0) break;
      ++b[i];
    }
  }
  if (pairs != checked_mul(factorial(p), static_cast<i64>(rpps.size()))) {
    bijection_ok = false;
    rep.failures.push_back(lam + ": cardinality mismatch");
  }
  if (image_weight != rhs) {
    bijection_ok = false;
    rep.failures.push_back(lam + ": image weights do not resum to the identity");
  }

  rep.ok = identity_ok && bijection_ok;
  rep.rows.push_back({lam, std::to_string(x), std::to_string(p), std::to_string(pairs),
                      std::to_string(rpps.size()), pass_fail(identity_ok),
                      pass_fail(bijection_ok), pass_fail(rep.ok)});
  return rep;
}

Report verify_transition_bijections(int n, const VerifyOptions& opt) {
  const auto perms = all_perms(n);
  auto fn = [&](int idx) {
    const Perm& pi = perms[idx];
    CaseResult res;
    if (pi.is_identity()) {
      res.row = {pi.one_line(n), "-", "-", "pass"};
      return res;
    }
    bool pd_ok = true, bp_ok = true;
    auto fail = [&](bool& flag, const std::string& msg) {
      flag = false;
      res.failures.push_back(pi.str() + ": " + msg);
    };
    const TransitionContext ctx = transition_context(pi);

    // Pipe dream side, with the brute-force enumeration as the domain oracle.
    {
      std::map<PipeDream, int> hit;  // codomain U(pi)
      for (const PipeDream& e : pipe_dreams(ctx.nu, EnumStrategy::brute)) hit[e] = 0;
      for (const auto& [q, target] : ctx.lower)
        for (const PipeDream& e : pipe_dreams(target, EnumStrategy::brute)) hit[e] = 0;
      for (const PipeDream& d : pipe_dreams(pi, EnumStrategy::brute)) {
        PipeDreamStep step = transition_map(d);
        auto it = hit.find(step.out);
        if (it == hit.end()) {
          fail(pd_ok, "transition image outside U(pi)");
          continue;
        }
        ++it->second;
        const Polynomial expect = step.q == step.r
                                      ? Polynomial::variable(step.r) * step.out.weight()
                                      : step.out.weight();
        if (d.weight() != expect) fail(pd_ok, "transition weight law failed");
        if (!(inverse_transition_map(step.out, step.q, step.r) == d))
          fail(pd_ok, "inverse transition roundtrip failed");
      }
      for (const auto& [e, count] : hit)
        if (count != 1) fail(pd_ok, "transition not bijective onto U(pi) at " + e.str());
    }

    // Bounded pair side: X(pi) = BP(nu) x [1,p] union BP(nu t_{qr}) x {0}.
    {
      const int p = pi.length();
      std::map<std::pair<BoundedPair, int>, int> hit;
      for (const BoundedPair& ef : bounded_pairs(ctx.nu))
        for (int k = 1; k <= p; ++k) hit[{ef, k}] = 0;
      for (const auto& [q, target] : ctx.lower)
        for (const BoundedPair& ef : bounded_pairs(target)) hit[{ef, 0}] = 0;
      for (const BoundedPair& ab : bounded_pairs(pi)) {
        BoundedPairStep step = bounded_transition(ab);
        if ((step.k == 0) != (step.q < step.r)) fail(bp_ok, "k = 0 must match q < r");
        auto it = hit.find({step.out, step.k});
        if (it == hit.end()) {
          fail(bp_ok, "bounded transition image outside X(pi)");
          continue;
        }
        ++it->second;
        if (!(inverse_bounded_transition(step.out, step.k, step.q, step.r) == ab))
          fail(bp_ok, "inverse bounded transition roundtrip failed");
      }
      for (const auto& [key, count] : hit)
        if (count != 1) fail(bp_ok, "bounded transition not bijective onto X(pi)");
    }

    res.ok = pd_ok && bp_ok;
    res.row = {pi.one_line(n), pass_fail(pd_ok), pass_fail(bp_ok), pass_fail(res.ok)};
    return res;
  };
  return collect("transition-bijections", {"pi", "pipe_dreams", "bounded_pairs", "status"},
                 static_cast<int>(perms.size()), opt.jobs, fn);
}

Report verify_schubert_routes(int n, const VerifyOptions& opt) {
  const auto perms = all_perms(n);
  auto fn = [&](int idx) {
    const Perm& pi = perms[idx];
    CaseResult res;
    const bool ok = schubert(pi) == schubert_via_transition(pi);
    if (!ok) res.failures.push_back(pi.str() + ": schubert routes disagree");
    res.ok = ok;
    res.row = {pi.one_line(n), pass_fail(ok)};
    return res;
  };
  return collect("schubert-routes", {"pi", "status"}, static_cast<int>(perms.size()), opt.jobs,
                 fn);
}

}  // namespace rw
