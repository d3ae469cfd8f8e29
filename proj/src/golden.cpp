#include "golden.hpp"

#include <fstream>

#include "jsonio.hpp"
#include "qanalog.hpp"

namespace rw {

namespace {

json load(const std::string& dir, const std::string& name) {
  std::ifstream in(dir + "/" + name);
  if (!in) throw std::invalid_argument("cannot open fixture " + dir + "/" + name);
  json j;
  in >> j;
  return j;
}

struct Checker {
  explicit Checker(Report& r) : rep(r) {}
  Report& rep;
  std::string current;
  bool current_ok = true;

  void begin(std::string name) {
    current = std::move(name);
    current_ok = true;
  }
  void finish() {
    rep.rows.push_back({current, current_ok ? "pass" : "FAIL"});
    rep.ok = rep.ok && current_ok;
  }
  template <class T, class U>
  void eq(const T& got, const U& want, const std::string& what) {
    if (got == want) return;
    current_ok = false;
    rep.failures.push_back(current + ": " + what + " mismatch, got " + json(got).dump() +
                           ", want " + json(want).dump());
  }
};

std::vector<Cell> cells_from_json(const json& j) {
  std::vector<Cell> cells;
  for (const auto& c : j) cells.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  return cells;
}

void check_bumps(Checker& ck, const json& fx) {
  for (const auto& c : fx.at("cases")) {
    ck.begin(c.at("name").get<std::string>());
    const Direction dir =
        c.at("delta").get<std::string>() == "+" ? Direction::increment : Direction::decrement;
    BumpResult got = bounded_bump(word_from_json(c.at("a")), word_from_json(c.at("b")),
                                  c.at("t0").get<int>(), dir);
    const auto& e = c.at("expect");
    ck.eq(got.a, word_from_json(e.at("a")), "a'");
    ck.eq(got.b, word_from_json(e.at("b")), "b'");
    ck.eq(got.row, e.at("i").get<int>(), "row");
    ck.eq(got.column, e.at("j").get<int>(), "column");
    ck.eq(std::string(got.outcome == Outcome::bumped ? "bumped" : "deleted"),
          e.at("outcome").get<std::string>(), "outcome");
    ck.finish();
  }
}

void check_transition_case(Checker& ck, const json& fx) {
  {
    ck.begin("transition-example");
    const auto& ex = fx.at("example");
    PipeDreamStep step = transition_map(pipedream_from_json(ex.at("d")));
    ck.eq(step.out.cells(), pipedream_from_json(ex.at("expect").at("e")).cells(), "E");
    ck.eq(step.q, ex.at("expect").at("q").get<int>(), "q");
    ck.eq(step.r, ex.at("expect").at("r").get<int>(), "r");
    ck.finish();
  }
  const auto& ch = fx.at("chain");
  PipeDream d = PipeDream::from_cells(cells_from_json(ch.at("cells")));
  PipeDream cur = d;
  int rowno = 0;
  for (const auto& row : ch.at("rows")) {
    ck.begin("chain-row-" + std::to_string(++rowno));
    ck.eq(cur.cells(), PipeDream::from_cells(cells_from_json(row.at("cells"))).cells(),
          "pipe dream");
    const Perm pi = cur.permutation();
    ck.eq(pi.window(), perm_from_json(row.at("pi")).window(), "pi");
    const auto [r, s] = pi.lex_largest_inversion();
    ck.eq(std::vector<int>{r, s}, row.at("rs").get<std::vector<int>>(), "(r,s)");
    PipeDreamStep step = transition_map(cur);
    ck.eq(std::vector<int>{step.q, step.r}, row.at("qr").get<std::vector<int>>(), "(q,r)");
    cur = step.out;
    ck.finish();
  }
  ck.begin("chain-value");
  ck.eq(cur.empty(), true, "terminal pipe dream");
  ck.eq(to_json(transition_chain(d)), fx.at("chain").at("chain"), "Y(D)");
  ck.eq(pipe_dream_from_chain(chain_from_json(fx.at("chain").at("chain"))).cells(),
        d.cells(), "replay");
  ck.finish();
}

void check_shared_chain(Checker& ck, const json& fx) {
  const TransitionChain want = chain_from_json(fx.at("chain"));
  int idx = 0;
  for (const auto& pj : fx.at("pairs")) {
    ck.begin("shared-chain-pair-" + std::to_string(++idx));
    const BoundedPair ab{word_from_json(pj.at("a")), word_from_json(pj.at("b"))};
    ck.eq(to_json(bounded_chain(ab)), to_json(want), "Y'");
    ck.finish();
  }
}

void check_trace(Checker& ck, const std::string& prefix, const json& fx) {
  const BoundedPair ab{word_from_json(fx.at("a")), word_from_json(fx.at("b"))};
  const auto rows = macdonald_trace(ab);
  const auto& want_rows = fx.at("rows");
  {
    ck.begin(prefix + "-shape");
    ck.eq(rows.size(), want_rows.size(), "row count");
    ck.finish();
  }
  for (size_t i = 0; i < rows.size() && i < want_rows.size(); ++i) {
    ck.begin(prefix + "-row-" + std::to_string(i + 1));
    const auto& w = want_rows[i];
    ck.eq(rows[i].pi.window(), perm_from_json(w.at("pi")).window(), "pi");
    ck.eq(rows[i].ab.a, word_from_json(w.at("a")), "a");
    ck.eq(rows[i].ab.b, word_from_json(w.at("b")), "b");
    if (w.contains("q")) {
      ck.eq(rows[i].q, w.at("q").get<int>(), "q");
      ck.eq(rows[i].r, w.at("r").get<int>(), "r");
      ck.eq(rows[i].k, w.at("k").get<int>(), "k");
    }
    ck.eq(rows[i].c, word_from_json(w.at("c")), "c");
    const Biword bw = rows[i].d.biword();
    ck.eq(bw.r, word_from_json(w.at("rd")), "r_D");
    ck.eq(bw.j, word_from_json(w.at("jd")), "j_D");
    ck.finish();
  }
}

void check_biword(Checker& ck, const json& fx) {
  ck.begin("biword-decode");
  const PipeDream d = pipedream_from_json(fx);
  const auto& e = fx.at("expect");
  ck.eq(d.row_numbers(), word_from_json(e.at("i")), "i_D");
  ck.eq(d.permutation().window(), perm_from_json(e.at("pi")).window(), "permutation");
  ck.eq(d.reduced(), e.at("reduced").get<bool>(), "reduced");
  ck.eq(to_json(d.weight()),
        to_json(Polynomial::monomial(e.at("weight_exponents").get<std::vector<int>>())),
        "weight");
  ck.eq(to_json(d), json{{"r", fx.at("r")}, {"j", fx.at("j")}}, "re-encode");
  ck.finish();
}

void check_wire_table(Checker& ck, const std::string& name, const Word& word, int wire,
                      const json& table, int i_offset) {
  ck.begin(name);
  ck.eq(comaj(word), table.at("comaj").get<int>(), "comaj");
  const auto rows = wire_insertion_rows(word, wire);
  const auto prof = augmented_comaj_word(word, wire);
  const auto& want_rows = table.at("rows");
  ck.eq(rows.size(), want_rows.size(), "row count");
  Word v_got;
  for (size_t i = 0; i < rows.size() && i < want_rows.size(); ++i) {
    const auto& w = want_rows[i];
    const std::string at = "row i=" + std::to_string(w.at("i").get<int>());
    ck.eq(rows[i].i - 1 + i_offset, w.at("i").get<int>(), at + " index");
    ck.eq(rows[i].h, w.at("h").get<int>(), at + " h");
    ck.eq(rows[i].spliced, word_from_json(w.at("insert")), at + " insert");
    ck.eq(rows[i].y, word_from_json(w.at("y")), at + " y");
    ck.eq(rows[i].comaj_y, w.at("comaj_y").get<int>(), at + " comaj(y)");
    ck.eq(rows[i].v, w.at("v").get<int>(), at + " v");
    v_got.push_back(rows[i].v);
  }
  ck.eq(v_got, prof.values, "profile consistency");
  ck.eq(prof.values, table.at("v").get<std::vector<int>>(), "v word");
  ck.finish();
}

void check_wire_tables(Checker& ck, const json& fx) {
  const Word word = word_from_json(fx.at("word"));
  const int wire = fx.at("wire").get<int>();
  {
    ck.begin("wire-table-empty-prefix");
    ck.eq(augmented_comaj_word({}, wire).values,
          fx.at("empty_prefix_v").get<std::vector<int>>(), "v");
    ck.finish();
  }
  for (const auto& table : fx.at("prefix_tables")) {
    const int len = table.at("len").get<int>();
    const Word prefix(word.begin(), word.begin() + len);
    check_wire_table(ck, "wire-table-prefix-" + std::to_string(len), prefix, wire, table, 0);
  }
  check_wire_table(ck, "wire-table-main", word, wire, fx.at("main_table"), 1);
}

}  // namespace

Report replay_paper_examples(const std::string& fixtures_dir) {
  Report rep;
  rep.title = "replay-paper";
  rep.header = {"case", "status"};
  Checker ck(rep);
  check_bumps(ck, load(fixtures_dir, "bump_cases.json"));
  check_transition_case(ck, load(fixtures_dir, "transition_case.json"));
  check_shared_chain(ck, load(fixtures_dir, "shared_chain_pairs.json"));
  check_trace(ck, "trace-small", load(fixtures_dir, "macdonald_trace_small.json"));
  check_trace(ck, "trace-large", load(fixtures_dir, "macdonald_trace_large.json"));
  check_biword(ck, load(fixtures_dir, "biword_case.json"));
  check_wire_tables(ck, load(fixtures_dir, "wire_tables.json"));
  return rep;
}

}  // namespace rw
