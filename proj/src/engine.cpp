#include "engine.hpp"

#include <stdexcept>

#include "golden.hpp"
#include "jsonio.hpp"
#include "qanalog.hpp"
#include "verify.hpp"

namespace rw {

namespace {

constexpr int kHardCapN = 7;  // keeps every sweep finite at desk scale

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string fetch_format(const json& req, const std::string& fallback) {
  const std::string f = req.value("format", fallback);
  if (f != "json" && f != "tsv") throw Usage("format must be json or tsv");
  return f;
}

int fetch_n(const json& req, int cap) {
  if (!req.contains("n")) throw Usage("missing n");
  const int n = req.at("n").get<int>();
  if (n < 1 || n > kHardCapN) throw Usage("n must be between 1 and " + std::to_string(kHardCapN));
  if (n > cap) throw Usage("n capped at " + std::to_string(cap) + " for this verification");
  return n;
}

VerifyOptions fetch_options(const json& req) {
  VerifyOptions opt;
  opt.jobs = req.value("jobs", 1);
  if (opt.jobs < 1 || opt.jobs > 16) throw Usage("jobs must be between 1 and 16");
  return opt;
}

std::string render(const Report& rep, const std::string& format) {
  return format == "tsv" ? rep.tsv() : to_json(rep).dump(2) + "\n";
}

Word comma_list(const json& j, const char* what) {
  if (j.is_array()) return word_from_json(j);
  if (!j.is_string()) throw Usage(std::string(what) + " must be an array or comma list");
  Word out;
  const std::string s = j.get<std::string>();
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

EngineResult dispatch(const json& req) {
  const std::string cmd = req.value("cmd", "");
  EngineResult res;

  if (cmd == "reduced-words") {
    const Perm pi = Perm::from_window(comma_list(req.at("pi"), "pi"));
    if (pi.size() > kHardCapN) throw Usage("window too large");
    json words = json::array();
    for (const Word& w : reduced_words(pi)) words.push_back(w);
    res.payload = json{{"pi", to_json(pi)}, {"count", words.size()}, {"words", words}}.dump(2) + "\n";
    return res;
  }

  if (cmd == "pipe-dreams") {
    const Perm pi = Perm::from_window(comma_list(req.at("pi"), "pi"));
    if (pi.size() > kHardCapN) throw Usage("window too large");
    const std::string strat = req.value("strategy", "chains");
    if (strat != "chains" && strat != "brute") throw Usage("strategy must be chains or brute");
    json dreams = json::array();
    for (const PipeDream& d :
         pipe_dreams(pi, strat == "brute" ? EnumStrategy::brute : EnumStrategy::chains))
      dreams.push_back(to_json(d));
    res.payload =
        json{{"pi", to_json(pi)}, {"count", dreams.size()}, {"dreams", dreams}}.dump(2) + "\n";
    return res;
  }

  if (cmd == "schubert") {
    const Perm pi = Perm::from_window(comma_list(req.at("pi"), "pi"));
    if (pi.size() > kHardCapN) throw Usage("window too large");
    const std::string via = req.value("via", "dreams");
    Polynomial f;
    if (via == "transition")
      f = schubert_via_transition(pi);
    else if (via == "dreams")
      f = schubert(pi);
    else
      throw Usage("via must be dreams or transition");
    res.payload = json{{"pi", to_json(pi)}, {"terms", to_json(f)}}.dump(2) + "\n";
    return res;
  }

  if (cmd == "bump") {
    const std::string delta = req.value("delta", "-");
    if (delta != "+" && delta != "-") throw Usage("delta must be + or -");
    BumpResult out =
        bounded_bump(word_from_json(req.at("a")), word_from_json(req.at("b")),
                     req.at("t0").get<int>(),
                     delta == "+" ? Direction::increment : Direction::decrement);
    res.payload = to_json(out).dump(2) + "\n";
    return res;
  }

  if (cmd == "transition") {
    PipeDreamStep step = transition_map(pipedream_from_json(req.at("D")));
    res.payload = json{{"E", to_json(step.out)}, {"q", step.q}, {"r", step.r}, {"k", step.k}}
                      .dump(2) +
                  "\n";
    return res;
  }

  if (cmd == "chain") {
    TransitionChain chain;
    if (req.contains("D"))
      chain = transition_chain(pipedream_from_json(req.at("D")));
    else if (req.contains("a") && req.contains("b"))
      chain = bounded_chain({word_from_json(req.at("a")), word_from_json(req.at("b"))});
    else
      throw Usage("chain needs a pipe dream D or a bounded pair a,b");
    res.payload = to_json(chain).dump() + "\n";
    return res;
  }

  if (cmd == "macdonald") {
    if (req.value("inverse", false)) {
      CDPair cd{word_from_json(req.at("c")), pipedream_from_json(req.at("D"))};
      BoundedPair ab = inverse_macdonald(cd);
      res.payload = json{{"a", ab.a}, {"b", ab.b}}.dump(2) + "\n";
    } else {
      CDPair cd = macdonald_map({word_from_json(req.at("a")), word_from_json(req.at("b"))});
      res.payload = json{{"c", cd.c}, {"D", to_json(cd.d)}}.dump(2) + "\n";
    }
    return res;
  }

  if (cmd == "verify") {
    const std::string what = req.value("what", "");
    const VerifyOptions opt = fetch_options(req);
    const bool slow = req.value("slow", false);
    Report rep;
    if (what == "macdonald") {
      rep = verify_macdonald(fetch_n(req, slow ? 5 : 4), opt);
    } else if (what == "q-macdonald") {
      rep = verify_q_macdonald(fetch_n(req, slow ? 5 : 4), opt, slow ? 20 : 0);
    } else if (what == "q-transition") {
      rep = verify_q_transition(fetch_n(req, slow ? 5 : 4), opt);
    } else if (what == "macmahon") {
      const int n = fetch_n(req, kHardCapN);
      if (n < 2) throw Usage("macmahon needs n >= 2");
      rep = verify_macmahon(n);
    } else if (what == "fk") {
      Partition lambda = comma_list(req.at("lambda"), "lambda");
      const int x = req.value("x", 0);
      if (x < 0 || x > 4) throw Usage("x must be between 0 and 4");
      int weight = 0;
      for (int part : lambda) weight += part;
      if (weight > 6) throw Usage("|lambda| capped at 6");
      rep = verify_fk(lambda, x, opt);
    } else if (what == "transitions") {
      rep = verify_transition_bijections(fetch_n(req, 4), opt);
    } else if (what == "schubert") {
      rep = verify_schubert_routes(fetch_n(req, slow ? 5 : 4), opt);
    } else {
      throw Usage("unknown verification: " + what);
    }
    res.payload = render(rep, fetch_format(req, "tsv"));
    res.status = rep.ok ? 0 : 1;
    return res;
  }

  if (cmd == "appendix-table") {
    const Word word = comma_list(req.at("word"), "word");
    const int wire = req.value("wire", 5);
    if (wire < 1 || wire > 32) throw Usage("wire out of range");
    if (!is_reduced(word)) throw Usage("word must be reduced");
    const bool prefixes = req.value("prefixes", false);
    Report rep;
    rep.title = "appendix-table";
    rep.header = {"i", "h", "insert", "y", "comaj_y", "h_minus_1", "v"};
    auto emit = [&rep](const Word& a, int wire_label) {
      rep.rows.push_back({"# word=" + json(a).dump() + " wire=" + std::to_string(wire_label) +
                          " comaj=" + std::to_string(comaj(a))});
      for (const WireInsertionRow& row : wire_insertion_rows(a, wire_label))
        rep.rows.push_back({std::to_string(row.i - 1), std::to_string(row.h),
                            json(row.spliced).dump(), json(row.y).dump(),
                            std::to_string(row.comaj_y), std::to_string(row.h - 1),
                            std::to_string(row.v)});
    };
    if (prefixes) {
      for (size_t len = 1; len <= word.size(); ++len) emit(Word(word.begin(), word.begin() + len), wire);
    } else {
      emit(word, wire);
    }
    res.payload = render(rep, fetch_format(req, "tsv"));
    return res;
  }

  if (cmd == "replay-paper") {
    if (!req.contains("fixtures")) throw Usage("missing fixtures directory");
    Report rep = replay_paper_examples(req.at("fixtures").get<std::string>());
    res.payload = render(rep, fetch_format(req, "tsv"));
    res.status = rep.ok ? 0 : 1;
    return res;
  }

  throw Usage(cmd.empty() ? "missing cmd" : "unknown cmd: " + cmd);
}

}  // namespace

EngineResult run_request(const std::string& request_json) {
  EngineResult res;
  try {
    const json req = json::parse(request_json);
    return dispatch(req);
  } catch (const json::exception& e) {
    res.status = 2;
    res.error = std::string("bad request: ") + e.what();
  } catch (const Usage& e) {
    res.status = 2;
    res.error = e.what();
  } catch (const std::invalid_argument& e) {
    res.status = 2;
    res.error = e.what();
  } catch (const std::exception& e) {
    res.status = 4;
    res.error = e.what();
  }
  return res;
}

}  // namespace rw
