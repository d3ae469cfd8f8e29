#include "jsonio.hpp"

#include <stdexcept>

namespace rw {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const Perm& pi) { return json(pi.window()); }

Perm perm_from_json(const json& j) { return Perm::from_window(int_array(j, "permutation")); }

json to_json(const Word& w) { return json(w); }

Word word_from_json(const json& j) { return int_array(j, "word"); }

json to_json(const PipeDream& d) {
  const Biword bw = d.biword();
  return json{{"r", bw.r}, {"j", bw.j}};
}

PipeDream pipedream_from_json(const json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("j"))
    throw std::invalid_argument("pipe dream must be {\"r\": [...], \"j\": [...]}");
  return PipeDream::decode({int_array(j.at("r"), "r"), int_array(j.at("j"), "j")});
}

json to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json{{"coeff", c}, {"exponents", e}});
  return terms;
}

json to_json(const QPoly& f) { return json{{"coeffs", f.coeffs()}}; }

json to_json(const BumpResult& r) {
  return json{{"a", r.a},
              {"b", r.b},
              {"i", r.row},
              {"j", r.column},
              {"outcome", r.outcome == Outcome::bumped ? "bumped" : "deleted"}};
}

json to_json(const TransitionChain& chain) {
  json out = json::array();
  for (const auto& [q, r] : chain) out.push_back(json::array({q, r}));
  return out;
}

TransitionChain chain_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("chain must be an array of pairs");
  TransitionChain chain;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("chain entries must be pairs");
    chain.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return chain;
}

json to_json(const Report& rep) {
  return json{{"title", rep.title},
              {"ok", rep.ok},
              {"header", rep.header},
              {"rows", rep.rows},
              {"failures", rep.failures}};
}

}  // namespace rw
