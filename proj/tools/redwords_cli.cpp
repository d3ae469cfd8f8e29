// Command line front end; all work happens behind the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "redwords.h"

using nlohmann::json;

#ifndef RW_DEFAULT_FIXTURES
#define RW_DEFAULT_FIXTURES ""
#endif

namespace {

struct EngineHandle {
  rw_engine* engine = nullptr;
  EngineHandle() { rw_engine_create(&engine); }
  ~EngineHandle() { rw_engine_destroy(engine); }
};

int run(rw_engine* engine, const json& request) {
  char* response = nullptr;
  const rw_status status = rw_engine_run(engine, request.dump().c_str(), &response);
  if (response) {
    std::fputs(response, stdout);
    rw_string_free(response);
  }
  switch (status) {
    case RW_OK:
      return 0;
    case RW_ERR_VERIFY:
      return 1;
    case RW_ERR_USAGE:
      std::cerr << "error: " << rw_engine_last_error(engine) << "\n";
      return 2;
    default:
      std::cerr << "error: " << rw_engine_last_error(engine) << "\n";
      return 3;
  }
}

json read_input(const std::string& input) {
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return json::parse(buf.str());
  }
  return json::parse(input);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words, pipe dreams, Schubert polynomials, and the bijections tying them together"};
  app.require_subcommand(1);

  std::string format = "json";
  int jobs = 1;
  bool slow = false;
  auto* fmt_opt =
      app.add_option("--format", format, "Output format: json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--jobs", jobs, "Worker threads for verification sweeps")->check(CLI::Range(1, 16));
  app.add_flag("--slow", slow, "Unlock the larger (S5) verification tiers");

  json request;
  auto base = [&](const std::string& cmd) {
    request = json{{"cmd", cmd}, {"format", format}, {"jobs", jobs}, {"slow", slow}};
  };

  std::string pi, strategy = "chains", via = "dreams", input = "-";
  std::string what, lambda, word = "4,3,5,6,4,3,5";
  int n = 4, x = 0, wire = 5;
  bool inverse = false, prefixes = false;
  std::string fixtures = RW_DEFAULT_FIXTURES;

  auto* c_words = app.add_subcommand("reduced-words", "List R(pi) for a one-line permutation");
  c_words->add_option("pi", pi, "Permutation, e.g. 1,4,3,2")->required();
  c_words->callback([&] { base("reduced-words"); request["pi"] = pi; });

  auto* c_dreams = app.add_subcommand("pipe-dreams", "List the reduced pipe dreams of pi");
  c_dreams->add_option("pi", pi)->required();
  c_dreams->add_option("--strategy", strategy)->check(CLI::IsMember({"chains", "brute"}));
  c_dreams->callback([&] {
    base("pipe-dreams");
    request["pi"] = pi;
    request["strategy"] = strategy;
  });

  auto* c_schub = app.add_subcommand("schubert", "Schubert polynomial of pi");
  c_schub->add_option("pi", pi)->required();
  c_schub->add_option("--via", via)->check(CLI::IsMember({"dreams", "transition"}));
  c_schub->callback([&] {
    base("schubert");
    request["pi"] = pi;
    request["via"] = via;
  });

  auto* c_bump = app.add_subcommand("bump", "Bounded bump; JSON input {a,b,t0,delta}");
  c_bump->add_option("-i,--input", input, "JSON document or - for stdin");
  c_bump->callback([&] {
    base("bump");
    request.update(read_input(input));
  });

  auto* c_trans = app.add_subcommand("transition", "Transition step; JSON input {D:{r,j}}");
  c_trans->add_option("-i,--input", input);
  c_trans->callback([&] {
    base("transition");
    request.update(read_input(input));
  });

  auto* c_chain = app.add_subcommand("chain", "Transition chain of a pipe dream {D} or bounded pair {a,b}");
  c_chain->add_option("-i,--input", input);
  c_chain->callback([&] {
    base("chain");
    request.update(read_input(input));
  });

  auto* c_mac = app.add_subcommand("macdonald", "Macdonald map; JSON input {a,b} or {c,D} with --inverse");
  c_mac->add_option("-i,--input", input);
  c_mac->add_flag("--inverse", inverse);
  c_mac->callback([&] {
    base("macdonald");
    request.update(read_input(input));
    request["inverse"] = inverse;
  });

  auto* c_verify = app.add_subcommand("verify", "Exhaustive verification suites");
  c_verify->add_option("what", what, "macdonald | q-macdonald | q-transition | fk | macmahon | transitions | schubert")
      ->required();
  c_verify->add_option("--n", n, "Symmetric group size");
  c_verify->add_option("--lambda", lambda, "Partition for fk, e.g. 2,1");
  c_verify->add_option("--x", x, "Entry bound for fk");
  c_verify->callback([&] {
    base("verify");
    request["what"] = what;
    request["n"] = n;
    if (!lambda.empty()) request["lambda"] = lambda;
    request["x"] = x;
    if (!fmt_opt->count()) request["format"] = "tsv";  // reports default to tsv
  });

  auto* c_table = app.add_subcommand("appendix-table", "Wire-insertion comaj tables");
  c_table->add_option("--word", word);
  c_table->add_option("--wire", wire);
  c_table->add_flag("--prefixes", prefixes, "One table per prefix of the word");
  c_table->callback([&] {
    base("appendix-table");
    request["word"] = word;
    request["wire"] = wire;
    request["prefixes"] = prefixes;
    if (!fmt_opt->count()) request["format"] = "tsv";
  });

  auto* c_replay = app.add_subcommand("replay-paper", "Replay the recorded worked examples bit-exactly");
  c_replay->add_option("--fixtures", fixtures, "Fixture directory");
  c_replay->callback([&] {
    base("replay-paper");
    request["fixtures"] = fixtures;
    if (!fmt_opt->count()) request["format"] = "tsv";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  }

  EngineHandle handle;
  if (!handle.engine) {
    std::cerr << "error: engine creation failed\n";
    return 3;
  }
  return run(handle.engine, request);
}
