// Exercises the shared library surface exactly as an external client would.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "redwords.h"

namespace {

struct Engine {
  rw_engine* e = nullptr;
  Engine() { REQUIRE(rw_engine_create(&e) == RW_OK); }
  ~Engine() { rw_engine_destroy(e); }
};

std::string run_ok(rw_engine* e, const char* req, rw_status want = RW_OK) {
  char* out = nullptr;
  const rw_status st = rw_engine_run(e, req, &out);
  CHECK(st == want);
  std::string s = out ? out : "";
  rw_string_free(out);
  return s;
}

}  // namespace

TEST_CASE("engine lifecycle and commands") {
  Engine eng;
  const std::string words = run_ok(eng.e, R"({"cmd":"reduced-words","pi":[3,2,1]})");
  CHECK(words.find("\"count\": 2") != std::string::npos);

  const std::string verify =
      run_ok(eng.e, R"({"cmd":"verify","what":"macmahon","n":3,"format":"tsv"})");
  CHECK(verify.find("pass") != std::string::npos);

  char* out = nullptr;
  CHECK(rw_engine_run(eng.e, R"({"cmd":"reduced-words","pi":[1,1]})", &out) == RW_ERR_USAGE);
  CHECK(out == nullptr);
  CHECK(std::string(rw_engine_last_error(eng.e)).find("permutation") != std::string::npos);

  // The error is cleared by the next successful call.
  run_ok(eng.e, R"({"cmd":"reduced-words","pi":[2,1]})");
  CHECK(std::string(rw_engine_last_error(eng.e)).empty());
}

TEST_CASE("null handling") {
  CHECK(rw_engine_create(nullptr) == RW_ERR_USAGE);
  Engine eng;
  CHECK(rw_engine_run(eng.e, nullptr, nullptr) == RW_ERR_USAGE);
  CHECK(rw_engine_run(nullptr, "{}", nullptr) == RW_ERR_USAGE);
  CHECK(std::string(rw_version()) == "1.0.0");
  rw_string_free(nullptr);
}
