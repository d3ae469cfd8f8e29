#include "redwords.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "engine.hpp"

struct rw_engine {
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

rw_status rw_engine_create(rw_engine** out) {
  if (!out) return RW_ERR_USAGE;
  *out = new (std::nothrow) rw_engine();
  return *out ? RW_OK : RW_ERR_NOMEM;
}

void rw_engine_destroy(rw_engine* engine) { delete engine; }

rw_status rw_engine_run(rw_engine* engine, const char* request_json, char** response) {
  if (!engine) return RW_ERR_USAGE;
  engine->last_error.clear();
  if (!request_json || !response) {
    engine->last_error = "null argument";
    return RW_ERR_USAGE;
  }
  *response = nullptr;
  try {
    rw::EngineResult res = rw::run_request(request_json);
    if (res.status == 0 || res.status == 1) {
      *response = dup_string(res.payload);
      if (!*response) {
        engine->last_error = "out of memory";
        return RW_ERR_NOMEM;
      }
      return res.status == 0 ? RW_OK : RW_ERR_VERIFY;
    }
    engine->last_error = res.error;
    return res.status == 2 ? RW_ERR_USAGE : RW_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    engine->last_error = "out of memory";
    return RW_ERR_NOMEM;
  } catch (...) {
    engine->last_error = "unexpected failure";
    return RW_ERR_INTERNAL;
  }
}

const char* rw_engine_last_error(const rw_engine* engine) {
  return engine ? engine->last_error.c_str() : "";
}

void rw_string_free(char* s) { std::free(s); }

const char* rw_version(void) { return "1.0.0"; }

}  // extern "C"
