#pragma once

#include <string>

namespace rw {

struct EngineResult {
  int status = 0;       // 0 ok, 1 verification failure, 2 usage/input error, 4 internal
  std::string payload;  // JSON or TSV, per the request's "format"
  std::string error;    // message when status != 0 and != 1
};

// Executes one JSON request {"cmd": ..., ...}. Never throws.
EngineResult run_request(const std::string& request_json);

}  // namespace rw
