#pragma once

#include <string>

#include "report.hpp"

namespace rw {

// Replays the worked examples and reference tables stored as fixture files
// (bounded bumps, a full transition chain, the shared-chain bounded pairs,
// two recorded map traces, a biword decoding, and the wire-insertion comaj
// tables) and reports one row per case, bit-exact comparisons only.
Report replay_paper_examples(const std::string& fixtures_dir);

}  // namespace rw
