#pragma once

#include <string>
#include <vector>

namespace rw {

// Tabular verification result with deterministic row order; byte-identical
// output regardless of how many workers produced the rows.
struct Report {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool ok = true;
  std::vector<std::string> failures;  // human-readable mismatch details

  std::string tsv() const {
    std::string out;
    auto emit = [&out](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += '\t';
        out += cells[i];
      }
      out += '\n';
    };
    if (!header.empty()) emit(header);
    for (const auto& row : rows) emit(row);
    return out;
  }
};

}  // namespace rw
