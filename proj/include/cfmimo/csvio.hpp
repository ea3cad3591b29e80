#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "cfmimo/common.hpp"

namespace cfmimo {

/// Shortest round-trip decimal form of a double; keeps CSV output
/// byte-identical across runs.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = std::strtod(buf, nullptr);
  if (back == v) {
    // try shorter representations
    for (int prec = 1; prec <= 16; ++prec) {
      char b2[40];
      std::snprintf(b2, sizeof(b2), "%.*g", prec, v);
      if (std::strtod(b2, nullptr) == v) return b2;
    }
  }
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header) : out_(path) {
    require(out_.good(), "cannot open CSV file for writing: " + path);
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) out_ << ',';
      out_ << header[i];
    }
    out_ << '\n';
  }

  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

}  // namespace cfmimo
