#pragma once

// Cycle file format: a '#' header line carrying family/s/L/count, then the
// cyclic symbol sequence as space-separated decimals on one line.

#include <optional>
#include <sstream>

#include "euler.hpp"

namespace wocycle {

inline std::string format_cycle_file(const CycleResult& c) {
  std::string out = "# family=" + c.family + " s=" + std::to_string(c.overlap) +
                    " L=" + std::to_string(c.object_length) +
                    " count=" + std::to_string(c.object_count) + "\n";
  out += word_to_string(c.symbols);
  out += '\n';
  return out;
}

struct CycleFile {
  std::optional<std::string> family;
  std::optional<int> overlap;
  std::optional<int> object_length;
  std::optional<std::size_t> object_count;
  Word symbols;
};

/// Reads the format back. Header is optional so hand-written symbol files
/// also verify; unknown header keys are ignored.
inline CycleFile parse_cycle_file(std::string_view text) {
  CycleFile file;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream header(line.substr(1));
      std::string item;
      while (header >> item) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        try {
          if (key == "family")
            file.family = value;
          else if (key == "s")
            file.overlap = std::stoi(value);
          else if (key == "L")
            file.object_length = std::stoi(value);
          else if (key == "count")
            file.object_count = static_cast<std::size_t>(std::stoull(value));
        } catch (const std::exception&) {
          throw domain_error(errc::parameter, "bad header field '" + item + "'");
        }
      }
      continue;
    }
    std::istringstream body(line);
    std::string token;
    while (body >> token) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size() || v < 0) throw std::invalid_argument(token);
        file.symbols.push_back(v);
      } catch (const std::exception&) {
        throw domain_error(errc::parameter, "bad symbol token '" + token + "'");
      }
    }
  }
  return file;
}

}  // namespace wocycle
