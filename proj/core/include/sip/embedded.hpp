#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sip {

/// (file name, contents) of every table shipped under core/data.
const std::vector<std::pair<std::string, std::string>>& embedded_tables();

/// Contents of a shipped table by file name, e.g. "table4.ctab".
inline std::optional<std::string> embedded_table(const std::string& name) {
  for (const auto& [n, text] : embedded_tables())
    if (n == name) return text;
  return std::nullopt;
}

}  // namespace sip
