#pragma once

// Output helpers shared by the CLI: scientific-notation formatting and a
// small table renderer for markdown/CSV.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace fddi {

// scientific notation with at least three significant digits
inline std::string sci(double x, int significant = 4) {
  if (std::isinf(x)) return "inf";
  if (std::isnan(x)) return "nan";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*E", significant - 1, x);
  return buf;
}

inline std::string fixed(double x, int decimals = 2) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_markdown() const {
    std::string out = "|";
    for (const auto& h : header) out += " " + h + " |";
    out += "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& row : rows) {
      out += "|";
      for (const auto& c : row) out += " " + c + " |";
      out += "\n";
    }
    return out;
  }

  std::string to_csv() const {
    auto escape = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
      }
      return q + "\"";
    };
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i)
      out += (i ? "," : "") + escape(header[i]);
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out += (i ? "," : "") + escape(row[i]);
      out += "\n";
    }
    return out;
  }
};

}  // namespace fddi
