#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace solitonlab::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << csv_field(t.columns[j]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << format_number(row[j]);
    os << "\r\n";
  }
}

nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t j = 0; j < row.size() && j < t.columns.size(); ++j) {
      r[t.columns[j]] = std::isfinite(row[j]) ? nlohmann::json(row[j]) : nlohmann::json(nullptr);
    }
    rows.push_back(std::move(r));
  }
  return {{"table", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}};
}

}  // namespace solitonlab::cli
