#pragma once

// Tabular output: RFC-4180 CSV with "%.12e" numbers, or JSON.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace solitonlab::cli {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string format_number(double v);
// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_field(const std::string& s);

void write_csv(std::ostream& os, const Table& t);
nlohmann::json to_json(const Table& t);

}  // namespace solitonlab::cli
