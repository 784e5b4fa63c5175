#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace solitonlab::cli {

enum class Format { csv, json };

struct RunConfig {
  std::string member = "s7";  // s7 | profile | grim-lorentz | grim-riemann
  std::optional<double> range;
  double delta = 1e-6;
  std::optional<double> tol;
  std::optional<int> grid;
  std::uint64_t seed = 20240607;
  std::optional<Format> format;  // verify defaults to json, tables to csv
  std::string g_spec;
  bool gm = false;
  double wmax = 100.0;
  double S = 20.0;
  std::string curve = "directrix";  // directrix | plateau
  std::string table = "w";          // growth table: w | rM
};

// Each command writes its table or report to os and returns the exit code.
int cmd_zoo(const RunConfig& config, std::ostream& os);
int cmd_verify(const RunConfig& config, std::ostream& os);
int cmd_bounds(const RunConfig& config, std::ostream& os);
int cmd_growth(const RunConfig& config, std::ostream& os);
int cmd_length(const RunConfig& config, std::ostream& os);

}  // namespace solitonlab::cli
