#pragma once

#include <stdexcept>
#include <string>

#include "monoreg/environment.hpp"

namespace monoreg {

// Raised on malformed configuration; names the offending field.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error("config field '" + field + "': " + what), field_name(field) {}
  std::string field_name;
};

struct SolverSettings {
  int grid_n = 1025;
  int cbar_grid_n = 129;
  int price_grid_n = 4096;
  int assumption_grid_n = 2049;
  double gate_tol = 1e-9;
};

struct RunConfig {
  MarketEnvironment env;
  SolverSettings solver;
};

// JSON configuration with fields:
//   demand.family  linear {A, B} | constant-elastic {theta, eta, epsilon?, v_bar?}
//                  | logarithmic {mu, beta, v_bar?} | tabulated {q: [...], p: [...]}
//   cost.family    uniform | truncated-normal {mean, variance}
//                  | truncated-exponential {rate} | tabulated {c: [...], F: [...]}
//   alpha          welfare weight on profit, in [0, 1]
//   k              fixed cost, >= 0
//   solver         optional {grid_n, cbar_grid_n, price_grid_n, assumption_grid_n, gate_tol}
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

}  // namespace monoreg
