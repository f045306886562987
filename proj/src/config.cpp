#include "monoreg/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace monoreg {

namespace {

using nlohmann::json;

double need_number(const json& j, const std::string& scope, const std::string& key) {
  if (!j.contains(key)) throw ConfigError(scope + "." + key, "missing");
  if (!j[key].is_number()) throw ConfigError(scope + "." + key, "must be a number");
  return j[key].get<double>();
}

double opt_number(const json& j, const std::string& scope, const std::string& key,
                  double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError(scope + "." + key, "must be a number");
  return j[key].get<double>();
}

std::vector<double> need_array(const json& j, const std::string& scope, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ConfigError(scope + "." + key, "must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw ConfigError(scope + "." + key, "must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

DemandCurve parse_demand(const json& j) {
  if (!j.is_object()) throw ConfigError("demand", "must be an object");
  if (!j.contains("family") || !j["family"].is_string())
    throw ConfigError("demand.family", "missing or not a string");
  const std::string fam = j["family"].get<std::string>();
  try {
    if (fam == "linear")
      return DemandCurve::linear(need_number(j, "demand", "A"), need_number(j, "demand", "B"));
    if (fam == "constant-elastic")
      return DemandCurve::constant_elastic(
          need_number(j, "demand", "theta"), need_number(j, "demand", "eta"),
          opt_number(j, "demand", "epsilon", 1e-6), opt_number(j, "demand", "v_bar", 0.0));
    if (fam == "logarithmic")
      return DemandCurve::logarithmic(need_number(j, "demand", "mu"),
                                      need_number(j, "demand", "beta"),
                                      opt_number(j, "demand", "v_bar", 0.0));
    if (fam == "tabulated")
      return DemandCurve::tabulated(need_array(j, "demand", "q"), need_array(j, "demand", "p"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("demand", e.what());
  }
  throw ConfigError("demand.family", "unknown family '" + fam + "'");
}

CostDistribution parse_cost(const json& j) {
  if (!j.is_object()) throw ConfigError("cost", "must be an object");
  if (!j.contains("family") || !j["family"].is_string())
    throw ConfigError("cost.family", "missing or not a string");
  const std::string fam = j["family"].get<std::string>();
  try {
    if (fam == "uniform") return CostDistribution::uniform();
    if (fam == "truncated-normal")
      return CostDistribution::truncated_normal(need_number(j, "cost", "mean"),
                                                need_number(j, "cost", "variance"));
    if (fam == "truncated-exponential")
      return CostDistribution::truncated_exponential(need_number(j, "cost", "rate"));
    if (fam == "tabulated")
      return CostDistribution::tabulated(need_array(j, "cost", "c"), need_array(j, "cost", "F"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("cost", e.what());
  }
  throw ConfigError("cost.family", "unknown family '" + fam + "'");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("(root)", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("(root)", "must be a JSON object");
  if (!j.contains("demand")) throw ConfigError("demand", "missing");
  if (!j.contains("cost")) throw ConfigError("cost", "missing");

  RunConfig cfg{MarketEnvironment{parse_demand(j["demand"]), parse_cost(j["cost"]), 1.0, 0.0},
                SolverSettings{}};
  cfg.env.alpha = need_number(j, "(root)", "alpha");
  if (cfg.env.alpha < 0.0 || cfg.env.alpha > 1.0)
    throw ConfigError("alpha", "must be in [0, 1]");
  cfg.env.fixed_cost = need_number(j, "(root)", "k");
  if (cfg.env.fixed_cost < 0.0) throw ConfigError("k", "must be >= 0");

  if (j.contains("solver")) {
    const auto& s = j["solver"];
    if (!s.is_object()) throw ConfigError("solver", "must be an object");
    cfg.solver.grid_n = static_cast<int>(opt_number(s, "solver", "grid_n", 1025));
    cfg.solver.cbar_grid_n = static_cast<int>(opt_number(s, "solver", "cbar_grid_n", 129));
    cfg.solver.price_grid_n = static_cast<int>(opt_number(s, "solver", "price_grid_n", 4096));
    cfg.solver.assumption_grid_n =
        static_cast<int>(opt_number(s, "solver", "assumption_grid_n", 2049));
    cfg.solver.gate_tol = opt_number(s, "solver", "gate_tol", 1e-9);
    if (cfg.solver.grid_n < 65) throw ConfigError("solver.grid_n", "must be >= 65");
    if (cfg.solver.cbar_grid_n < 8) throw ConfigError("solver.cbar_grid_n", "must be >= 8");
    if (cfg.solver.price_grid_n < 1024) throw ConfigError("solver.price_grid_n", "must be >= 1024");
    if (cfg.solver.assumption_grid_n < 16)
      throw ConfigError("solver.assumption_grid_n", "must be >= 16");
    if (cfg.solver.gate_tol < 0.0) throw ConfigError("solver.gate_tol", "must be >= 0");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("(file)", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace monoreg
