#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "monoreg/closed_form.hpp"
#include "monoreg/config.hpp"
#include "monoreg/csv.hpp"
#include "monoreg/firm_simulator.hpp"
#include "monoreg/grid_mechanism.hpp"
#include "monoreg/intervention_gate.hpp"
#include "monoreg/laissez_faire.hpp"
#include "monoreg/policy_solver.hpp"
#include "monoreg/tax_schedule.hpp"

namespace {

using namespace monoreg;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitValidation = 3;

struct Options {
  std::string config_path;
  std::string command;
  std::string out_dir = ".";
  int grid = 0;       // 0 = keep config value
  int cbar_grid = 0;
  std::uint64_t seed = 0;
  bool serial = false;
};

class Summary {
 public:
  explicit Summary(const std::string& path) : path_(path) {}
  void put(const std::string& key, const std::string& value) {
    lines_ += key + "=" + value + "\n";
  }
  void put(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    put(key, std::string(buf));
  }
  void flush() {
    std::fputs(lines_.c_str(), stdout);
    std::ofstream out(path_);
    out << lines_;
  }

 private:
  std::string path_;
  std::string lines_;
};

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

int run_check(const RunConfig& cfg, const Options& opt) {
  const auto rep = check_assumptions(cfg.env, cfg.solver.assumption_grid_n);
  Summary s(join(opt.out_dir, "assumptions.txt"));
  for (const auto& c : rep.checks) {
    s.put(c.name, c.pass ? "pass" : "FAIL");
    s.put(c.name + ".margin", c.margin);
  }
  s.put("core_assumptions", rep.core_pass() ? "pass" : "FAIL");
  s.put("sufficiency_hypotheses", rep.sufficiency_pass() ? "pass" : "FAIL");
  s.flush();
  return kExitOk;
}

int run_lf(const RunConfig& cfg, const Options& opt, Exec exec) {
  const auto lf = lf_schedule(cfg.env, cfg.solver.grid_n, exec);
  write_lf_csv(join(opt.out_dir, "laissez_faire.csv"), lf);
  Summary s(join(opt.out_dir, "summary.txt"));
  s.put("command", "lf");
  s.put("lf_cutoff", lf.cutoff);
  s.flush();
  return kExitOk;
}

int run_gate(const RunConfig& cfg, const Options& opt, Exec exec) {
  const auto lf = lf_schedule(cfg.env, cfg.solver.grid_n, exec);
  const auto g = gate(cfg.env, lf, cfg.solver.grid_n, cfg.solver.gate_tol, exec);
  write_gate_csv(join(opt.out_dir, "gate_margin.csv"), g);
  Summary s(join(opt.out_dir, "summary.txt"));
  s.put("command", "gate");
  s.put("lf_cutoff", lf.cutoff);
  s.put("lf_optimal", g.lf_optimal ? "true" : "false");
  s.put("worst_violation", g.worst_violation);
  s.put("worst_violation_at", g.worst_violation_at);
  s.flush();
  return kExitOk;
}

const char* structure_name(InnerStructure s) {
  switch (s) {
    case InnerStructure::SingleCrossing: return "single-crossing";
    case InnerStructure::MultipleCrossing: return "multiple-crossing";
    case InnerStructure::NoBindingRegion: return "no-binding-region";
    case InnerStructure::Infeasible: return "infeasible";
  }
  return "?";
}

int run_solve(const RunConfig& cfg, const Options& opt, Exec exec, bool with_audit,
              std::uint64_t /*seed*/) {
  const auto lf = lf_schedule(cfg.env, cfg.solver.grid_n, exec);
  write_lf_csv(join(opt.out_dir, "laissez_faire.csv"), lf);
  const auto g = gate(cfg.env, lf, cfg.solver.grid_n, cfg.solver.gate_tol, exec);
  write_gate_csv(join(opt.out_dir, "gate_margin.csv"), g);

  Summary s(join(opt.out_dir, "summary.txt"));
  s.put("command", with_audit ? "audit" : "solve");
  s.put("lf_cutoff", lf.cutoff);
  s.put("lf_optimal", g.lf_optimal ? "true" : "false");
  if (g.lf_optimal) {
    s.put("policy", "laissez-faire");
    s.flush();
    std::puts("laissez-faire is optimal; no tax schedule emitted");
    return kExitOk;
  }

  const auto policy = outer_solve(cfg.env, cfg.solver.grid_n, cfg.solver.cbar_grid_n, exec);
  write_policy_csv(join(opt.out_dir, "policy.csv"), policy);
  const auto tax = TaxSchedule::from_policy(policy);
  write_tax_csv(join(opt.out_dir, "tax.csv"), tax);

  s.put("policy", "progressive-price-cap");
  s.put("c_L", policy.c_L());
  s.put("c_hat", policy.c_hat());
  s.put("c_bar", policy.c_bar());
  s.put("p_hat", policy.p_hat);
  s.put("welfare", policy.welfare());
  s.put("lf_welfare", policy.lf_welfare);
  s.put("structure", structure_name(policy.inner.structure));
  s.put("structure_verified", policy.structure_verified ? "true" : "false");
  const auto prog = verify_progressive(tax, cfg.env.demand);
  s.put("progressive", prog.progressive() ? "true" : "false");

  if (with_audit) {
    const auto audit = ic_audit(cfg.env, tax, policy, cfg.solver.grid_n,
                                cfg.solver.price_grid_n, exec);
    write_audit_csv(join(opt.out_dir, "audit.csv"), audit);
    s.put("audit_max_price_dev", audit.max_price_dev);
    s.put("audit_max_profit_gap", audit.max_profit_gap);
    s.put("audit_price_grid_step", audit.price_grid_step);
  }
  s.flush();
  return kExitOk;
}

int run_oracle(const RunConfig& cfg, const Options& opt, Exec exec, std::uint64_t seed) {
  const int n_cells = 100;
  const auto gm = brute_force_mechanism(cfg.env, n_cells, 40000, seed);
  write_grid_mechanism_csv(join(opt.out_dir, "oracle_grid.csv"), gm);

  Summary s(join(opt.out_dir, "summary.txt"));
  s.put("command", "oracle");
  s.put("oracle_objective", gm.objective);
  s.put("oracle_converged", gm.converged ? "true" : "false");

  const auto lf = lf_schedule(cfg.env, cfg.solver.grid_n, exec);
  const auto g = gate(cfg.env, lf, cfg.solver.grid_n, cfg.solver.gate_tol, exec);
  if (!g.lf_optimal) {
    const auto policy = outer_solve(cfg.env, cfg.solver.grid_n, cfg.solver.cbar_grid_n, exec);
    double max_dq = 0.0;
    for (std::size_t i = 0; i < gm.c.size(); ++i)
      max_dq = std::max(max_dq, std::abs(gm.q[i] - policy.q_at(gm.c[i])));
    s.put("solver_welfare", policy.welfare());
    s.put("welfare_gap", policy.welfare() - gm.objective);
    s.put("max_q_deviation", max_dq);
  } else {
    s.put("lf_optimal", "true");
  }

  if (cfg.env.demand.family() == "linear" && cfg.env.cost.family() == "uniform" &&
      cfg.env.fixed_cost == 0.0) {
    const auto& pr = cfg.env.demand.params();
    const auto cf = closed_form_policy(pr[0], pr[1], cfg.env.alpha);
    s.put("closed_form_c_bar", cf.c_bar_star);
    s.put("closed_form_c_hat", cf.c_hat);
    s.put("closed_form_p_hat", cf.p_hat);
    s.put("closed_form_welfare", cf.welfare);
  }
  s.flush();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"optimal monopoly regulation with unit taxes and no subsidies"};
  app.add_option("--config", opt.config_path, "environment configuration (JSON)")->required();
  app.add_option("--command", opt.command, "check | lf | gate | solve | audit | oracle")
      ->required();
  app.add_option("--out", opt.out_dir, "output directory (default: current)");
  app.add_option("--grid", opt.grid, "cost grid size override");
  app.add_option("--cbar-grid", opt.cbar_grid, "exclusion-cutoff grid size override");
  app.add_option("--seed", opt.seed, "brute-force oracle initialization seed");
  app.add_flag("--serial", opt.serial, "run grid kernels on the serial reference path");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitValidation : kExitValidation;
  }

  try {
    RunConfig cfg = load_config(opt.config_path);
    if (opt.grid > 0) cfg.solver.grid_n = opt.grid;
    if (opt.cbar_grid > 0) cfg.solver.cbar_grid_n = opt.cbar_grid;
    std::filesystem::create_directories(opt.out_dir);
    const Exec exec = opt.serial ? Exec::Serial : Exec::Parallel;

    if (opt.command == "check") return run_check(cfg, opt);
    if (opt.command == "lf") return run_lf(cfg, opt, exec);
    if (opt.command == "gate") return run_gate(cfg, opt, exec);
    if (opt.command == "solve") return run_solve(cfg, opt, exec, false, opt.seed);
    if (opt.command == "audit") return run_solve(cfg, opt, exec, true, opt.seed);
    if (opt.command == "oracle") return run_oracle(cfg, opt, exec, opt.seed);
    std::fprintf(stderr, "unknown command '%s'\n", opt.command.c_str());
    return kExitValidation;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "infeasible environment: %s\n", e.what());
    return kExitInfeasible;
  }
}
