// Times the OpenMP grid kernels against the serial reference path.
#include <chrono>
#include <cstdio>

#include "monoreg/firm_simulator.hpp"
#include "monoreg/intervention_gate.hpp"
#include "monoreg/laissez_faire.hpp"
#include "monoreg/policy_solver.hpp"
#include "monoreg/tax_schedule.hpp"

using namespace monoreg;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& fn) {
  const auto t0 = Clock::now();
  fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
  const MarketEnvironment env{DemandCurve::linear(1.0, 1.0), CostDistribution::uniform(), 0.5, 0.0};

  std::printf("workers: %d\n", worker_count());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    const int n = 20001;
    double ts = time_ms([&] { lf_schedule(env, n, Exec::Serial); });
    double tp = time_ms([&] { lf_schedule(env, n, Exec::Parallel); });
    report("lf_schedule (n=20001)", ts, tp);
  }
  {
    const auto lf = lf_schedule(env, 1025);
    const int n = 20001;
    double ts = time_ms([&] { gate(env, lf, n, 1e-9, Exec::Serial); });
    double tp = time_ms([&] { gate(env, lf, n, 1e-9, Exec::Parallel); });
    report("gate margins (n=20001)", ts, tp);
  }
  {
    double ts = time_ms([&] { outer_solve(env, 513, 129, Exec::Serial); });
    double tp = time_ms([&] { outer_solve(env, 513, 129, Exec::Parallel); });
    report("outer_solve (129 cutoffs)", ts, tp);
  }
  {
    const auto policy = outer_solve(env, 1025, 129);
    const auto tax = TaxSchedule::from_policy(policy);
    double ts = time_ms([&] { ic_audit(env, tax, policy, 513, 4096, Exec::Serial); });
    double tp = time_ms([&] { ic_audit(env, tax, policy, 513, 4096, Exec::Parallel); });
    report("ic_audit (513 x 4096)", ts, tp);
  }
  return 0;
}
