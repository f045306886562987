#include "monoreg/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace monoreg {

namespace {

struct File {
  std::FILE* f;
  explicit File(const std::string& path) : f(std::fopen(path.c_str(), "w")) {
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
  }
  ~File() { std::fclose(f); }
  File(const File&) = delete;
  File& operator=(const File&) = delete;
};

}  // namespace

const char* segment_name(Segment s) {
  switch (s) {
    case Segment::LaissezFaire: return "laissez-faire";
    case Segment::Bunch: return "bunch";
    case Segment::Taxed: return "taxed";
    case Segment::Excluded: return "excluded";
  }
  return "?";
}

void write_lf_csv(const std::string& path, const LaissezFaireSchedule& lf) {
  File out(path);
  std::fprintf(out.f, "c,q_lf,p_lf,profit_lf\n");
  for (std::size_t i = 0; i < lf.c.size(); ++i)
    std::fprintf(out.f, "%.17g,%.17g,%.17g,%.17g\n", lf.c[i], lf.q[i], lf.price[i], lf.profit[i]);
}

void write_gate_csv(const std::string& path, const GateReport& gate) {
  File out(path);
  std::fprintf(out.f, "c,M\n");
  for (std::size_t i = 0; i < gate.c.size(); ++i)
    std::fprintf(out.f, "%.17g,%.17g\n", gate.c[i], gate.margin[i]);
}

void write_policy_csv(const std::string& path, const RegulationPolicy& policy) {
  File out(path);
  std::fprintf(out.f, "c,segment,q_star,p_star,consumer_price,profit,tax\n");
  for (std::size_t i = 0; i < policy.inner.c.size(); ++i) {
    std::fprintf(out.f, "%.17g,%s,%.17g,%.17g,%.17g,%.17g,%.17g\n", policy.inner.c[i],
                 segment_name(policy.segment[i]), policy.inner.q[i], policy.p[i],
                 policy.consumer_price[i], policy.inner.pi[i], policy.tax[i]);
  }
}

void write_tax_csv(const std::string& path, const TaxSchedule& tax, int price_grid_n) {
  File out(path);
  std::fprintf(out.f, "p,tau\n");
  const double top = tax.prohibitive_from();
  for (int i = 0; i < price_grid_n; ++i) {
    const double p = top * i / (price_grid_n - 1);
    std::fprintf(out.f, "%.17g,%.17g\n", p, tax.tau(p));
  }
  std::fprintf(out.f, "%.17g,prohibitive\n", top);
}

void write_audit_csv(const std::string& path, const AuditReport& audit) {
  File out(path);
  std::fprintf(out.f, "c,p_opt,q_opt,profit,segment_guess\n");
  for (const auto& r : audit.rows)
    std::fprintf(out.f, "%.17g,%.17g,%.17g,%.17g,%s\n", r.c, r.p_opt, r.q_opt, r.profit,
                 segment_name(r.segment_guess));
}

void write_grid_mechanism_csv(const std::string& path, const GridMechanism& gm) {
  File out(path);
  std::fprintf(out.f, "c,q,pi,slack\n");
  for (std::size_t i = 0; i < gm.c.size(); ++i)
    std::fprintf(out.f, "%.17g,%.17g,%.17g,%.17g\n", gm.c[i], gm.q[i], gm.pi[i], gm.slack[i]);
}

}  // namespace monoreg
