#pragma once

#include <string>

#include "monoreg/firm_simulator.hpp"
#include "monoreg/grid_mechanism.hpp"
#include "monoreg/intervention_gate.hpp"
#include "monoreg/laissez_faire.hpp"
#include "monoreg/policy_solver.hpp"
#include "monoreg/tax_schedule.hpp"

namespace monoreg {

// CSV artifacts. Values are printed with "%.17g" so identical runs produce
// byte-identical files.
void write_lf_csv(const std::string& path, const LaissezFaireSchedule& lf);
void write_gate_csv(const std::string& path, const GateReport& gate);
void write_policy_csv(const std::string& path, const RegulationPolicy& policy);
void write_tax_csv(const std::string& path, const TaxSchedule& tax, int price_grid_n = 513);
void write_audit_csv(const std::string& path, const AuditReport& audit);
void write_grid_mechanism_csv(const std::string& path, const GridMechanism& gm);

const char* segment_name(Segment s);

}  // namespace monoreg
