#pragma once

#include <nlohmann/json.hpp>

#include "coxlab/analysis.hpp"

namespace coxlab {

// Canonical JSON views. nlohmann::json keeps object keys sorted, so dumping
// any of these is byte-stable for fixed inputs and seeds.
nlohmann::json poset_json(const Poset& p);
nlohmann::json matrix_json(const Matrix& m);  // entries as integers, fractions as "a/b" strings
nlohmann::json profile_json(const Poset& p, const HomologicalProfile& profile);
nlohmann::json bijection_report_json(const BijectionReport& report);
nlohmann::json theorem_report_json(const TheoremReport& report);
nlohmann::json probe_report_json(const ProbeReport& report);

}  // namespace coxlab
