#pragma once

// Serialization of conjecture reports: JSON (stable keys), CSV and text.
// Timings are emitted only when requested so that default reports are
// byte-reproducible.

#include <string>
#include <vector>

#include <json.hpp>

#include "tamellc/conjectures.hpp"

namespace tamellc {

struct CheckRow {
    std::string name;
    std::vector<std::pair<std::string, std::string>> method_values;  // in emission order
    std::string status;                                              // OK | FAIL | SKIPPED | ERROR
};

std::vector<CheckRow> check_rows(const ConjectureReport& R);

nlohmann::ordered_json params_json(const TameParams& P);
nlohmann::ordered_json report_json(const ConjectureReport& R, bool with_timing = false);
nlohmann::ordered_json sweep_json(const SweepRanges& ranges, const SweepResult& S, bool with_timing = false);
// Local factor data of Ad o phi and phi_0 for the "factors" command.
nlohmann::ordered_json factors_json(const TameParams& P);

std::string reports_csv(const std::vector<ConjectureReport>& rs);
std::string report_text(const ConjectureReport& R);
std::string factors_text(const nlohmann::ordered_json& j);

}  // namespace tamellc
