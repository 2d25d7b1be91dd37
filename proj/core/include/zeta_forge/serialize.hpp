#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "zeta_forge/coeff_extract.hpp"
#include "zeta_forge/series_eval.hpp"
#include "zeta_forge/wz_verify.hpp"

namespace zeta_forge {

// All numbers inside payloads are decimal strings; integers that count things
// (terms, checked points, digits) are JSON integers.

nlohmann::json to_json(const EvalReport& report);
nlohmann::json to_json(const GridReport& report);
nlohmann::json to_json(const ResidualReport& report, long precision);
nlohmann::json to_json(const DoublingReport& report, long precision);
nlohmann::json to_json(const CoefficientReport& report);
nlohmann::json to_json(const CorollaryReport& report);
nlohmann::json to_json(const std::vector<ConvergenceRow>& rows);

/// n,term_magnitude,ratio with 6 significant digits; empty ratio when t_n = 0.
std::string to_csv(const std::vector<ConvergenceRow>& rows);
/// j,value,tail_bound
std::string to_csv(const CoefficientReport& report);

}  // namespace zeta_forge
