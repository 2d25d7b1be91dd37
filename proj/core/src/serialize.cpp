#include "zeta_forge/serialize.hpp"

#include <sstream>

namespace zeta_forge {

namespace {

constexpr int kBoundDigits = 6;

std::string bound_string(const BigFloat& x) { return x.to_scientific(kBoundDigits); }

}  // namespace

nlohmann::json to_json(const EvalReport& report) {
  return {{"value", report.value.to_fixed(static_cast<int>(report.requested_digits))},
          {"terms", report.terms_used},
          {"tail_bound", bound_string(report.tail_bound)},
          {"digits", report.requested_digits}};
}

nlohmann::json to_json(const GridReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json entry = {{"n", f.n}, {"k", f.k}, {"a", to_string(f.a)}, {"lhs", to_string(f.lhs)},
                            {"rhs", to_string(f.rhs)}};
    if (!f.note.empty()) {
      entry["note"] = f.note;
    }
    failures.push_back(std::move(entry));
  }
  return {{"pair", std::string(to_string(report.pair))}, {"checked", report.checked_count}, {"failures", failures}};
}

nlohmann::json to_json(const ResidualReport& report, long precision) {
  nlohmann::json boundaries = nlohmann::json::array();
  for (const auto& b : report.boundary_terms) {
    boundaries.push_back(bound_string(b));
  }
  return {{"pair", std::string(to_string(report.pair))},
          {"proposition", report.proposition},
          {"truncation", report.truncation},
          {"a", to_string(report.a)},
          {"lhs_partial", report.lhs_partial.to_fixed(static_cast<int>(precision))},
          {"rhs_partial", report.rhs_partial.to_fixed(static_cast<int>(precision))},
          {"residual", bound_string(report.residual)},
          {"boundary_terms", boundaries}};
}

nlohmann::json to_json(const DoublingReport& report, long precision) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : report.steps) {
    steps.push_back(to_json(step, precision));
  }
  return {{"steps", steps}, {"shrinking", report.shrinking}, {"required_factor", report.required_factor}};
}

nlohmann::json to_json(const CoefficientReport& report) {
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json bounds = nlohmann::json::array();
  for (std::size_t j = 0; j < report.values.size(); ++j) {
    values.push_back(report.values[j].to_fixed(static_cast<int>(report.requested_digits)));
    bounds.push_back(bound_string(report.tail_bounds[j]));
  }
  return {{"identity", std::string(to_string(report.identity))},
          {"coefficients", values},
          {"tail_bounds", bounds},
          {"terms", report.terms_used},
          {"digits", report.requested_digits}};
}

nlohmann::json to_json(const CorollaryReport& report) {
  const int digits = static_cast<int>(report.series.requested_digits);
  return {{"formula", std::string(to_string(report.formula))},
          {"parent", std::string(to_string(report.parent))},
          {"series", to_json(report.series)},
          {"extracted", report.extracted.to_fixed(digits)},
          {"extracted_tail_bound", bound_string(report.extracted_tail)},
          {"difference", bound_string(report.difference)},
          {"agrees", report.agrees}};
}

nlohmann::json to_json(const std::vector<ConvergenceRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    out.push_back({{"n", row.n},
                   {"term_magnitude", row.magnitude.to_scientific(kBoundDigits)},
                   {"ratio", row.ratio ? nlohmann::json(row.ratio->to_general(kBoundDigits)) : nlohmann::json()}});
  }
  return out;
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "n,term_magnitude,ratio\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.magnitude.to_scientific(kBoundDigits) << ','
        << (row.ratio ? row.ratio->to_general(kBoundDigits) : "") << '\n';
  }
  return out.str();
}

std::string to_csv(const CoefficientReport& report) {
  std::ostringstream out;
  out << "j,value,tail_bound\n";
  for (std::size_t j = 0; j < report.values.size(); ++j) {
    out << j << ',' << report.values[j].to_fixed(static_cast<int>(report.requested_digits)) << ','
        << bound_string(report.tail_bounds[j]) << '\n';
  }
  return out.str();
}

}  // namespace zeta_forge
