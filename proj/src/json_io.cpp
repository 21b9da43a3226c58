#include "bsgamma/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace bsgamma {

nlohmann::json orbit_type_json(const OrbitType& t) {
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t j = 0; j < t.counts.size(); ++j)
    if (t.counts[j] != 0) counts[std::to_string(j + 1)] = t.counts[j];
  return {{"p", t.p}, {"n", t.n}, {"a0", t.a0}, {"counts", counts}};
}

nlohmann::json decomposition_rows(const Decomposition& dec) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [sig, mult] : dec.multiplicities) {
    rows.push_back({{"signature", sig.block_indices()},
                    {"d", sig.d},
                    {"dim", ipow(dec.p, static_cast<unsigned long>(sig.d)).get_ui()},
                    {"mult", to_decimal(mult)},
                    {"projective", dec.is_projective(sig)}});
  }
  return rows;
}

nlohmann::json gamma_report_json(const GammaReport& report) {
  nlohmann::json per_type = nlohmann::json::array();
  for (const auto& entry : report.per_orbit_type)
    per_type.push_back({{"orbit_type", orbit_type_json(entry.type)},
                        {"gamma_E", to_decimal(entry.gamma)},
                        {"witness", entry.witness.line}});
  nlohmann::json out = {
      {"n", report.pp.n()},
      {"lambda", {report.pp.lambda1(), report.pp.lambda2()}},
      {"p", report.p},
      {"gamma", to_decimal(report.gamma_closed)},
      {"gamma_closed", to_decimal(report.gamma_closed)},
      {"gamma_structural", to_decimal(report.gamma_structural)},
      {"gamma_oracle", report.gamma_oracle ? nlohmann::json(to_decimal(*report.gamma_oracle)) : nlohmann::json()},
      {"oracle_skipped", report.oracle_skipped},
      {"per_orbit_type", per_type},
      {"witness_block", report.witness_block},
      {"witness_line", report.witness_line ? nlohmann::json(report.witness_line->line) : nlohmann::json()},
      {"agree", report.agree},
      {"disagreements", report.disagreements},
  };
  return out;
}

double round_significant(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

nlohmann::json growth_line(const GrowthEstimate& g, std::size_t index) {
  nlohmann::json ratio;
  if (index > 0 && g.ratios[index - 1]) ratio = to_fraction(*g.ratios[index - 1]);
  return {{"m", index + 1},
          {"c", to_decimal(g.c_values[index])},
          {"ratio", ratio},
          {"root", round_significant(g.roots[index])}};
}

nlohmann::json identity_json(const IdentityCase& c, const IdentityCheck& check) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : c.params) params[key] = value;
  return {{"identity", std::string(identity_name(c.identity))},
          {"params", params},
          {"lhs", to_decimal(check.lhs)},
          {"rhs", to_decimal(check.rhs)},
          {"equal", check.equal}};
}

}  // namespace bsgamma
