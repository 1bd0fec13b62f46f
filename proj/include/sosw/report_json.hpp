#ifndef SOSW_REPORT_JSON_HPP
#define SOSW_REPORT_JSON_HPP

#include "sosw/coloring.hpp"
#include "sosw/experiments.hpp"
#include "sosw/io.hpp"
#include "sosw/refutation.hpp"

namespace sosw {

inline Json to_json(const CoveringCertificate& c) {
  return Json{{"passed", c.passed},
              {"status", c.status},
              {"k0", c.k0},
              {"lambda", c.lambda},
              {"min_xi", c.min_xi},
              {"spectrum", Json{{"min", c.spec_min}, {"max", c.spec_max}}},
              {"covering_ok", c.covering_ok},
              {"strictly_positive", c.strictly_positive},
              {"exact", c.exact}};
}

inline Json to_json(const ChosenK& k) {
  return Json{{"k", k.k},
              {"log_term", k.log_term},
              {"lambda_used", k.lambda_used},
              {"lambda_clamped", k.lambda_clamped}};
}

inline Json to_json(const BooleanityReport& r) {
  return Json{{"passed", r.passed}, {"cases", r.cases}, {"max_residual", r.max_residual}};
}

inline Json to_json(const EdgeReport& r) {
  return Json{{"passed", r.passed},
              {"cases", r.cases},
              {"exhaustive", r.exhaustive},
              {"max_residual", r.max_residual}};
}

inline Json to_json(const PositivityReport& r) {
  return Json{{"is_psd", r.is_psd},    {"min_eig", r.min_eig},
              {"exact", r.exact},      {"index_size", r.index_size},
              {"route", r.route},      {"zero_rows_ok", r.zero_rows_ok}};
}

inline Json to_json(const SumConstraintReport& r) {
  Json per = Json::array();
  for (const auto& v : r.per_vertex)
    per.push_back(Json{{"vertex", v.vertex}, {"is_psd", v.is_psd}, {"min_eig", v.min_eig}});
  return Json{{"passed", r.passed},       {"exact", r.exact},
              {"route", r.route},         {"half_degree", r.half_degree},
              {"min_eig", r.min_eig},     {"per_vertex", per}};
}

template <typename T>
Json to_json(const ReductionReport<T>& r) {
  Json out;
  out["passed"] = r.passed;
  out["covering"] = to_json(r.covering);
  if (r.ran_checks) {
    out["k"] = to_json(r.kinfo);
    out["d_prime"] = r.d_prime;
    out["booleanity"] = to_json(r.booleanity);
    out["edges"] = to_json(r.edges);
    out["positivity"] = to_json(r.positivity);
    out["sum_constraints"] = to_json(r.sums);
  }
  return out;
}

inline Json to_json(const CoefficientAudit& a) {
  return Json{{"s", a.s},
              {"ell", a.ell},
              {"omega", a.omega},
              {"c_s", a.c_s},
              {"c_prime_s", a.c_prime_s},
              {"lower_bound_ok", a.lower_bound_ok},
              {"upper_bound_ok", a.upper_bound_ok},
              {"ratio_applicable", a.ratio_applicable},
              {"ratio_ok", a.ratio_ok}};
}

template <typename T>
Json to_json(const PowerChainReport<T>& r) {
  Json audit = Json::array();
  for (const auto& a : r.audit) audit.push_back(to_json(a));
  Json steps = Json::array();
  for (bool b : r.cs_steps_ok) steps.push_back(b);
  return Json{{"t", r.t},
              {"ell", r.ell},
              {"omega", r.omega},
              {"values", r.values},
              {"cs_steps_ok", steps},
              {"chain_ok", r.chain_ok},
              {"hypothesis_fires", r.hypothesis_fires},
              {"coefficient_inequality", r.coefficient_inequality},
              {"contradiction", r.contradiction},
              {"coefficient_audit", audit}};
}

inline Json to_json(const RefutationVerdict& v) {
  Json audit = Json::array();
  for (const auto& a : v.audit) audit.push_back(to_json(a));
  return Json{{"refuted", v.refuted},   {"t", v.t},
              {"witness", v.witness},   {"threshold", v.threshold},
              {"k", v.k},               {"degree", v.degree},
              {"coefficient_audit", audit}};
}

inline Json to_json(const MomentResult& r) {
  return Json{{"moment", r.moment},           {"bound", r.bound},
              {"within_bound", r.within_bound}, {"family_size", r.family_size},
              {"method", r.method},           {"std_error", r.std_error},
              {"trials", r.trials}};
}

inline Json to_json(const XiRow& r) {
  return Json{{"n", r.n},
              {"trials", r.trials},
              {"samples", r.samples},
              {"omega", r.omega},
              {"tau", r.tau},
              {"epsilon", r.epsilon},
              {"rule", r.rule},
              {"median", r.median},
              {"q25", r.q25},
              {"q75", r.q75},
              {"mean", r.mean},
              {"median_ci", Json{{"lo", r.median_ci_lo}, {"hi", r.median_ci_hi}}},
              {"max_dev", r.max_dev},
              {"degenerate", r.degenerate}};
}

inline Json to_json(const SurveyResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"trial", row.trial},
                        {"graph_seed", row.graph_seed},
                        {"arm", row.arm},
                        {"built", row.built},
                        {"covering_pass", row.covering_pass},
                        {"lambda", row.lambda},
                        {"k0", row.k0},
                        {"min_xi", row.min_xi},
                        {"k", row.k},
                        {"reduction_pass", row.reduction_pass}});
  return Json{{"trials", r.trials},
              {"rates",
               Json{{"calibrated_built", r.calibrated_built_rate},
                    {"calibrated_covering", r.calibrated_covering_rate},
                    {"calibrated_reduction", r.calibrated_reduction_rate},
                    {"control_covering", r.control_covering_rate},
                    {"control_reduction", r.control_reduction_rate}}},
              {"rows", rows}};
}

}  // namespace sosw

#endif  // SOSW_REPORT_JSON_HPP
