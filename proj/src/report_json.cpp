#include "numdup/report_json.hpp"

namespace numdup {

namespace {

nlohmann::json gens_json(const std::vector<std::int64_t>& gens) {
    return nlohmann::json(gens);
}

}  // namespace

nlohmann::json classification_json(const NumericalSemigroup& base, const RelativeIdeal& ideal,
                                   std::int64_t b, const NumericalSemigroup& duplication,
                                   const ClassificationReport& report,
                                   std::int64_t type_direct) {
    nlohmann::json routes = {
        {"formula", report.type_formula},
        {"ag", report.type_ag ? nlohmann::json(*report.type_ag) : nlohmann::json()},
        {"direct", type_direct},
    };
    return nlohmann::json{
        {"semigroup", gens_json(base.min_generators())},
        {"ideal", gens_json(ideal.min_generators())},
        {"b", b},
        {"duplication", gens_json(duplication.min_generators())},
        {"frobenius", duplication.frobenius()},
        {"genus", duplication.genus()},
        {"type", report.type_formula},
        {"gorenstein", report.gorenstein},
        {"almost_gorenstein", report.almost_gorenstein},
        {"complete_intersection", report.complete_intersection},
        {"type_routes", routes},
        {"z", report.z},
        {"ring_witness", report.ring_witness
                             ? nlohmann::json(report.ring_witness->min_generators())
                             : nlohmann::json()},
        {"bounds_ok", report.bounds_ok},
    };
}

nlohmann::json agreement_json(const AgreementReport& report) {
    return nlohmann::json{
        {"semigroup", gens_json(report.base_gens)},
        {"ideal", gens_json(report.ideal_gens)},
        {"b", report.b},
        {"gorenstein", {{"route", report.gorenstein_route}, {"direct", report.gorenstein_direct}}},
        {"almost_gorenstein",
         {{"conditions", report.ag_conditions_route},
          {"overring", report.ag_overring_route},
          {"direct", report.ag_direct}}},
        {"type",
         {{"formula", report.type_route},
          {"ag", report.type_ag_route ? nlohmann::json(*report.type_ag_route) : nlohmann::json()},
          {"direct", report.type_direct}}},
        {"complete_intersection", {{"route", report.ci_route}, {"direct", report.ci_direct}}},
        {"canonical_model_ok", report.canonical_model_ok},
        {"frobenius_formula_ok", report.frobenius_formula_ok},
        {"verdict", report.agree() ? "agree" : "mismatch"},
        {"mismatches", report.mismatches},
    };
}

nlohmann::json sweep_json(const SweepSummary& summary) {
    nlohmann::json histogram = nlohmann::json::object();
    for (const auto& [type, count] : summary.type_histogram)
        histogram[std::to_string(type)] = count;
    nlohmann::json mismatches = nlohmann::json::array();
    for (const AgreementReport& report : summary.mismatched)
        mismatches.push_back(agreement_json(report));
    return nlohmann::json{
        {"genus_max", summary.params.genus_max},
        {"b_count", summary.params.b_count},
        {"ideal_limit", summary.params.ideal_limit ? nlohmann::json(*summary.params.ideal_limit)
                                                   : nlohmann::json()},
        {"jobs", summary.params.jobs},
        {"semigroups", summary.semigroup_count},
        {"ideals", summary.ideal_count},
        {"duplications", summary.duplication_count},
        {"mismatches", mismatches},
        {"type_histogram", histogram},
        {"runtime_seconds", summary.runtime_seconds},
    };
}

}  // namespace numdup
