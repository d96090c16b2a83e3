#pragma once

#include <cstdint>

#include <json.hpp>

#include "numdup/classify.hpp"
#include "numdup/oracle.hpp"

namespace numdup {

/// Stable JSON form of a classification, keyed for scripting:
/// semigroup, ideal, b, duplication, frobenius, genus, type, gorenstein,
/// almost_gorenstein, complete_intersection,
/// type_routes:{formula, ag, direct}, z, ring_witness, bounds_ok.
/// `duplication` is the semigroup actually constructed (after any
/// translation of the ideal); `ideal` echoes the classified ideal.
nlohmann::json classification_json(const NumericalSemigroup& base,
                                   const RelativeIdeal& ideal, std::int64_t b,
                                   const NumericalSemigroup& duplication,
                                   const ClassificationReport& report,
                                   std::int64_t type_direct);

nlohmann::json agreement_json(const AgreementReport& report);

nlohmann::json sweep_json(const SweepSummary& summary);

}  // namespace numdup
