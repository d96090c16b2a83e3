#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numdup/ideal.hpp"
#include "numdup/semigroup.hpp"

namespace numdup {

// Ground-truth checks computed from the duplication alone, by definition,
// never from (S, E, b). They deliberately share no code path with the
// decision procedures in classify.hpp.

std::int64_t direct_type(const NumericalSemigroup& t);
bool direct_symmetric(const NumericalSemigroup& t);
bool direct_almost_symmetric(const NumericalSemigroup& t);

/// One duplication instance compared across every route. A mismatch is data,
/// not an exception: the report records all divergences for the instance.
struct AgreementReport {
    std::vector<std::int64_t> base_gens;
    std::vector<std::int64_t> ideal_gens;
    std::int64_t b = 0;

    bool gorenstein_route = false;
    bool gorenstein_direct = false;
    bool ag_conditions_route = false;
    bool ag_overring_route = false;
    bool ag_direct = false;
    std::int64_t type_route = 0;
    std::optional<std::int64_t> type_ag_route;
    std::int64_t type_direct = 0;
    bool ci_route = false;
    bool ci_direct = false;
    bool canonical_model_ok = false;
    bool frobenius_formula_ok = false;

    std::vector<std::string> mismatches;
    bool agree() const { return mismatches.empty(); }
};

/// Requires E integral and b an odd member of S.
AgreementReport verify_duplication(const NumericalSemigroup& s, const RelativeIdeal& e,
                                   std::int64_t b);

struct SweepParams {
    std::int64_t genus_max = 5;
    std::int64_t b_count = 2;
    std::optional<std::int64_t> ideal_limit;  // cap ideals per semigroup
    int jobs = 1;
};

struct SweepSummary {
    SweepParams params;
    std::int64_t semigroup_count = 0;
    std::int64_t ideal_count = 0;
    std::int64_t duplication_count = 0;
    std::vector<AgreementReport> mismatched;          // empty on a healthy build
    std::map<std::int64_t, std::int64_t> type_histogram;  // direct type -> count
    double runtime_seconds = 0.0;
};

/// Exhaustive agreement sweep: every semigroup of genus <= genus_max, every
/// normalized ideal (shifted into S), the b_count smallest odd b values.
/// Iteration order is deterministic and the result is reproducible up to the
/// runtime field. genus_max above 10 throws errc::budget_exceeded.
SweepSummary sweep(const SweepParams& params);

}  // namespace numdup
