#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "numdup/ideal.hpp"
#include "numdup/semigroup.hpp"

namespace numdup {

/// All additively closed sets V with S <= V <= maximal_ideal_stabilizer(S),
/// found by filtering the subsets of the pseudo-Frobenius set. Both
/// endpoints are always present; subsets are tried in ascending bitmask
/// order, so the list starts with S and ends with the stabilizer.
std::vector<NumericalSemigroup> intermediate_semigroups(const NumericalSemigroup& s);

/// A semigroup containing S, viewed as a relative ideal of S.
RelativeIdeal ideal_from_members_of(const NumericalSemigroup& s, const NumericalSemigroup& a);

/// From an intermediate semigroup A, the integral ideal whose duplication is
/// almost Gorenstein with ring witness A: the dual of A viewed as an ideal,
/// shifted into S by the least shift (or by the given r, which must land
/// inside S or errc::not_integral_shift is thrown). A semigroup outside
/// intermediate_semigroups(s) throws errc::not_intermediate.
RelativeIdeal ideal_from_overring(const NumericalSemigroup& s, const NumericalSemigroup& a,
                                  std::optional<std::int64_t> r = std::nullopt);

struct AgFamilyEntry {
    NumericalSemigroup overring;
    RelativeIdeal ideal;
    std::int64_t expected_type;  // 2 * |overring \ S| + 1
};

/// One entry per intermediate semigroup; every entry's duplication is almost
/// Gorenstein of exactly the expected type, with ring witness the overring.
std::vector<AgFamilyEntry> ag_family(const NumericalSemigroup& s);

}  // namespace numdup
