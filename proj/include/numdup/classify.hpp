#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "numdup/duplication.hpp"
#include "numdup/ideal.hpp"
#include "numdup/semigroup.hpp"

namespace numdup {

/// Everything the decision procedures can say about the duplication built
/// from (S, E). All fields except the echoed parameters are independent of b
/// and invariant under translating E.
struct ClassificationReport {
    bool gorenstein = false;
    bool almost_gorenstein = false;
    bool complete_intersection = false;
    std::int64_t type_formula = 0;             // two-colength formula, always present
    std::optional<std::int64_t> type_ag;       // odd-type formula, present iff almost_gorenstein
    std::int64_t z = 0;                        // min of the dual of E
    std::optional<NumericalSemigroup> ring_witness;  // dual(E) - z when it is a semigroup
    bool bounds_ok = true;                     // odd-type bound, vacuously true when not AG

    bool operator==(const ClassificationReport&) const = default;
};

/// The duplication is Gorenstein iff E is a translate of the canonical
/// ideal.
bool is_duplication_gorenstein(const NumericalSemigroup& s, const RelativeIdeal& e);

/// Type of the duplication as the sum of two colengths,
/// |((E-E) n (S-M)) \ S| + |(E-M) \ E|, with M the maximal ideal. Returns 1
/// when S is the full monoid.
std::int64_t duplication_type_formula(const NumericalSemigroup& s, const RelativeIdeal& e);

/// Product conditions for the duplication to be almost Gorenstein: with
/// D = dual(E) and z = min(D), both E + D = z + E and z + M = M + D.
bool is_duplication_almost_gorenstein(const NumericalSemigroup& s, const RelativeIdeal& e);

struct OverringRouteResult {
    bool almost_gorenstein = false;
    std::optional<NumericalSemigroup> witness;  // dual(E) - z, when the route succeeds
};

/// Independent route: the duplication is almost Gorenstein iff
/// W = dual(E) - min(dual(E)) is closed under addition and lies between S
/// and the stabilizer of the maximal ideal. S <= W always holds and is
/// checked unconditionally.
OverringRouteResult overring_route(const NumericalSemigroup& s, const RelativeIdeal& e);

/// Odd-type formula 2 * |W \ S| + 1 = 2 * |K \ (z + E)| + 1, valid when the
/// duplication is almost Gorenstein (else errc::not_almost_gorenstein). Both
/// colengths are computed; a disagreement throws errc::internal_mismatch.
std::int64_t duplication_type_ag(const NumericalSemigroup& s, const RelativeIdeal& e);

/// For E = M: the duplication is almost Gorenstein iff S itself is almost
/// symmetric, and in that case its type is 2 * type(S) + 1. Requires S to be
/// proper (errc::improper_semigroup otherwise).
std::pair<bool, std::optional<std::int64_t>> classify_maximal_ideal_duplication(
    const NumericalSemigroup& s);

/// Canonical ideal of the duplication, assembled from the base data as
/// { 2(x - z) : x in dual(E) } u { 2(y - z) + b : y in K }, returned as a
/// relative ideal over duplicate(S, E, b). Its normalization equals the
/// normalization of canonical_ideal(duplicate(S, E, b)).
RelativeIdeal duplication_canonical_model(const NumericalSemigroup& s,
                                          const RelativeIdeal& e, std::int64_t b);

/// Recursive splitting test: S is a complete intersection iff it is the
/// full monoid or some bipartition G1 u G2 of its minimal generators has
/// d1 = gcd(G1) in <G2/d2>, d2 = gcd(G2) in <G1/d1>, with both quotient
/// semigroups complete intersections. Results are memoized process-wide.
bool is_complete_intersection(const NumericalSemigroup& s);

/// The duplication is a complete intersection iff S is one and E is
/// principal.
bool is_duplication_complete_intersection(const NumericalSemigroup& s,
                                          const RelativeIdeal& e);

/// Runs every route and aggregates. Validates b (odd member of S) and the
/// internal coherence of the routes; a route disagreement throws
/// errc::internal_mismatch.
ClassificationReport classify_duplication(const NumericalSemigroup& s,
                                          const RelativeIdeal& e, std::int64_t b);

}  // namespace numdup
