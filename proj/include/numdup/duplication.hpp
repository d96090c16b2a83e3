#pragma once

#include <cstdint>
#include <vector>

#include "numdup/ideal.hpp"
#include "numdup/semigroup.hpp"

namespace numdup {

enum class TranslatePolicy {
    none,        // the ideal must already be contained in the base semigroup
    auto_shift,  // shift by the least r >= 0 with r + E contained in S
};

/// Parameters of the doubling T = 2S u (2E + b): a base semigroup S, a
/// relative ideal E of S that is integral (E <= S) after the translate
/// policy is applied, and an odd member b of S.
struct DuplicationSpec {
    NumericalSemigroup base;
    RelativeIdeal ideal;
    std::int64_t b;
    TranslatePolicy translate = TranslatePolicy::auto_shift;
};

/// The least r >= 0 with r + E contained in S (always exists; r is at most
/// frobenius(S) + 1 - min(E)).
RelativeIdeal auto_translate(const NumericalSemigroup& s, const RelativeIdeal& e);

/// Builds T = { 2s : s in S } u { 2e + b : e in E } as a numerical
/// semigroup. Throws errc::even_b, errc::b_not_in_semigroup,
/// errc::ideal_not_integral (policy none with E not contained in S), and
/// errc::overflow.
NumericalSemigroup duplicate(const DuplicationSpec& spec);

/// Convenience overload with TranslatePolicy::none.
NumericalSemigroup duplicate(const NumericalSemigroup& s, const RelativeIdeal& e,
                             std::int64_t b);

/// The `count` smallest odd members of S, ascending. Requires count >= 1.
std::vector<std::int64_t> valid_b_values(const NumericalSemigroup& s, std::int64_t count);

/// Smallest odd member of S, the default b.
std::int64_t default_b(const NumericalSemigroup& s);

}  // namespace numdup
