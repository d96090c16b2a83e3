#include "numdup/duplication.hpp"

#include <utility>

#include "checked_arith.hpp"

namespace numdup {

RelativeIdeal auto_translate(const NumericalSemigroup& s, const RelativeIdeal& e) {
    if (e.ambient() != s)
        throw Error(errc::ambient_mismatch, "ideal does not live over the given semigroup");
    for (std::int64_t r = std::max<std::int64_t>(0, -e.min());; ++r) {
        bool inside = true;
        for (std::int64_t g : e.min_generators())
            if (!s.contains(g + r)) {
                inside = false;
                break;
            }
        if (inside) return translate(e, r);
    }
}

NumericalSemigroup duplicate(const DuplicationSpec& spec) {
    const NumericalSemigroup& s = spec.base;
    if (spec.b % 2 == 0) throw Error(errc::even_b, "b = " + std::to_string(spec.b));
    if (spec.b <= 0 || !s.contains(spec.b))
        throw Error(errc::b_not_in_semigroup, "b = " + std::to_string(spec.b));

    RelativeIdeal e = spec.ideal;
    if (spec.translate == TranslatePolicy::auto_shift) {
        e = auto_translate(s, e);
    } else {
        for (std::int64_t g : e.min_generators())
            if (!s.contains(g))
                throw Error(errc::ideal_not_integral,
                            "generator " + std::to_string(g) + " lies outside the semigroup");
    }

    // E + E + b lands in 2S; a failure here is a bug, the inclusion follows
    // from E <= S and b in S.
    for (std::int64_t g : e.min_generators())
        for (std::int64_t h : e.min_generators()) {
            const std::int64_t sum = detail::checked_add(detail::checked_add(g, h), spec.b);
            if (sum % 2 != 0 || !s.contains(sum / 2))
                throw Error(errc::internal_mismatch, "ideal sums escape the doubled semigroup");
        }

    const std::int64_t frob = detail::checked_add(detail::checked_mul(2, e.max_gap()), spec.b);
    if (frob < 0) return NumericalSemigroup::natural_numbers();

    std::vector<bool> members(static_cast<std::size_t>(frob) + 1);
    for (std::int64_t z = 0; z <= frob; ++z) {
        if (z % 2 == 0)
            members[static_cast<std::size_t>(z)] = s.contains(z / 2);
        else
            members[static_cast<std::size_t>(z)] = e.contains((z - spec.b) / 2);
    }
    return NumericalSemigroup::from_member_table(members);
}

NumericalSemigroup duplicate(const NumericalSemigroup& s, const RelativeIdeal& e,
                             std::int64_t b) {
    return duplicate(DuplicationSpec{s, e, b, TranslatePolicy::none});
}

std::vector<std::int64_t> valid_b_values(const NumericalSemigroup& s, std::int64_t count) {
    if (count < 1) throw std::invalid_argument("count must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t z = 1; static_cast<std::int64_t>(out.size()) < count; z += 2)
        if (s.contains(z)) out.push_back(z);
    return out;
}

std::int64_t default_b(const NumericalSemigroup& s) { return valid_b_values(s, 1).front(); }

}  // namespace numdup
