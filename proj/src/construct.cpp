#include "numdup/construct.hpp"

#include <algorithm>
#include <utility>

#include "numdup/duplication.hpp"

namespace numdup {

std::vector<NumericalSemigroup> intermediate_semigroups(const NumericalSemigroup& s) {
    const std::vector<std::int64_t> pf = s.pseudo_frobenius();
    const std::size_t n = pf.size();

    std::vector<NumericalSemigroup> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto selected = [&](std::int64_t value) {
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i & 1) && pf[i] == value) return true;
            return false;
        };
        // closed iff sums of selected elements stay inside S or the selection
        bool closed = true;
        for (std::size_t i = 0; i < n && closed; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = i; j < n; ++j) {
                if (!(mask >> j & 1)) continue;
                const std::int64_t sum = pf[i] + pf[j];
                if (!s.contains(sum) && !selected(sum)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;

        if (s.is_natural_numbers()) {
            out.push_back(s);
            continue;
        }
        std::vector<bool> members(static_cast<std::size_t>(s.frobenius()) + 1);
        for (std::int64_t x = 0; x <= s.frobenius(); ++x)
            members[static_cast<std::size_t>(x)] = s.contains(x) || selected(x);
        out.push_back(NumericalSemigroup::from_member_table(members));
    }
    return out;
}

RelativeIdeal ideal_from_overring(const NumericalSemigroup& s, const NumericalSemigroup& a,
                                  std::optional<std::int64_t> r) {
    const std::vector<NumericalSemigroup> valid = intermediate_semigroups(s);
    if (std::find(valid.begin(), valid.end(), a) == valid.end())
        throw Error(errc::not_intermediate,
                    "the overring must sit between the semigroup and its stabilizer");

    const RelativeIdeal a_as_ideal = ideal_from_members_of(s, a);
    const RelativeIdeal raw = colon(canonical_ideal(s), a_as_ideal);
    if (!r) return auto_translate(s, raw);

    const RelativeIdeal shifted = translate(raw, *r);
    for (std::int64_t g : shifted.min_generators())
        if (!s.contains(g))
            throw Error(errc::not_integral_shift,
                        "shift " + std::to_string(*r) + " does not land inside the semigroup");
    return shifted;
}

RelativeIdeal ideal_from_members_of(const NumericalSemigroup& s, const NumericalSemigroup& a) {
    std::vector<std::int64_t> gens = {0};
    for (std::int64_t x = 1; x <= s.frobenius(); ++x)
        if (a.contains(x) && !s.contains(x)) gens.push_back(x);
    return RelativeIdeal::from_generators(s, std::move(gens));
}

std::vector<AgFamilyEntry> ag_family(const NumericalSemigroup& s) {
    std::vector<AgFamilyEntry> out;
    for (const NumericalSemigroup& a : intermediate_semigroups(s)) {
        RelativeIdeal ideal = ideal_from_overring(s, a);
        const std::int64_t extra = s.genus() - a.genus();  // |A \ S|
        out.push_back({a, std::move(ideal), 2 * extra + 1});
    }
    return out;
}

}  // namespace numdup
