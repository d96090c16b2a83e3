#include "numdup/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "checked_arith.hpp"

namespace numdup {

bool is_duplication_gorenstein(const NumericalSemigroup& s, const RelativeIdeal& e) {
    return is_translate_of(e, canonical_ideal(s));
}

std::int64_t duplication_type_formula(const NumericalSemigroup& s, const RelativeIdeal& e) {
    if (s.is_natural_numbers()) return 1;
    const RelativeIdeal unit = unit_ideal(s);
    const RelativeIdeal m = maximal_ideal(s);
    const RelativeIdeal conductor_part = intersect(colon(e, e), colon(unit, m));
    return lambda_between(conductor_part, unit) + lambda_between(colon(e, m), e);
}

bool is_duplication_almost_gorenstein(const NumericalSemigroup& s, const RelativeIdeal& e) {
    const RelativeIdeal d = dual(e);
    const std::int64_t z = d.min();
    if (add(e, d) != translate(e, z)) return false;
    const RelativeIdeal m = maximal_ideal(s);
    return translate(m, z) == add(m, d);
}

OverringRouteResult overring_route(const NumericalSemigroup& s, const RelativeIdeal& e) {
    const RelativeIdeal d = dual(e);
    const RelativeIdeal w = translate(d, -d.min());
    if (!is_subset(unit_ideal(s), w))
        throw Error(errc::internal_mismatch, "normalized dual does not contain the semigroup");

    const std::int64_t top = w.max_gap();
    for (std::int64_t x = 1; x <= top; ++x) {
        if (!w.contains(x)) continue;
        for (std::int64_t y = x; x + y <= top; ++y)
            if (w.contains(y) && !w.contains(x + y)) return {false, std::nullopt};
    }

    const NumericalSemigroup stabilizer = maximal_ideal_stabilizer(s);
    for (std::int64_t x = 0; x <= s.frobenius() + 1; ++x)
        if (w.contains(x) && !stabilizer.contains(x)) return {false, std::nullopt};

    std::vector<bool> members(static_cast<std::size_t>(std::max<std::int64_t>(top, -1)) + 2);
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(members.size()); ++x)
        members[static_cast<std::size_t>(x)] = w.contains(x);
    return {true, NumericalSemigroup::from_member_table(members)};
}

std::int64_t duplication_type_ag(const NumericalSemigroup& s, const RelativeIdeal& e) {
    if (!is_duplication_almost_gorenstein(s, e))
        throw Error(errc::not_almost_gorenstein, "the odd-type formula needs the product conditions");
    const RelativeIdeal d = dual(e);
    const std::int64_t z = d.min();
    const std::int64_t via_dual = 2 * lambda_between(translate(d, -z), unit_ideal(s)) + 1;
    const std::int64_t via_canonical =
        2 * lambda_between(canonical_ideal(s), translate(e, z)) + 1;
    if (via_dual != via_canonical)
        throw Error(errc::internal_mismatch, "the two odd-type colengths disagree");
    return via_dual;
}

std::pair<bool, std::optional<std::int64_t>> classify_maximal_ideal_duplication(
    const NumericalSemigroup& s) {
    if (s.is_natural_numbers())
        throw Error(errc::improper_semigroup, "the full monoid has no proper maximal ideal case");
    const bool almost = s.is_almost_symmetric();
    if (is_duplication_almost_gorenstein(s, maximal_ideal(s)) != almost)
        throw Error(errc::internal_mismatch,
                    "maximal-ideal route disagrees with almost symmetry");
    if (!almost) return {false, std::nullopt};
    return {true, 2 * s.type() + 1};
}

RelativeIdeal duplication_canonical_model(const NumericalSemigroup& s, const RelativeIdeal& e,
                                          std::int64_t b) {
    const NumericalSemigroup t = duplicate(s, e, b);
    const RelativeIdeal d = dual(e);
    const RelativeIdeal k = canonical_ideal(s);
    const std::int64_t z = d.min();
    std::vector<std::int64_t> gens;
    for (std::int64_t x : d.min_generators())
        gens.push_back(detail::checked_mul(2, x - z));
    for (std::int64_t y : k.min_generators())
        gens.push_back(detail::checked_add(detail::checked_mul(2, y - z), b));
    return RelativeIdeal::from_generators(t, std::move(gens));
}

namespace {

struct CiCache {
    std::mutex mutex;
    std::map<std::vector<std::int64_t>, bool> known;
};

CiCache& ci_cache() {
    static CiCache cache;
    return cache;
}

std::int64_t gcd_of(const std::vector<std::int64_t>& values) {
    std::int64_t d = 0;
    for (std::int64_t v : values) d = std::gcd(d, v);
    return d;
}

std::vector<std::int64_t> divide_all(const std::vector<std::int64_t>& values, std::int64_t d) {
    std::vector<std::int64_t> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / d;
    return out;
}

}  // namespace

bool is_complete_intersection(const NumericalSemigroup& s) {
    const std::vector<std::int64_t>& gens = s.min_generators();
    if (s.is_natural_numbers()) return true;

    {
        std::lock_guard<std::mutex> lock(ci_cache().mutex);
        auto it = ci_cache().known.find(gens);
        if (it != ci_cache().known.end()) return it->second;
    }

    const std::size_t n = gens.size();
    bool result = false;
    // bipartitions with gens[0] on the first side, so each split appears once
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)) && !result; ++mask) {
        std::vector<std::int64_t> left = {gens[0]}, right;
        for (std::size_t i = 1; i < n; ++i)
            (mask >> (i - 1) & 1 ? left : right).push_back(gens[i]);
        if (right.empty()) continue;

        const std::int64_t d1 = gcd_of(left);
        const std::int64_t d2 = gcd_of(right);
        if (std::gcd(d1, d2) != 1) continue;
        const NumericalSemigroup s1 = NumericalSemigroup::from_generators(divide_all(left, d1));
        const NumericalSemigroup s2 = NumericalSemigroup::from_generators(divide_all(right, d2));
        if (!s1.contains(d2) || !s2.contains(d1)) continue;
        result = is_complete_intersection(s1) && is_complete_intersection(s2);
    }

    std::lock_guard<std::mutex> lock(ci_cache().mutex);
    ci_cache().known.emplace(gens, result);
    return result;
}

bool is_duplication_complete_intersection(const NumericalSemigroup& s,
                                          const RelativeIdeal& e) {
    return is_complete_intersection(s) && e.is_principal();
}

ClassificationReport classify_duplication(const NumericalSemigroup& s, const RelativeIdeal& e,
                                          std::int64_t b) {
    if (b % 2 == 0) throw Error(errc::even_b, "b = " + std::to_string(b));
    if (b <= 0 || !s.contains(b))
        throw Error(errc::b_not_in_semigroup, "b = " + std::to_string(b));

    ClassificationReport report;
    report.gorenstein = is_duplication_gorenstein(s, e);
    report.almost_gorenstein = is_duplication_almost_gorenstein(s, e);
    const OverringRouteResult ring = overring_route(s, e);
    if (ring.almost_gorenstein != report.almost_gorenstein)
        throw Error(errc::internal_mismatch, "overring route disagrees with product conditions");
    report.complete_intersection = is_duplication_complete_intersection(s, e);
    report.type_formula = duplication_type_formula(s, e);
    report.z = dual(e).min();
    report.ring_witness = ring.witness;
    if (report.almost_gorenstein) {
        report.type_ag = duplication_type_ag(s, e);
        if (*report.type_ag != report.type_formula)
            throw Error(errc::internal_mismatch, "odd-type formula disagrees with type formula");
        report.bounds_ok =
            report.type_formula % 2 == 1 && report.type_formula >= 1 &&
            report.type_formula <= 2 * s.type() + 1;
    }
    if (report.gorenstein && !report.almost_gorenstein)
        throw Error(errc::internal_mismatch, "Gorenstein without the almost Gorenstein conditions");
    if (report.complete_intersection && !report.gorenstein)
        throw Error(errc::internal_mismatch, "complete intersection without Gorenstein");
    return report;
}

}  // namespace numdup
