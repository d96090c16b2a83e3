#include "numdup/ideal.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <utility>

#include "checked_arith.hpp"

namespace numdup {

namespace {

void require_same_ambient(const RelativeIdeal& e, const RelativeIdeal& f) {
    if (e.ambient() != f.ambient())
        throw Error(errc::ambient_mismatch, "ideals live over different semigroups");
}

// Keeps the S-minimal elements of a candidate set that covers the ideal.
std::vector<std::int64_t> reduce_generators(const NumericalSemigroup& s,
                                            std::vector<std::int64_t> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<std::int64_t> keep;
    for (std::int64_t g : gens) {
        bool covered = false;
        for (std::int64_t h : gens) {
            if (h == g) continue;
            if (s.contains(g - h)) {
                covered = true;
                break;
            }
        }
        if (!covered) keep.push_back(g);
    }
    return keep;
}

// Ideal from a membership predicate: no member below `lo`, every integer
// above `all_above` a member, `pred` decides in between. Minimal generators
// all lie in [lo, all_above + frobenius + 2].
RelativeIdeal ideal_from_members(const NumericalSemigroup& s, std::int64_t lo,
                                 std::int64_t all_above,
                                 const std::function<bool(std::int64_t)>& pred) {
    const std::int64_t hi =
        detail::checked_add(all_above, std::max<std::int64_t>(s.frobenius(), 0) + 2);
    std::vector<std::int64_t> members;
    for (std::int64_t z = lo; z <= hi; ++z)
        if (z > all_above || pred(z)) members.push_back(z);
    return RelativeIdeal::from_generators(s, std::move(members));
}

}  // namespace

RelativeIdeal RelativeIdeal::from_generators(NumericalSemigroup ambient,
                                             std::vector<std::int64_t> gens) {
    if (gens.empty())
        throw Error(errc::empty_generators, "a relative ideal needs generators");
    auto reduced = reduce_generators(ambient, std::move(gens));
    return RelativeIdeal(std::move(ambient), std::move(reduced));
}

std::int64_t RelativeIdeal::max_gap() const {
    const std::int64_t hi = detail::checked_add(min_gens_.back(), ambient_.frobenius());
    for (std::int64_t z = hi; z >= min(); --z)
        if (!contains(z)) return z;
    return min() - 1;
}

RelativeIdeal unit_ideal(const NumericalSemigroup& s) {
    return RelativeIdeal::from_generators(s, {0});
}

RelativeIdeal maximal_ideal(const NumericalSemigroup& s) {
    return RelativeIdeal::from_generators(s, s.min_generators());
}

RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_same_ambient(e, f);
    std::vector<std::int64_t> sums;
    sums.reserve(e.min_generators().size() * f.min_generators().size());
    for (std::int64_t g : e.min_generators())
        for (std::int64_t h : f.min_generators()) sums.push_back(detail::checked_add(g, h));
    return RelativeIdeal::from_generators(e.ambient(), std::move(sums));
}

RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_same_ambient(e, f);
    const std::int64_t lo = e.min() - f.min();
    const std::int64_t all_above = e.max_gap() - f.min();
    return ideal_from_members(e.ambient(), lo, all_above, [&](std::int64_t z) {
        for (std::int64_t h : f.min_generators())
            if (!e.contains(z + h)) return false;
        return true;
    });
}

RelativeIdeal intersect(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_same_ambient(e, f);
    const std::int64_t lo = std::max(e.min(), f.min());
    const std::int64_t all_above = std::max(e.max_gap(), f.max_gap());
    return ideal_from_members(e.ambient(), lo, all_above,
                              [&](std::int64_t z) { return e.contains(z) && f.contains(z); });
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
    const std::int64_t f = s.frobenius();
    return ideal_from_members(s, 0, f, [&](std::int64_t z) { return !s.contains(f - z); });
}

RelativeIdeal dual(const RelativeIdeal& e) { return colon(canonical_ideal(e.ambient()), e); }

RelativeIdeal translate(const RelativeIdeal& e, std::int64_t r) {
    std::vector<std::int64_t> gens = e.min_generators();
    for (std::int64_t& g : gens) g = detail::checked_add(g, r);
    // translation preserves S-incomparability, no re-reduction needed
    return RelativeIdeal(e.ambient(), std::move(gens));
}

RelativeIdeal normalize(const RelativeIdeal& e) { return translate(e, -e.min()); }

bool is_translate_of(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_same_ambient(e, f);
    return normalize(e) == normalize(f);
}

bool is_subset(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_same_ambient(e, f);
    for (std::int64_t g : e.min_generators())
        if (!f.contains(g)) return false;
    return true;
}

std::int64_t lambda_between(const RelativeIdeal& x, const RelativeIdeal& y) {
    require_same_ambient(x, y);
    if (!is_subset(y, x))
        throw Error(errc::not_nested, "colength requires nested ideals");
    std::int64_t count = 0;
    const std::int64_t hi = std::max(x.max_gap(), y.max_gap());
    for (std::int64_t z = x.min(); z <= hi; ++z)
        if (x.contains(z) && !y.contains(z)) ++count;
    return count;
}

std::vector<RelativeIdeal> enumerate_normalized_ideals(const NumericalSemigroup& s) {
    const auto& gaps = s.gaps();
    const std::size_t g = gaps.size();
    if (g > 30)
        throw Error(errc::budget_exceeded, "too many gaps to enumerate ideals exhaustively");

    // gap value -> bit position, for the closure test
    std::vector<int> gap_index(static_cast<std::size_t>(s.frobenius() + 1), -1);
    for (std::size_t i = 0; i < g; ++i)
        gap_index[static_cast<std::size_t>(gaps[i])] = static_cast<int>(i);

    std::vector<RelativeIdeal> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        bool closed = true;
        for (std::size_t i = 0; i < g && closed; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::int64_t a : s.min_generators()) {
                const std::int64_t x = gaps[i] + a;
                if (x > s.frobenius() || s.contains(x)) continue;
                if (!(mask >> gap_index[static_cast<std::size_t>(x)] & 1)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;
        std::vector<std::int64_t> gens = {0};
        for (std::size_t i = 0; i < g; ++i)
            if (mask >> i & 1) gens.push_back(gaps[i]);
        out.push_back(RelativeIdeal::from_generators(s, std::move(gens)));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RelativeIdeal& e) {
    os << '{';
    const auto& gens = e.min_generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ',';
        os << gens[i];
    }
    return os << "}+" << e.ambient();
}

}  // namespace numdup
