#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "numdup/semigroup.hpp"

namespace numdup {

/// A relative ideal of a numerical semigroup S: a subset E of the integers,
/// bounded below, with E + S contained in E. It is stored as its ambient
/// semigroup plus the unique minimal generating set G (pairwise
/// S-incomparable), so E is the union of g + S over g in G.
///
/// Two ideals are equal iff they have equal ambients and equal minimal
/// generators; binary operations on ideals over different ambients throw
/// errc::ambient_mismatch rather than coercing.
class RelativeIdeal {
public:
    /// Throws errc::empty_generators on an empty generator list; otherwise
    /// reduces `gens` to the minimal generating set.
    static RelativeIdeal from_generators(NumericalSemigroup ambient,
                                         std::vector<std::int64_t> gens);

    const NumericalSemigroup& ambient() const { return ambient_; }
    const std::vector<std::int64_t>& min_generators() const { return min_gens_; }

    bool contains(std::int64_t z) const {
        for (std::int64_t g : min_gens_)
            if (ambient_.contains(z - g)) return true;
        return false;
    }

    std::int64_t min() const { return min_gens_.front(); }

    /// Largest integer not in the ideal; equals min() - 1 when the ideal is
    /// the full tail [min(), infinity).
    std::int64_t max_gap() const;

    bool is_principal() const { return min_gens_.size() == 1; }

    bool operator==(const RelativeIdeal& other) const {
        return ambient_ == other.ambient_ && min_gens_ == other.min_gens_;
    }
    bool operator!=(const RelativeIdeal& other) const { return !(*this == other); }

private:
    RelativeIdeal(NumericalSemigroup ambient, std::vector<std::int64_t> reduced)
        : ambient_(std::move(ambient)), min_gens_(std::move(reduced)) {}

    friend RelativeIdeal translate(const RelativeIdeal&, std::int64_t);

    NumericalSemigroup ambient_;
    std::vector<std::int64_t> min_gens_;
};

/// S viewed as an ideal of itself (generated by 0).
RelativeIdeal unit_ideal(const NumericalSemigroup& s);

/// The ideal of nonzero members, generated by the minimal generators of S.
RelativeIdeal maximal_ideal(const NumericalSemigroup& s);

RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f);

/// The colon (difference) ideal { z : z + F is contained in E }.
RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f);

RelativeIdeal intersect(const RelativeIdeal& e, const RelativeIdeal& f);

/// The canonical ideal K = { x : frobenius(S) - x is not in S }, normalized
/// so that min(K) = 0 and S <= K <= N.
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);

/// colon(canonical_ideal(S), E).
RelativeIdeal dual(const RelativeIdeal& e);

RelativeIdeal translate(const RelativeIdeal& e, std::int64_t r);
RelativeIdeal normalize(const RelativeIdeal& e);
bool is_translate_of(const RelativeIdeal& e, const RelativeIdeal& f);
bool is_subset(const RelativeIdeal& e, const RelativeIdeal& f);

/// |X \ Y| for nested ideals Y <= X; throws errc::not_nested otherwise.
std::int64_t lambda_between(const RelativeIdeal& x, const RelativeIdeal& y);

/// All relative ideals E with min(E) = 0 (equivalently, every relative ideal
/// up to translation): S <= E <= N with E + S <= E. Enumerated as subsets of
/// the gap set in ascending bitmask order, so the output is reproducible.
std::vector<RelativeIdeal> enumerate_normalized_ideals(const NumericalSemigroup& s);

std::ostream& operator<<(std::ostream& os, const RelativeIdeal& e);

}  // namespace numdup
