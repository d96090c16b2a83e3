#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "numdup/errors.hpp"

namespace numdup {

/// A numerical semigroup: an additively closed subset of the nonnegative
/// integers that contains 0 and has finite complement.
///
/// The value is immutable after construction and cheap to copy; membership
/// below the Frobenius number is answered from a bit table, everything above
/// it is a member by cofiniteness. All queries are O(1) or small scans, and
/// all operations are pure, so instances can be shared freely across threads.
class NumericalSemigroup {
public:
    /// Builds the semigroup generated by `gens`. The input need not be
    /// minimal; it is reduced to the unique minimal generating set.
    /// Throws errc::empty_generators, errc::gcd_not_one, errc::overflow.
    static NumericalSemigroup from_generators(std::vector<std::int64_t> gens);

    /// The improper semigroup of all nonnegative integers.
    static NumericalSemigroup natural_numbers();

    /// Builds a semigroup from explicit membership over [0, members.size());
    /// every integer >= members.size() is taken to be a member. The set must
    /// contain 0 and be closed under addition (violations throw
    /// errc::internal_mismatch, since callers only reach this with sets that
    /// are semigroups by construction).
    static NumericalSemigroup from_member_table(const std::vector<bool>& members);

    bool contains(std::int64_t z) const {
        if (z < 0) return false;
        if (z > frobenius_) return true;
        return member_table_[static_cast<std::size_t>(z)];
    }

    const std::vector<std::int64_t>& min_generators() const { return min_gens_; }
    std::int64_t frobenius() const { return frobenius_; }  // -1 for the full monoid
    std::int64_t multiplicity() const { return min_gens_.front(); }
    const std::vector<std::int64_t>& gaps() const { return gaps_; }
    std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }
    bool is_natural_numbers() const { return frobenius_ == -1; }

    /// Least members of each residue class mod n, sorted by value.
    /// Requires n > 0 and n a member; otherwise throws errc::not_member.
    std::vector<std::int64_t> apery(std::int64_t n) const;

    /// Gaps x with x + m a member for every nonzero member m. Empty for the
    /// full monoid.
    std::vector<std::int64_t> pseudo_frobenius() const;

    /// Number of pseudo-Frobenius elements; 1 for the full monoid.
    std::int64_t type() const;

    /// True iff membership of x and of frobenius() - x are mutually
    /// exclusive and exhaustive over the integers.
    bool is_symmetric() const;

    /// True iff every gap x with frobenius() - x also a gap is
    /// pseudo-Frobenius.
    bool is_almost_symmetric() const;

    bool operator==(const NumericalSemigroup& other) const {
        return min_gens_ == other.min_gens_;
    }
    bool operator!=(const NumericalSemigroup& other) const { return !(*this == other); }

private:
    NumericalSemigroup() = default;

    std::vector<std::int64_t> min_gens_;
    std::int64_t frobenius_ = -1;
    std::vector<bool> member_table_;  // membership over [0, frobenius_]
    std::vector<std::int64_t> gaps_;
};

/// The stabilizer of the maximal ideal: { z >= 0 : z + m is a nonzero member
/// for every nonzero member m }, i.e. the semigroup together with its
/// pseudo-Frobenius elements. Returns the input unchanged for the full
/// monoid.
NumericalSemigroup maximal_ideal_stabilizer(const NumericalSemigroup& s);

/// Walks the tree of numerical semigroups rooted at the full monoid,
/// visiting each semigroup of genus <= genus_max exactly once. Children are
/// obtained by removing one minimal generator above the Frobenius number, in
/// increasing order, so the visit order is reproducible.
/// Throws errc::budget_exceeded for genus_max > 20.
void enumerate_by_genus(std::int64_t genus_max,
                        const std::function<void(const NumericalSemigroup&)>& visit);

/// Convenience: the same corpus collected into a vector, in visit order.
std::vector<NumericalSemigroup> semigroups_up_to_genus(std::int64_t genus_max);

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s);

}  // namespace numdup
