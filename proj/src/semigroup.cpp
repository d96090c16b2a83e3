#include "numdup/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <utility>

#include "checked_arith.hpp"

namespace numdup {

namespace {

constexpr std::int64_t kMaxTableSize = std::int64_t{1} << 28;    // membership bits
constexpr std::int64_t kMaxMultiplicity = std::int64_t{1} << 24;  // residue classes
constexpr std::int64_t kGenusBudget = 20;

// Least member in each residue class mod m, by shortest paths on the
// residue graph (edge r -> (r + g) mod m of weight g).
std::vector<std::int64_t> apery_by_dijkstra(const std::vector<std::int64_t>& gens) {
    const std::int64_t m = gens.front();
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(m), inf);
    dist[0] = 0;

    using Node = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
    queue.push({0, 0});
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (std::int64_t g : gens) {
            const std::int64_t nd = detail::checked_add(d, g);
            const std::int64_t nr = (r + g % m) % m;
            if (nd < dist[static_cast<std::size_t>(nr)]) {
                dist[static_cast<std::size_t>(nr)] = nd;
                queue.push({nd, nr});
            }
        }
    }
    return dist;
}

std::vector<std::int64_t> gaps_from_table(const std::vector<bool>& table) {
    std::vector<std::int64_t> gaps;
    for (std::size_t z = 0; z < table.size(); ++z)
        if (!table[z]) gaps.push_back(static_cast<std::int64_t>(z));
    return gaps;
}

// Minimal generators: nonzero members not expressible as a sum of two
// nonzero members. They all lie in [multiplicity, frobenius + multiplicity].
std::vector<std::int64_t> min_gens_from_table(const std::vector<bool>& table,
                                              std::int64_t frobenius) {
    if (frobenius < 0) return {1};
    auto member = [&](std::int64_t z) {
        if (z < 0) return false;
        if (z > frobenius) return true;
        return static_cast<bool>(table[static_cast<std::size_t>(z)]);
    };
    std::int64_t mult = frobenius + 1;
    for (std::int64_t z = 1; z <= frobenius; ++z)
        if (member(z)) {
            mult = z;
            break;
        }

    std::vector<std::int64_t> gens;
    for (std::int64_t z = mult; z <= frobenius + mult; ++z) {
        if (!member(z)) continue;
        bool decomposable = false;
        for (std::int64_t y = mult; y + y <= z; ++y)
            if (member(y) && member(z - y)) {
                decomposable = true;
                break;
            }
        if (!decomposable) gens.push_back(z);
    }
    return gens;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::natural_numbers() {
    NumericalSemigroup s;
    s.min_gens_ = {1};
    s.frobenius_ = -1;
    return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::int64_t> gens) {
    if (gens.empty())
        throw Error(errc::empty_generators, "a numerical semigroup needs generators");
    for (std::int64_t g : gens)
        if (g <= 0) throw std::invalid_argument("generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t d = 0;
    for (std::int64_t g : gens) d = std::gcd(d, g);
    if (d != 1)
        throw Error(errc::gcd_not_one,
                    "gcd of generators is " + std::to_string(d) + "; complement would be infinite");

    if (gens.front() == 1) return natural_numbers();
    if (gens.front() > kMaxMultiplicity)
        throw Error(errc::overflow, "multiplicity too large for the membership table");

    const std::vector<std::int64_t> apery = apery_by_dijkstra(gens);
    const std::int64_t m = gens.front();
    const std::int64_t frobenius = *std::max_element(apery.begin(), apery.end()) - m;
    if (frobenius >= kMaxTableSize)
        throw Error(errc::overflow, "Frobenius number too large for the membership table");

    NumericalSemigroup s;
    s.frobenius_ = frobenius;
    s.member_table_.assign(static_cast<std::size_t>(frobenius) + 1, false);
    for (std::int64_t z = 0; z <= frobenius; ++z)
        s.member_table_[static_cast<std::size_t>(z)] = apery[static_cast<std::size_t>(z % m)] <= z;
    s.gaps_ = gaps_from_table(s.member_table_);
    s.min_gens_ = min_gens_from_table(s.member_table_, frobenius);
    return s;
}

NumericalSemigroup NumericalSemigroup::from_member_table(const std::vector<bool>& members) {
    std::vector<bool> table = members;
    while (!table.empty() && table.back()) table.pop_back();
    if (table.empty()) return natural_numbers();

    if (!table[0])
        throw Error(errc::internal_mismatch, "member table does not contain 0");
    const std::int64_t frobenius = static_cast<std::int64_t>(table.size()) - 1;
    for (std::int64_t x = 1; x <= frobenius; ++x) {
        if (!table[static_cast<std::size_t>(x)]) continue;
        for (std::int64_t y = x; x + y <= frobenius; ++y)
            if (table[static_cast<std::size_t>(y)] && !table[static_cast<std::size_t>(x + y)])
                throw Error(errc::internal_mismatch, "member table is not closed under addition");
    }

    NumericalSemigroup s;
    s.frobenius_ = frobenius;
    s.member_table_ = std::move(table);
    s.gaps_ = gaps_from_table(s.member_table_);
    s.min_gens_ = min_gens_from_table(s.member_table_, frobenius);
    return s;
}

std::vector<std::int64_t> NumericalSemigroup::apery(std::int64_t n) const {
    if (n <= 0 || !contains(n))
        throw Error(errc::not_member, std::to_string(n) + " is not a nonzero member");
    std::vector<std::int64_t> least(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        std::int64_t x = r;
        while (!contains(x)) x += n;
        least[static_cast<std::size_t>(r)] = x;
    }
    std::sort(least.begin(), least.end());
    return least;
}

std::vector<std::int64_t> NumericalSemigroup::pseudo_frobenius() const {
    std::vector<std::int64_t> pf;
    for (std::int64_t x : gaps_) {
        bool lands_inside = true;
        for (std::int64_t g : min_gens_)
            if (!contains(x + g)) {
                lands_inside = false;
                break;
            }
        if (lands_inside) pf.push_back(x);
    }
    return pf;
}

std::int64_t NumericalSemigroup::type() const {
    if (is_natural_numbers()) return 1;  // discrete valuation convention
    return static_cast<std::int64_t>(pseudo_frobenius().size());
}

bool NumericalSemigroup::is_symmetric() const {
    for (std::int64_t x = 0; x <= frobenius_; ++x)
        if (contains(x) == contains(frobenius_ - x)) return false;
    return true;
}

bool NumericalSemigroup::is_almost_symmetric() const {
    // Every gap x that pairs with a gap (frobenius - x also a gap) must send
    // the whole maximal ideal back into the semigroup.
    for (std::int64_t x : gaps_) {
        if (contains(frobenius_ - x)) continue;
        for (std::int64_t g : min_gens_)
            if (!contains(x + g)) return false;
    }
    return true;
}

NumericalSemigroup maximal_ideal_stabilizer(const NumericalSemigroup& s) {
    if (s.is_natural_numbers()) return s;
    const std::int64_t f = s.frobenius();
    std::vector<bool> members(static_cast<std::size_t>(f) + 1);
    for (std::int64_t x = 0; x <= f; ++x) {
        bool in = s.contains(x);
        if (!in) {
            in = true;
            for (std::int64_t g : s.min_generators())
                if (!s.contains(x + g)) {
                    in = false;
                    break;
                }
        }
        members[static_cast<std::size_t>(x)] = in;
    }
    return NumericalSemigroup::from_member_table(members);
}

namespace {

void enumerate_children(const NumericalSemigroup& s, std::int64_t genus_max,
                        const std::function<void(const NumericalSemigroup&)>& visit) {
    visit(s);
    if (s.genus() >= genus_max) return;
    for (std::int64_t g : s.min_generators()) {
        if (g <= s.frobenius()) continue;
        std::vector<bool> members(static_cast<std::size_t>(g) + 1);
        for (std::int64_t x = 0; x <= g; ++x)
            members[static_cast<std::size_t>(x)] = x != g && s.contains(x);
        enumerate_children(NumericalSemigroup::from_member_table(members), genus_max, visit);
    }
}

}  // namespace

void enumerate_by_genus(std::int64_t genus_max,
                        const std::function<void(const NumericalSemigroup&)>& visit) {
    if (genus_max < 0) throw std::invalid_argument("genus_max must be nonnegative");
    if (genus_max > kGenusBudget)
        throw Error(errc::budget_exceeded,
                    "genus_max " + std::to_string(genus_max) + " exceeds the budget of " +
                        std::to_string(kGenusBudget));
    enumerate_children(NumericalSemigroup::natural_numbers(), genus_max, visit);
}

std::vector<NumericalSemigroup> semigroups_up_to_genus(std::int64_t genus_max) {
    std::vector<NumericalSemigroup> out;
    enumerate_by_genus(genus_max, [&](const NumericalSemigroup& s) { out.push_back(s); });
    return out;
}

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s) {
    os << '<';
    const auto& gens = s.min_generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ',';
        os << gens[i];
    }
    return os << '>';
}

}  // namespace numdup
