#pragma once

/**
 * @file lattice.hpp
 * @brief The complete ideal lattice of a finite ring.
 *
 * Ideals are enumerated as the closure of the principal ideals under sums.
 * The lattice is listed in a canonical order: larger ideals first, and among
 * ideals of equal size the one whose sorted member list is lexicographically
 * smaller comes first. So index 0 is always the whole ring and the last index
 * is the zero ideal. Containment, sums and products are tabulated eagerly.
 */

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "oaf/ideal.hpp"
#include "oaf/predicates.hpp"

namespace oaf {

namespace detail {

/// True when a precedes b in the canonical ideal order.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca > cb;
    const ElementSet diff = a ^ b;
    const auto low = diff.find_first();
    return low != ElementSet::npos && a.test(low);
}

/// IJ as a bitset, from a generator list of I and the members of J.
inline ElementSet product_members(const FiniteRing& r, const std::vector<Elem>& gens_i,
                                  const std::vector<Elem>& members_j) {
    ElementSet out(r.order());
    out.set(r.zero());
    for (Elem g : gens_i) {
        ElementSet gj(r.order());
        for (Elem j : members_j) gj.set(r.mul(g, j));
        out = sum_members(r, out, gj);
    }
    return out;
}

}  // namespace detail

class IdealLattice {
public:
    using Index = std::size_t;

    explicit IdealLattice(FiniteRing ring) : ring_(std::move(ring)) {
        const std::size_t n = ring_.order();
        if (n > ring_.config().enumeration_bound) {
            throw ResourceLimitError("ideal enumeration bound", ring_.config().enumeration_bound, n);
        }

        std::vector<ElementSet> principals;
        std::unordered_set<ElementSet> seen;
        for (Elem x = 0; x < n; ++x) {
            auto p = detail::principal_members(ring_, x);
            if (seen.insert(p).second) principals.push_back(std::move(p));
        }
        std::vector<ElementSet> all = principals;
        for (std::size_t k = 0; k < all.size(); ++k) {
            for (const auto& p : principals) {
                auto s = detail::sum_members(ring_, all[k], p);
                if (seen.insert(s).second) all.push_back(std::move(s));
            }
        }
        std::sort(all.begin(), all.end(), detail::canonical_less);

        std::unordered_set<ElementSet> principal_set(principals.begin(), principals.end());
        ideals_.reserve(all.size());
        for (Index i = 0; i < all.size(); ++i) {
            index_.emplace(all[i], i);
            principal_.push_back(principal_set.count(all[i]) > 0);
            ideals_.emplace_back(ring_, std::move(all[i]));
        }

        const std::size_t m = ideals_.size();
        leq_.assign(m * m, false);
        product_.assign(m * m, 0);
        sum_.assign(m * m, 0);
        std::vector<std::vector<Elem>> members(m);
        for (Index i = 0; i < m; ++i) members[i] = members_of(ideals_[i].members());
        for (Index i = 0; i < m; ++i) {
            for (Index j = 0; j < m; ++j) {
                leq_[i * m + j] = ideals_[i].members().is_subset_of(ideals_[j].members());
            }
        }
        for (Index i = 0; i < m; ++i) {
            for (Index j = i; j < m; ++j) {
                const Index s = at(detail::sum_members(ring_, ideals_[i].members(), ideals_[j].members()));
                const Index p = at(detail::product_members(ring_, ideals_[i].generators(), members[j]));
                sum_[i * m + j] = sum_[j * m + i] = s;
                product_[i * m + j] = product_[j * m + i] = p;
            }
        }
        for (Index i = 0; i < m; ++i) {
            if (i == whole_index()) continue;
            bool maximal = true;
            for (Index j = 0; j < m && maximal; ++j) {
                if (j != i && j != whole_index() && leq(i, j)) maximal = false;
            }
            if (maximal) maximal_.push_back(i);
        }
    }

    const FiniteRing& ring() const { return ring_; }
    std::size_t size() const { return ideals_.size(); }
    const Ideal& operator[](Index i) const { return ideals_[i]; }
    const std::vector<Ideal>& ideals() const { return ideals_; }

    Index whole_index() const { return 0; }
    Index zero_index() const { return ideals_.size() - 1; }

    std::optional<Index> find(const ElementSet& members) const {
        auto it = index_.find(members);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Lattice index of an ideal of this ring.
    Index index_of(const Ideal& i) const {
        if (!i.ring().same_as(ring_)) throw Error(ErrorKind::cross_ring, "ideal does not belong to the lattice ring");
        return at(i.members());
    }

    bool leq(Index i, Index j) const { return leq_[i * size() + j]; }
    bool comparable(Index i, Index j) const { return leq(i, j) || leq(j, i); }
    Index product(Index i, Index j) const { return product_[i * size() + j]; }
    Index sum(Index i, Index j) const { return sum_[i * size() + j]; }
    Index intersection(Index i, Index j) const { return at(ideals_[i].members() & ideals_[j].members()); }
    bool is_principal(Index i) const { return principal_[i]; }
    bool is_proper(Index i) const { return i != whole_index(); }

    /// Indices of the proper ideals, in lattice order.
    std::vector<Index> proper() const {
        std::vector<Index> out;
        for (Index i = 1; i < size(); ++i) out.push_back(i);
        return out;
    }

    const std::vector<Index>& maximal() const { return maximal_; }

private:
    Index at(const ElementSet& members) const {
        auto it = index_.find(members);
        if (it == index_.end()) throw std::logic_error("ideal missing from the lattice");
        return it->second;
    }

    FiniteRing ring_;
    std::vector<Ideal> ideals_;
    std::unordered_map<ElementSet, Index> index_;
    std::vector<bool> principal_;
    std::vector<bool> leq_;
    std::vector<Index> product_;
    std::vector<Index> sum_;
    std::vector<Index> maximal_;
};

inline IdealLattice all_ideals(const FiniteRing& r) { return IdealLattice(r); }

/// Intersection of the maximal ideals.
inline Ideal jacobson_radical(const IdealLattice& lat) {
    ElementSet s = lat[lat.maximal().front()].members();
    for (auto i : lat.maximal()) s &= lat[i].members();
    return Ideal(lat.ring(), std::move(s));
}

inline Ideal jacobson_radical(const FiniteRing& r) { return jacobson_radical(IdealLattice(r)); }

/// Local iff exactly one maximal ideal.
inline bool is_local_by_maximal(const IdealLattice& lat) { return lat.maximal().size() == 1; }

/// Primes containing I that contain no smaller prime containing I.
inline std::vector<Ideal> minimal_primes(const IdealLattice& lat, const Ideal& i) {
    const auto ii = lat.index_of(i);
    std::vector<IdealLattice::Index> over;
    for (auto p : lat.proper()) {
        if (lat.leq(ii, p) && is_prime(lat[p])) over.push_back(p);
    }
    std::vector<Ideal> out;
    for (auto p : over) {
        bool minimal = std::none_of(over.begin(), over.end(), [&](auto q) { return q != p && lat.leq(q, p); });
        if (minimal) out.push_back(lat[p]);
    }
    return out;
}

/// Comparable with every ideal. Also checked against the principal ideals
/// alone; the two answers must coincide.
inline bool is_divided(const IdealLattice& lat, IdealLattice::Index i) {
    bool all = true;
    bool principal = true;
    for (IdealLattice::Index j = 0; j < lat.size(); ++j) {
        if (lat.comparable(i, j)) continue;
        all = false;
        if (lat.is_principal(j)) principal = false;
    }
    if (all != principal) throw std::logic_error("divided test disagrees between all and principal ideals");
    return all;
}

inline bool is_divided(const IdealLattice& lat, const Ideal& i) { return is_divided(lat, lat.index_of(i)); }

/// Ideals totally ordered by inclusion.
inline bool is_chained(const IdealLattice& lat) {
    for (IdealLattice::Index i = 0; i < lat.size(); ++i) {
        for (IdealLattice::Index j = i + 1; j < lat.size(); ++j) {
            if (!lat.comparable(i, j)) return false;
        }
    }
    return true;
}

/// The local factor R/(1-e)R, where e is the primitive idempotent outside M.
/// A local ring is returned unchanged.
inline FiniteRing localize_at_maximal(const FiniteRing& r, const Ideal& m) {
    if (!m.ring().same_as(r)) throw Error(ErrorKind::cross_ring, "ideal does not belong to the ring");
    if (!is_maximal_ideal(m)) throw Error(ErrorKind::not_maximal, m.to_string() + " is not a maximal ideal");
    if (r.is_local()) return r;
    for (Elem e : r.primitive_idempotents()) {
        if (!m.contains(e)) return make_quotient(r, principal_ideal(r, r.sub(r.one(), e)));
    }
    throw std::logic_error("no primitive idempotent outside a maximal ideal");
}

/// Every localization at a maximal ideal is chained.
inline bool is_arithmetical(const IdealLattice& lat) {
    if (lat.maximal().size() == 1) return is_chained(lat);
    for (auto mi : lat.maximal()) {
        if (!is_chained(IdealLattice(localize_at_maximal(lat.ring(), lat[mi])))) return false;
    }
    return true;
}

}  // namespace oaf
