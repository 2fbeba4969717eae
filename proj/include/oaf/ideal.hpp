#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals of a finite ring and ideal arithmetic.
 *
 * An Ideal is identified by its member bitset. Its generator list is the
 * canonical greedy one: scan elements in ascending index order and keep every
 * element not already in the ideal generated so far.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oaf/ring.hpp"

namespace oaf {

namespace detail {

/// xR as a bitset.
inline ElementSet principal_members(const FiniteRing& r, Elem x) {
    ElementSet s(r.order());
    for (Elem y = 0; y < r.order(); ++y) s.set(r.mul(x, y));
    return s;
}

/// {a + b : a in A, b in B}; for ideals this is the ideal sum.
inline ElementSet sum_members(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
    if (b.is_subset_of(a)) return a;
    if (a.is_subset_of(b)) return b;
    ElementSet out(r.order());
    const auto bs = members_of(b);
    for_each_member(a, [&](Elem x) {
        for (Elem y : bs) out.set(r.add(x, y));
    });
    return out;
}

inline ElementSet generated_members(const FiniteRing& r, std::span<const Elem> gens) {
    ElementSet s(r.order());
    s.set(r.zero());
    for (Elem g : gens) {
        if (s.test(g)) continue;
        s = sum_members(r, s, principal_members(r, g));
    }
    return s;
}

inline std::vector<Elem> greedy_generators(const FiniteRing& r, const ElementSet& members) {
    std::vector<Elem> gens;
    ElementSet cur(r.order());
    cur.set(r.zero());
    for (auto i = members.find_first(); i != ElementSet::npos && cur != members; i = members.find_next(i)) {
        if (cur.test(i)) continue;
        gens.push_back(static_cast<Elem>(i));
        cur = sum_members(r, cur, principal_members(r, static_cast<Elem>(i)));
    }
    return gens;
}

}  // namespace detail

class Ideal {
public:
    /// Trusted constructor: members must already form an ideal.
    Ideal(FiniteRing ring, ElementSet members)
        : ring_(std::move(ring)), members_(std::move(members)),
          generators_(detail::greedy_generators(ring_, members_)) {}

    /// Validates that the bitset is an ideal before wrapping it.
    static Ideal from_members(const FiniteRing& ring, const ElementSet& members) {
        if (members.size() != ring.order() || !members.test(ring.zero())) {
            throw Error(ErrorKind::invalid_argument, "not an ideal: missing zero or wrong size");
        }
        bool ok = true;
        for_each_member(members, [&](Elem a) {
            for_each_member(members, [&](Elem b) {
                if (ok && !members.test(ring.add(a, b))) ok = false;
            });
            for (Elem r = 0; ok && r < ring.order(); ++r) {
                if (!members.test(ring.mul(a, r))) ok = false;
            }
        });
        if (!ok) throw Error(ErrorKind::invalid_argument, "not an ideal: closure fails");
        return Ideal(ring, members);
    }

    const FiniteRing& ring() const { return ring_; }
    const ElementSet& members() const { return members_; }
    const std::vector<Elem>& generators() const { return generators_; }
    std::size_t size() const { return members_.count(); }
    bool contains(Elem a) const { return members_.test(a); }
    bool is_proper() const { return !members_.test(ring_.one()); }
    bool is_zero() const { return members_.count() == 1; }

    bool subset_of(const Ideal& other) const {
        check_same_ring(other);
        return members_.is_subset_of(other.members_);
    }

    void check_same_ring(const Ideal& other) const {
        if (!ring_.same_as(other.ring_)) {
            throw Error(ErrorKind::cross_ring, "ideals belong to different rings");
        }
    }

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.ring_.same_as(b.ring_) && a.members_ == b.members_;
    }

    /// "(g1, g2)" using element names; "(0)" for the zero ideal.
    std::string to_string() const {
        if (generators_.empty()) return "(0)";
        std::string s = "(";
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (i) s += ", ";
            s += ring_.name(generators_[i]);
        }
        return s + ")";
    }

private:
    FiniteRing ring_;
    ElementSet members_;
    std::vector<Elem> generators_;
};

inline Ideal ideal_generated_by(const FiniteRing& r, std::span<const Elem> gens) {
    for (Elem g : gens) {
        if (g >= r.order()) throw Error(ErrorKind::invalid_argument, "generator index out of range");
    }
    return Ideal(r, detail::generated_members(r, gens));
}

inline Ideal ideal_generated_by(const FiniteRing& r, std::initializer_list<Elem> gens) {
    return ideal_generated_by(r, std::span<const Elem>(gens.begin(), gens.size()));
}

inline Ideal principal_ideal(const FiniteRing& r, Elem x) { return Ideal(r, detail::principal_members(r, x)); }

/// I = xR for some x.
inline bool is_principal_ideal(const Ideal& i) {
    const FiniteRing& r = i.ring();
    const auto size = i.size();
    bool found = false;
    for_each_member(i.members(), [&](Elem x) {
        if (!found && detail::principal_members(r, x).count() == size) found = true;
    });
    return found;
}

inline Ideal zero_ideal(const FiniteRing& r) {
    ElementSet s(r.order());
    s.set(r.zero());
    return Ideal(r, std::move(s));
}

inline Ideal unit_ideal(const FiniteRing& r) {
    ElementSet s(r.order());
    s.set();
    return Ideal(r, std::move(s));
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    a.check_same_ring(b);
    return Ideal(a.ring(), detail::sum_members(a.ring(), a.members(), b.members()));
}

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    a.check_same_ring(b);
    return Ideal(a.ring(), a.members() & b.members());
}

/// IJ = sum over generators g of I of gJ (each gJ is already an ideal).
inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    a.check_same_ring(b);
    const FiniteRing& r = a.ring();
    ElementSet out(r.order());
    out.set(r.zero());
    const auto bm = members_of(b.members());
    for (Elem g : a.generators()) {
        ElementSet gj(r.order());
        for (Elem j : bm) gj.set(r.mul(g, j));
        out = detail::sum_members(r, out, gj);
    }
    return Ideal(r, std::move(out));
}

/// I^0 = R.
inline Ideal ideal_power(const Ideal& a, unsigned k) {
    Ideal result = unit_ideal(a.ring());
    for (unsigned i = 0; i < k; ++i) result = ideal_product(result, a);
    return result;
}

/// (I : J) = {x : xJ in I}.
inline Ideal ideal_colon(const Ideal& i, const Ideal& j) {
    i.check_same_ring(j);
    const FiniteRing& r = i.ring();
    ElementSet out(r.order());
    for (Elem x = 0; x < r.order(); ++x) {
        bool ok = true;
        for (Elem g : j.generators()) {
            if (!i.contains(r.mul(x, g))) {
                ok = false;
                break;
            }
        }
        if (ok) out.set(x);
    }
    return Ideal(r, std::move(out));
}

/// sqrt(I) = {x : x^k in I for some k}, by scanning powers up to the ring order.
inline Ideal radical(const Ideal& i) {
    const FiniteRing& r = i.ring();
    ElementSet out(r.order());
    for (Elem x = 0; x < r.order(); ++x) {
        Elem p = x;
        for (std::size_t k = 1; k <= r.order(); ++k) {
            if (i.contains(p)) {
                out.set(x);
                break;
            }
            p = r.mul(p, x);
        }
    }
    return Ideal(r, std::move(out));
}

/// Least k >= 1 with I^k = 0, or nullopt when the powers stabilize above zero.
inline std::optional<unsigned> nilpotency_index(const Ideal& i) {
    Ideal p = i;
    for (unsigned k = 1;; ++k) {
        if (p.is_zero()) return k;
        Ideal next = ideal_product(p, i);
        if (next == p) return std::nullopt;
        p = std::move(next);
    }
}

/// First element a outside I with I + aR proper, or nullopt if I is maximal.
/// Throws for I = R.
inline std::optional<Elem> nonmaximal_witness(const Ideal& i) {
    if (!i.is_proper()) throw Error(ErrorKind::improper_ideal, "the unit ideal is not maximal");
    const FiniteRing& r = i.ring();
    for (Elem a = 0; a < r.order(); ++a) {
        if (i.contains(a)) continue;
        bool reaches_one = false;
        for (Elem s = 0; s < r.order() && !reaches_one; ++s) {
            if (i.contains(r.sub(r.one(), r.mul(a, s)))) reaches_one = true;
        }
        if (!reaches_one) return a;
    }
    return std::nullopt;
}

inline bool is_maximal_ideal(const Ideal& i) { return i.is_proper() && !nonmaximal_witness(i); }

/// The ideal of nonunits; only an ideal when the ring is local.
inline Ideal nonunit_ideal(const FiniteRing& r) {
    if (!r.is_local()) throw Error(ErrorKind::invalid_argument, r.description() + " is not local");
    return Ideal(r, r.nonunits());
}

/// The quotient ring together with the projection and lift maps.
struct QuotientMap {
    FiniteRing ring;
    std::vector<Elem> projection;  // parent -> quotient
    std::vector<Elem> lift;        // quotient -> smallest coset representative
};

/// R/I, elements are cosets labelled in order of their smallest member.
inline QuotientMap make_quotient_map(const FiniteRing& r, const Ideal& i) {
    if (!i.ring().same_as(r)) throw Error(ErrorKind::cross_ring, "ideal does not belong to the ring");
    if (!i.is_proper()) throw Error(ErrorKind::improper_ideal, "cannot take the quotient by the unit ideal");
    const std::size_t n = r.order();
    constexpr Elem unset = ~Elem{0};
    std::vector<Elem> projection(n, unset);
    std::vector<Elem> lift;
    const auto im = members_of(i.members());
    for (Elem a = 0; a < n; ++a) {
        if (projection[a] != unset) continue;
        const auto c = static_cast<Elem>(lift.size());
        lift.push_back(a);
        for (Elem m : im) projection[r.add(a, m)] = c;
    }
    auto d = std::make_shared<detail::RingData>();
    d->order = lift.size();
    d->one = projection[r.one()];
    d->config = r.config();
    d->construction.kind = ConstructionKind::quotient;
    d->construction.parents = {r};
    d->construction.projection = projection;
    d->construction.lift = lift;
    std::string desc = "quot(" + r.description();
    for (Elem g : i.generators()) desc += ", " + r.name(g);
    d->description = desc + ")";
    d->namer = [r, lift](Elem a) { return r.name(lift[a]); };
    d->oracle = std::make_unique<detail::QuotientArithmetic>(r, projection, lift);
    QuotientMap out{detail::finalize(std::move(d)), std::move(projection), std::move(lift)};
    return out;
}

inline FiniteRing make_quotient(const FiniteRing& r, const Ideal& i) { return make_quotient_map(r, i).ring; }

}  // namespace oaf
