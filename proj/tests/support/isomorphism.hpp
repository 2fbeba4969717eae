#pragma once

// Ring isomorphism search for small rings, used by the tests only.
//
// Elements get an invariant signature; a bijection is built by choosing
// images for a ring generating set and closing the partial map under + and *.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "oaf/ring.hpp"

namespace oaf::testing {

inline constexpr std::size_t isomorphism_bound = 64;

using Signature = std::tuple<std::size_t, bool, bool, bool, std::size_t, std::size_t, std::size_t, std::size_t>;

inline Signature signature(const FiniteRing& r, Elem a) {
    std::size_t add_order = 1;
    for (Elem x = a; x != r.zero(); x = r.add(x, a)) ++add_order;
    std::size_t principal = 0;
    std::size_t annihilator = 0;
    std::vector<bool> seen(r.order(), false);
    for (Elem y = 0; y < r.order(); ++y) {
        const Elem p = r.mul(a, y);
        if (!seen[p]) {
            seen[p] = true;
            ++principal;
        }
        if (p == r.zero()) ++annihilator;
    }
    // Powers a, a^2, ... enter a cycle: record tail length and period.
    std::map<Elem, std::size_t> first;
    Elem p = a;
    std::size_t k = 1;
    while (!first.count(p)) {
        first[p] = k++;
        p = r.mul(p, a);
    }
    return {add_order, r.is_unit(a), r.is_nilpotent(a), r.mul(a, a) == a, principal, annihilator, first[p], k - first[p]};
}

namespace detail {

constexpr Elem unmapped = ~Elem{0};

// Extends phi by closure under + and *. Returns false on a conflict.
inline bool close_map(const FiniteRing& r, const FiniteRing& s, std::vector<Elem>& phi, std::vector<Elem>& inv) {
    std::vector<Elem> domain;
    for (Elem a = 0; a < r.order(); ++a) {
        if (phi[a] != unmapped) domain.push_back(a);
    }
    auto assign = [&](Elem a, Elem b, std::vector<Elem>& fresh) {
        if (phi[a] != unmapped) return phi[a] == b;
        if (inv[b] != unmapped) return false;
        phi[a] = b;
        inv[b] = a;
        fresh.push_back(a);
        return true;
    };
    std::vector<Elem> frontier = domain;
    while (!frontier.empty()) {
        std::vector<Elem> fresh;
        for (Elem x : frontier) {
            for (std::size_t k = 0; k < domain.size(); ++k) {
                const Elem y = domain[k];
                if (!assign(r.add(x, y), s.add(phi[x], phi[y]), fresh)) return false;
                if (!assign(r.mul(x, y), s.mul(phi[x], phi[y]), fresh)) return false;
            }
        }
        domain.insert(domain.end(), fresh.begin(), fresh.end());
        frontier = std::move(fresh);
    }
    return true;
}

inline bool search(const FiniteRing& r, const FiniteRing& s, const std::vector<Signature>& sr,
                   const std::vector<Signature>& ss, std::vector<Elem> phi, std::vector<Elem> inv,
                   std::vector<Elem>& out) {
    if (!close_map(r, s, phi, inv)) return false;
    Elem next = unmapped;
    for (Elem a = 0; a < r.order(); ++a) {
        if (phi[a] == unmapped) {
            next = a;
            break;
        }
    }
    if (next == unmapped) {
        out = phi;
        return true;
    }
    for (Elem b = 0; b < s.order(); ++b) {
        if (inv[b] != unmapped || ss[b] != sr[next]) continue;
        auto p = phi;
        auto q = inv;
        p[next] = b;
        q[b] = next;
        if (search(r, s, sr, ss, std::move(p), std::move(q), out)) return true;
    }
    return false;
}

}  // namespace detail

/// An isomorphism r -> s as an image table, or nullopt. Orders up to 64 only.
inline std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& r, const FiniteRing& s) {
    if (r.order() > isomorphism_bound || s.order() > isomorphism_bound) {
        throw std::invalid_argument("isomorphism search is limited to order 64");
    }
    if (r.order() != s.order()) return std::nullopt;
    std::vector<Signature> sr;
    std::vector<Signature> ss;
    for (Elem a = 0; a < r.order(); ++a) sr.push_back(signature(r, a));
    for (Elem a = 0; a < s.order(); ++a) ss.push_back(signature(s, a));
    auto a = sr;
    auto b = ss;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    std::vector<Elem> phi(r.order(), detail::unmapped);
    std::vector<Elem> inv(s.order(), detail::unmapped);
    phi[r.zero()] = s.zero();
    inv[s.zero()] = r.zero();
    if (phi[r.one()] != detail::unmapped) return std::nullopt;
    phi[r.one()] = s.one();
    inv[s.one()] = r.one();
    std::vector<Elem> out;
    if (detail::search(r, s, sr, ss, phi, inv, out)) return out;
    return std::nullopt;
}

inline bool isomorphic(const FiniteRing& r, const FiniteRing& s) { return find_isomorphism(r, s).has_value(); }

}  // namespace oaf::testing
