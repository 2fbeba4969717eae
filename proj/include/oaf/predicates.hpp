#pragma once

/**
 * @file predicates.hpp
 * @brief Prime, maximal, primary, n-absorbing and 1-absorbing prime ideals.
 *
 * Each predicate returns a PredicateVerdict. A false verdict always carries
 * a witness tuple, and the witness_violates_* functions re-check it against
 * the defining implication.
 *
 * The 1-absorbing prime (OA) scan runs over ordered triples of nonunits only.
 * The n-absorbing scan runs over all elements. Its condition is symmetric in
 * the tuple, so nondecreasing tuples are enough. The OA condition
 * "ab in I or c in I" is not symmetric, so that scan visits every ordered
 * triple.
 */

#include <optional>
#include <vector>

#include "oaf/ideal.hpp"

namespace oaf {

enum class Method { definitional, characterization };

inline const char* to_string(Method m) {
    return m == Method::definitional ? "definitional" : "characterization";
}

struct PredicateVerdict {
    bool value = false;
    std::optional<std::vector<Elem>> witness;
    Method method = Method::definitional;

    explicit operator bool() const { return value; }

    static PredicateVerdict yes(Method m = Method::definitional) { return {true, std::nullopt, m}; }
    static PredicateVerdict no(std::vector<Elem> w, Method m = Method::definitional) {
        return {false, std::move(w), m};
    }
};

namespace detail {

inline void require_proper(const Ideal& i, const char* what) {
    if (!i.is_proper()) throw Error(ErrorKind::improper_ideal, std::string(what) + " needs a proper ideal");
}

}  // namespace detail

// -- witness re-checks ----------------------------------------------------

/// (a, b) with ab in I, a and b outside I.
inline bool witness_violates_prime(const Ideal& i, const std::vector<Elem>& w) {
    const auto& r = i.ring();
    return w.size() == 2 && i.contains(r.mul(w[0], w[1])) && !i.contains(w[0]) && !i.contains(w[1]);
}

/// (a) outside I with I + aR proper.
inline bool witness_violates_maximal(const Ideal& i, const std::vector<Elem>& w) {
    if (w.size() != 1 || i.contains(w[0])) return false;
    return ideal_sum(i, principal_ideal(i.ring(), w[0])).is_proper();
}

/// (a, b) with ab in I, a outside I, b outside sqrt(I).
inline bool witness_violates_primary(const Ideal& i, const std::vector<Elem>& w) {
    const auto& r = i.ring();
    return w.size() == 2 && i.contains(r.mul(w[0], w[1])) && !i.contains(w[0]) &&
           !radical(i).contains(w[1]);
}

/// (a_1..a_{n+1}) with product in I and no n-fold sub-product in I.
inline bool witness_violates_n_absorbing(const Ideal& i, const std::vector<Elem>& w) {
    const auto& r = i.ring();
    if (w.size() < 2) return false;
    Elem all = r.one();
    for (Elem a : w) all = r.mul(all, a);
    if (!i.contains(all)) return false;
    for (std::size_t skip = 0; skip < w.size(); ++skip) {
        Elem p = r.one();
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k != skip) p = r.mul(p, w[k]);
        }
        if (i.contains(p)) return false;
    }
    return true;
}

/// Nonunits (a, b, c) with abc in I, ab outside I, c outside I.
inline bool witness_violates_oa(const Ideal& i, const std::vector<Elem>& w) {
    const auto& r = i.ring();
    if (w.size() != 3) return false;
    for (Elem x : w) {
        if (r.is_unit(x)) return false;
    }
    const Elem ab = r.mul(w[0], w[1]);
    return i.contains(r.mul(ab, w[2])) && !i.contains(ab) && !i.contains(w[2]);
}

// -- predicates -----------------------------------------------------------

inline PredicateVerdict is_prime(const Ideal& i) {
    detail::require_proper(i, "is_prime");
    const auto& r = i.ring();
    for (Elem a = 0; a < r.order(); ++a) {
        if (i.contains(a)) continue;
        for (Elem b = 0; b < r.order(); ++b) {
            if (!i.contains(b) && i.contains(r.mul(a, b))) return PredicateVerdict::no({a, b});
        }
    }
    return PredicateVerdict::yes();
}

inline PredicateVerdict is_maximal(const Ideal& i) {
    detail::require_proper(i, "is_maximal");
    if (auto w = nonmaximal_witness(i)) return PredicateVerdict::no({*w});
    return PredicateVerdict::yes();
}

inline PredicateVerdict is_primary(const Ideal& i) {
    detail::require_proper(i, "is_primary");
    const auto& r = i.ring();
    const Ideal rad = radical(i);
    for (Elem a = 0; a < r.order(); ++a) {
        if (i.contains(a)) continue;
        for (Elem b = 0; b < r.order(); ++b) {
            if (!rad.contains(b) && i.contains(r.mul(a, b))) return PredicateVerdict::no({a, b});
        }
    }
    return PredicateVerdict::yes();
}

inline PredicateVerdict is_n_absorbing(const Ideal& i, unsigned n) {
    detail::require_proper(i, "is_n_absorbing");
    if (n < 1) throw Error(ErrorKind::invalid_argument, "n-absorbing needs n >= 1");
    const auto& r = i.ring();
    const std::uint64_t order = r.order();
    std::uint64_t tuples = 1;
    for (unsigned k = 0; k <= n; ++k) {
        if (tuples > r.config().tuple_scan_bound / order + 1) {
            throw ResourceLimitError("tuple scan bound", r.config().tuple_scan_bound, tuples * order);
        }
        tuples *= order;
    }
    if (tuples > r.config().tuple_scan_bound) {
        throw ResourceLimitError("tuple scan bound", r.config().tuple_scan_bound, tuples);
    }

    const std::size_t len = n + 1;
    std::vector<Elem> t(len, 0);
    std::vector<Elem> prefix(len + 1);
    std::vector<Elem> suffix(len + 1);
    std::optional<std::vector<Elem>> witness;

    // Depth-first over nondecreasing tuples, carrying prefix products.
    auto rec = [&](auto&& self, std::size_t pos, Elem start) -> bool {
        if (pos == len) {
            if (!i.contains(prefix[len])) return false;
            suffix[len] = r.one();
            for (std::size_t k = len; k-- > 0;) suffix[k] = r.mul(suffix[k + 1], t[k]);
            for (std::size_t skip = 0; skip < len; ++skip) {
                if (i.contains(r.mul(prefix[skip], suffix[skip + 1]))) return false;
            }
            witness = t;
            return true;
        }
        for (Elem a = start; a < order; ++a) {
            t[pos] = a;
            prefix[pos + 1] = r.mul(prefix[pos], a);
            if (self(self, pos + 1, a)) return true;
        }
        return false;
    };
    prefix[0] = r.one();
    if (rec(rec, 0, 0)) return PredicateVerdict::no(*witness);
    return PredicateVerdict::yes();
}

/// 2-absorbing ideal.
inline PredicateVerdict is_TA(const Ideal& i) { return is_n_absorbing(i, 2); }

/// Nonunits a, b, c with abc in I force ab in I or c in I.
inline PredicateVerdict is_OA_definitional(const Ideal& i) {
    detail::require_proper(i, "is_OA_definitional");
    const auto& r = i.ring();
    const auto nu = members_of(r.nonunits());
    for (Elem a : nu) {
        for (Elem b : nu) {
            const Elem ab = r.mul(a, b);
            if (i.contains(ab)) continue;
            for (Elem c : nu) {
                if (!i.contains(c) && i.contains(r.mul(ab, c))) return PredicateVerdict::no({a, b, c});
            }
        }
    }
    return PredicateVerdict::yes();
}

/// OA by the ring structure: in a non-local ring exactly the primes, in a local
/// ring with maximal ideal M the primes and the ideals between M^2 and M.
///
/// The witness for a false verdict is built from the characterization data,
/// without a triple scan.
inline PredicateVerdict is_OA_characterized(const Ideal& i) {
    detail::require_proper(i, "is_OA_characterized");
    const auto& r = i.ring();
    const Method m = Method::characterization;
    const PredicateVerdict prime = is_prime(i);
    if (prime) return PredicateVerdict::yes(m);
    const Elem a = (*prime.witness)[0];
    const Elem b = (*prime.witness)[1];

    if (!r.is_local()) {
        // Nonunits u, v with u + v = 1: some nonunits s, t have a unit sum w,
        // and u = s/w, v = t/w. Then a = ua + va, so ua or va lies outside I.
        const auto nu = members_of(r.nonunits());
        for (Elem s : nu) {
            for (Elem t : nu) {
                const Elem w = r.add(s, t);
                if (!r.is_unit(w)) continue;
                Elem w_inv = 0;
                for (Elem y = 0; y < r.order(); ++y) {
                    if (r.mul(w, y) == r.one()) w_inv = y;
                }
                for (Elem u : {r.mul(s, w_inv), r.mul(t, w_inv)}) {
                    if (!i.contains(r.mul(u, a))) return PredicateVerdict::no({u, a, b}, m);
                }
            }
        }
        throw std::logic_error("non-local ring without a splitting pair of nonunits");
    }

    const Ideal max = nonunit_ideal(r);
    const Ideal max_sq = ideal_product(max, max);
    if (max_sq.subset_of(i) && i.subset_of(max)) return PredicateVerdict::yes(m);

    // Some x, y in M with xy outside I. Either (xy, a, b) or (x, y, a) violates.
    for (Elem x = 0; x < r.order(); ++x) {
        if (!max.contains(x)) continue;
        for (Elem y = 0; y < r.order(); ++y) {
            if (!max.contains(y)) continue;
            const Elem xy = r.mul(x, y);
            if (i.contains(xy)) continue;
            if (!i.contains(r.mul(xy, a))) return PredicateVerdict::no({xy, a, b}, m);
            return PredicateVerdict::no({x, y, a}, m);
        }
    }
    throw std::logic_error("M^2 not inside I but every product of M lies in I");
}

/// Diagnostic: the radical of an OA-ideal is prime.
inline bool radical_of_OA_is_prime(const Ideal& i) {
    if (!is_OA_definitional(i)) throw Error(ErrorKind::invalid_argument, "ideal is not OA");
    return static_cast<bool>(is_prime(radical(i)));
}

}  // namespace oaf
