#pragma once

/**
 * @file factorization.hpp
 * @brief Ideal factorizations and ring classification.
 *
 * A ReachabilityTable records, for one factor class, every ideal that is a
 * finite product of class ideals together with one shortest factor list.
 * Among shortest lists the lexicographically smallest (by lattice index) is
 * kept. The table is built level by level and is the least set containing
 * the class ideals and closed under multiplication by them.
 */

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oaf/lattice.hpp"
#include "oaf/predicates.hpp"

namespace oaf {

enum class FactorClass { oa, ta, prime, primary, principal_prime, principal_oa };

inline constexpr std::array<FactorClass, 6> all_factor_classes{
    FactorClass::oa,      FactorClass::ta,
    FactorClass::prime,   FactorClass::primary,
    FactorClass::principal_prime, FactorClass::principal_oa};

inline const char* to_string(FactorClass c) {
    switch (c) {
        case FactorClass::oa: return "oa";
        case FactorClass::ta: return "ta";
        case FactorClass::prime: return "prime";
        case FactorClass::primary: return "primary";
        case FactorClass::principal_prime: return "principal-prime";
        case FactorClass::principal_oa: return "principal-oa";
    }
    return "?";
}

inline std::optional<FactorClass> parse_factor_class(std::string_view s) {
    for (FactorClass c : all_factor_classes) {
        if (s == to_string(c)) return c;
    }
    return std::nullopt;
}

/// Fresh, unmemoized class predicate.
inline bool in_factor_class(const Ideal& i, FactorClass c) {
    if (!i.is_proper()) return false;
    auto principal = [&] { return is_principal_ideal(i); };
    switch (c) {
        case FactorClass::oa: return static_cast<bool>(is_OA_definitional(i));
        case FactorClass::ta: return static_cast<bool>(is_TA(i));
        case FactorClass::prime: return static_cast<bool>(is_prime(i));
        case FactorClass::primary: return static_cast<bool>(is_primary(i));
        case FactorClass::principal_prime: return principal() && is_prime(i);
        case FactorClass::principal_oa: return principal() && is_OA_definitional(i);
    }
    return false;
}

struct FactorizationWitness {
    Ideal target;
    std::vector<Ideal> factors;
    bool verified = false;
};

/// Multiplies the factors afresh and re-runs the class predicate on each.
inline bool verify_witness(const FactorizationWitness& w, FactorClass c) {
    if (w.factors.empty()) return false;
    Ideal p = w.factors.front();
    for (const auto& f : w.factors) {
        if (!f.is_proper() || !in_factor_class(f, c)) return false;
    }
    for (std::size_t k = 1; k < w.factors.size(); ++k) p = ideal_product(p, w.factors[k]);
    return p == w.target;
}

class ReachabilityTable {
public:
    using Index = IdealLattice::Index;

    ReachabilityTable(const IdealLattice& lat, FactorClass cls, const std::vector<bool>& members)
        : cls_(cls), witness_(lat.size()) {
        for (Index i = 0; i < lat.size(); ++i) {
            if (members[i]) class_.push_back(i);
        }
        std::vector<Index> level;
        for (Index c : class_) {
            witness_[c] = std::vector<Index>{c};
            level.push_back(c);
        }
        // Lex-minimal shortest lists are nondecreasing, and their prefixes are
        // lex-minimal shortest lists, so extending stored lists by a class
        // index >= their last entry finds every one of them.
        while (!level.empty()) {
            std::map<Index, std::vector<Index>> found;
            for (Index t : level) {
                const auto& w = *witness_[t];
                for (Index c : class_) {
                    if (c < w.back()) continue;
                    const Index p = lat.product(t, c);
                    if (witness_[p]) continue;
                    auto cand = w;
                    cand.push_back(c);
                    auto it = found.find(p);
                    if (it == found.end()) {
                        found.emplace(p, std::move(cand));
                    } else if (cand < it->second) {
                        it->second = std::move(cand);
                    }
                }
            }
            level.clear();
            for (auto& [p, w] : found) {
                witness_[p] = std::move(w);
                level.push_back(p);
            }
        }
    }

    FactorClass factor_class() const { return cls_; }
    const std::vector<Index>& class_ideals() const { return class_; }
    bool reachable(Index i) const { return witness_[i].has_value(); }
    /// Shortest factor list for a reachable ideal.
    const std::vector<Index>& witness(Index i) const { return *witness_[i]; }

    std::vector<Index> reachable_set() const {
        std::vector<Index> out;
        for (Index i = 0; i < witness_.size(); ++i) {
            if (witness_[i]) out.push_back(i);
        }
        return out;
    }

private:
    FactorClass cls_;
    std::vector<Index> class_;
    std::vector<std::optional<std::vector<Index>>> witness_;
};

/// Per-ring analysis: the ideal lattice plus memoized class flags and reachability tables.
/// Memo slots are filled once under std::call_once, so concurrent readers are safe.
class RingAnalysis {
public:
    using Index = IdealLattice::Index;

    explicit RingAnalysis(const FiniteRing& r) : lattice_(r) {}

    const FiniteRing& ring() const { return lattice_.ring(); }
    const IdealLattice& lattice() const { return lattice_; }

    /// Class membership of every lattice ideal.
    const std::vector<bool>& class_flags(FactorClass c) const {
        auto& slot = flags_[static_cast<std::size_t>(c)];
        std::call_once(slot.once, [&] {
            slot.value.assign(lattice_.size(), false);
            for (Index i = 1; i < lattice_.size(); ++i) slot.value[i] = in_class_uncached(i, c);
        });
        return slot.value;
    }

    bool in_class(Index i, FactorClass c) const { return class_flags(c)[i]; }

    const ReachabilityTable& reachability(FactorClass c) const {
        auto& slot = tables_[static_cast<std::size_t>(c)];
        std::call_once(slot.once, [&] { slot.value.emplace(lattice_, c, class_flags(c)); });
        return *slot.value;
    }

    bool is_local() const {
        const bool by_closure = ring().is_local();
        if (by_closure != is_local_by_maximal(lattice_)) throw std::logic_error("locality tests disagree");
        return by_closure;
    }

    /// The maximal ideal of a local ring.
    Index maximal_ideal() const {
        if (lattice_.maximal().size() != 1) throw Error(ErrorKind::invalid_argument, ring().description() + " is not local");
        return lattice_.maximal().front();
    }

    Index maximal_squared() const {
        const Index m = maximal_ideal();
        return lattice_.product(m, m);
    }

    /// Local, M^2 divided and M nilpotent.
    bool local_divided_nilpotent() const {
        if (!is_local()) return false;
        const Index m = maximal_ideal();
        return is_divided(lattice_, lattice_.product(m, m)) && nilpotency_index(lattice_[m]).has_value();
    }

    /// First proper ideal (principal only, if asked) with no factorization in the class.
    std::optional<Index> obstruction(FactorClass c, bool principal_only = false) const {
        const auto& t = reachability(c);
        for (Index i = 1; i < lattice_.size(); ++i) {
            if (principal_only && !lattice_.is_principal(i)) continue;
            if (!t.reachable(i)) return i;
        }
        return std::nullopt;
    }

    bool all_factor(FactorClass c, bool principal_only = false) const { return !obstruction(c, principal_only); }

    std::optional<FactorizationWitness> factorization(Index i, FactorClass c) const {
        if (!lattice_.is_proper(i)) throw Error(ErrorKind::improper_ideal, "the unit ideal has no factorization");
        const auto& t = reachability(c);
        if (!t.reachable(i)) return std::nullopt;
        FactorizationWitness w{lattice_[i], {}, false};
        for (Index f : t.witness(i)) w.factors.push_back(lattice_[f]);
        w.verified = verify_witness(w, c);
        if (!w.verified) throw std::logic_error("factorization witness failed re-verification");
        return w;
    }

    bool is_chained() const { return oaf::is_chained(lattice_); }

    bool is_arithmetical() const {
        std::call_once(arith_.once, [&] { arith_.value = oaf::is_arithmetical(lattice_); });
        return *arith_.value;
    }

private:
    bool in_class_uncached(Index i, FactorClass c) const {
        const Ideal& id = lattice_[i];
        switch (c) {
            case FactorClass::oa: return static_cast<bool>(is_OA_definitional(id));
            case FactorClass::ta: return static_cast<bool>(is_TA(id));
            case FactorClass::prime: return static_cast<bool>(is_prime(id));
            case FactorClass::primary: return static_cast<bool>(is_primary(id));
            case FactorClass::principal_prime: return lattice_.is_principal(i) && class_flags(FactorClass::prime)[i];
            case FactorClass::principal_oa: return lattice_.is_principal(i) && class_flags(FactorClass::oa)[i];
        }
        return false;
    }

    template <typename T>
    struct Slot {
        std::once_flag once;
        T value;
    };

    IdealLattice lattice_;
    mutable std::array<Slot<std::vector<bool>>, 6> flags_;
    mutable std::array<Slot<std::optional<ReachabilityTable>>, 6> tables_;
    mutable Slot<std::optional<bool>> arith_;
};

// -- ring classifiers -----------------------------------------------------

/// Closure of a class under pairwise products, by repeated squaring of the set.
/// Used as an independent check on ReachabilityTable.
inline std::vector<bool> product_closure(const IdealLattice& lat, const std::vector<bool>& members) {
    std::vector<bool> in = members;
    for (bool changed = true; changed;) {
        changed = false;
        for (IdealLattice::Index i = 0; i < lat.size(); ++i) {
            if (!in[i]) continue;
            for (IdealLattice::Index j = i; j < lat.size(); ++j) {
                if (!in[j]) continue;
                const auto p = lat.product(i, j);
                if (!in[p]) {
                    in[p] = true;
                    changed = true;
                }
            }
        }
    }
    return in;
}

inline ReachabilityTable build_reachability(const RingAnalysis& ra, FactorClass c) { return ra.reachability(c); }

inline std::optional<FactorizationWitness> has_factorization(const RingAnalysis& ra, const Ideal& i, FactorClass c) {
    return ra.factorization(ra.lattice().index_of(i), c);
}

/// Every proper ideal is a product of OA-ideals, by reachability.
inline bool is_OAF_bruteforce(const RingAnalysis& ra) { return ra.all_factor(FactorClass::oa); }
inline bool is_general_ZPI(const RingAnalysis& ra) { return ra.all_factor(FactorClass::prime); }
inline bool is_pi_ring(const RingAnalysis& ra) { return ra.all_factor(FactorClass::prime, true); }
inline bool is_Q_ring(const RingAnalysis& ra) { return ra.all_factor(FactorClass::primary); }
inline bool is_TAF(const RingAnalysis& ra) { return ra.all_factor(FactorClass::ta); }
inline bool is_UFR(const RingAnalysis& ra) { return ra.all_factor(FactorClass::principal_prime, true); }

/// Every proper principal ideal has an OA-factorization.
inline bool principal_OA_factorizations(const RingAnalysis& ra) { return ra.all_factor(FactorClass::oa, true); }
/// Every proper principal ideal is a product of principal OA-ideals.
inline bool principal_OA_products(const RingAnalysis& ra) { return ra.all_factor(FactorClass::principal_oa, true); }

/// General ZPI, or local with M^2 divided and M nilpotent. A finite domain is
/// a field, so the domain branch of the structure theorem is covered by ZPI.
inline bool is_OAF_characterized(const RingAnalysis& ra) {
    return is_general_ZPI(ra) || ra.local_divided_nilpotent();
}

struct ClassificationReport {
    std::string ring;
    std::size_t order = 0;
    std::size_t ideal_count = 0;
    bool is_local = false;
    bool is_field = false;
    bool is_OAF = false;
    bool is_OAF_characterized = false;
    bool is_TAF = false;
    bool is_general_ZPI = false;
    bool is_pi_ring = false;
    bool is_Q_ring = false;
    bool is_UFR = false;
    bool is_chained = false;
    bool is_arithmetical = false;
    bool all_proper_OA = false;
    /// Verdict name -> first ideal with no factorization, for false verdicts.
    std::map<std::string, Ideal> obstructions;
    /// Agreement flag name -> value. All must be true.
    std::map<std::string, bool> agreement;
};

inline ClassificationReport classify(const RingAnalysis& ra) {
    ClassificationReport rep;
    const auto& lat = ra.lattice();
    rep.ring = ra.ring().description();
    rep.order = ra.ring().order();
    rep.ideal_count = lat.size();
    rep.is_local = ra.is_local();
    rep.is_field = ra.ring().is_field();
    rep.is_OAF = is_OAF_bruteforce(ra);
    rep.is_OAF_characterized = is_OAF_characterized(ra);
    rep.is_TAF = is_TAF(ra);
    rep.is_general_ZPI = is_general_ZPI(ra);
    rep.is_pi_ring = is_pi_ring(ra);
    rep.is_Q_ring = is_Q_ring(ra);
    rep.is_UFR = is_UFR(ra);
    rep.is_chained = ra.is_chained();
    rep.is_arithmetical = ra.is_arithmetical();
    rep.all_proper_OA = true;
    for (auto i : lat.proper()) rep.all_proper_OA = rep.all_proper_OA && ra.in_class(i, FactorClass::oa);

    bool obstructions_recheck = true;
    auto note = [&](const char* name, FactorClass c, bool principal_only) {
        const auto o = ra.obstruction(c, principal_only);
        if (!o) return;
        rep.obstructions.emplace(name, lat[*o]);
        obstructions_recheck = obstructions_recheck && !product_closure(lat, ra.class_flags(c))[*o];
    };
    note("OAF", FactorClass::oa, false);
    note("TAF", FactorClass::ta, false);
    note("general_ZPI", FactorClass::prime, false);
    note("pi_ring", FactorClass::prime, true);
    note("Q_ring", FactorClass::primary, false);
    note("UFR", FactorClass::principal_prime, true);

    rep.agreement["OAF_bruteforce_vs_characterized"] = rep.is_OAF == rep.is_OAF_characterized;
    rep.agreement["local_closure_vs_maximal"] = ra.ring().is_local() == is_local_by_maximal(lat);
    rep.agreement["obstructions_unfactorable"] = obstructions_recheck;
    return rep;
}

}  // namespace oaf
