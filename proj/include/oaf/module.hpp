#pragma once

/**
 * @file module.hpp
 * @brief Finite modules over finite rings and the trivial extension A x| E.
 *
 * A FiniteModule is an explicit addition table on 0..|E|-1 (0 is the zero
 * element) together with an action table A x E -> E. Every constructor
 * validates the abelian group and module axioms exhaustively.
 *
 * The trivial extension of A by E has elements (a, e) stored at index
 * a * |E| + e, with (a, e)(b, f) = (ab, af + be).
 */

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "oaf/lattice.hpp"

namespace oaf {

enum class ModuleKind { self, quotient, product, zero, custom };

namespace detail {

struct ModuleData {
    FiniteRing base;
    std::size_t order = 0;
    std::vector<Elem> add_table;  // order x order
    std::vector<Elem> act_table;  // base.order() x order
    std::vector<Elem> neg_table;
    ModuleKind kind = ModuleKind::custom;
    std::string description;
    std::vector<Elem> quotient_generators;  // quotient: generators of I in the base
    std::function<std::string(Elem)> namer;
};

}  // namespace detail

class FiniteModule {
public:
    FiniteModule() = default;
    explicit FiniteModule(std::shared_ptr<const detail::ModuleData> d) : d_(std::move(d)) {}

    const FiniteRing& base() const { return d_->base; }
    std::size_t order() const { return d_->order; }
    Elem zero() const { return 0; }
    Elem add(Elem e, Elem f) const { return d_->add_table[e * d_->order + f]; }
    Elem neg(Elem e) const { return d_->neg_table[e]; }
    Elem act(Elem a, Elem e) const { return d_->act_table[a * d_->order + e]; }
    bool is_zero_module() const { return d_->order == 1; }
    ModuleKind kind() const { return d_->kind; }
    const std::string& description() const { return d_->description; }
    const std::vector<Elem>& quotient_generators() const { return d_->quotient_generators; }
    std::string name(Elem e) const { return d_->namer ? d_->namer(e) : std::to_string(e); }
    const std::shared_ptr<const detail::ModuleData>& data() const { return d_; }

private:
    std::shared_ptr<const detail::ModuleData> d_;
};

namespace detail {

[[noreturn]] inline void module_fail(const std::string& law, std::initializer_list<Elem> xs) {
    std::string msg = "module axiom '" + law + "' fails at (";
    bool first = true;
    for (Elem x : xs) {
        if (!first) msg += ", ";
        msg += std::to_string(x);
        first = false;
    }
    throw Error(ErrorKind::module_axiom, msg + ")");
}

/// Validates the group and module axioms, fills the negation table and freezes the module.
inline FiniteModule finalize_module(std::shared_ptr<ModuleData> d) {
    const std::size_t n = d->order;
    const FiniteRing& a = d->base;
    if (n == 0 || d->add_table.size() != n * n || d->act_table.size() != a.order() * n) {
        throw Error(ErrorKind::module_axiom, "module tables have the wrong shape");
    }
    auto add = [&](Elem e, Elem f) { return d->add_table[e * n + f]; };
    auto act = [&](Elem r, Elem e) { return d->act_table[r * n + e]; };
    for (Elem x : d->add_table) {
        if (x >= n) module_fail("closure", {x});
    }
    for (Elem x : d->act_table) {
        if (x >= n) module_fail("closure", {x});
    }
    d->neg_table.assign(n, 0);
    for (Elem e = 0; e < n; ++e) {
        if (add(0, e) != e) module_fail("0 + e = e", {e});
        bool has_neg = false;
        for (Elem f = 0; f < n; ++f) {
            if (add(e, f) != add(f, e)) module_fail("e + f = f + e", {e, f});
            if (add(e, f) == 0 && !has_neg) {
                d->neg_table[e] = f;
                has_neg = true;
            }
            for (Elem g = 0; g < n; ++g) {
                if (add(add(e, f), g) != add(e, add(f, g))) module_fail("(e + f) + g = e + (f + g)", {e, f, g});
            }
        }
        if (!has_neg) module_fail("e has a negative", {e});
        if (act(a.one(), e) != e) module_fail("1e = e", {e});
    }
    for (Elem r = 0; r < a.order(); ++r) {
        for (Elem e = 0; e < n; ++e) {
            for (Elem f = 0; f < n; ++f) {
                if (act(r, add(e, f)) != add(act(r, e), act(r, f))) module_fail("a(e + f) = ae + af", {r, e, f});
            }
            for (Elem s = 0; s < a.order(); ++s) {
                if (act(a.add(r, s), e) != add(act(r, e), act(s, e))) module_fail("(a + b)e = ae + be", {r, s, e});
                if (act(a.mul(r, s), e) != act(r, act(s, e))) module_fail("(ab)e = a(be)", {r, s, e});
            }
        }
    }
    return FiniteModule(std::move(d));
}

}  // namespace detail

/// A module from explicit tables. add is order x order, act is |A| x order, both row-major.
inline FiniteModule make_module(const FiniteRing& a, std::size_t order, std::vector<Elem> add,
                                std::vector<Elem> act, std::string description = "custom") {
    auto d = std::make_shared<detail::ModuleData>();
    d->base = a;
    d->order = order;
    d->add_table = std::move(add);
    d->act_table = std::move(act);
    d->kind = ModuleKind::custom;
    d->description = std::move(description);
    return detail::finalize_module(std::move(d));
}

/// A as a module over itself.
inline FiniteModule make_module_self(const FiniteRing& a) {
    const std::size_t n = a.order();
    auto d = std::make_shared<detail::ModuleData>();
    d->base = a;
    d->order = n;
    d->add_table.resize(n * n);
    d->act_table.resize(n * n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            d->add_table[x * n + y] = a.add(x, y);
            d->act_table[x * n + y] = a.mul(x, y);
        }
    }
    d->kind = ModuleKind::self;
    d->description = "self";
    d->namer = [a](Elem e) { return a.name(e); };
    return detail::finalize_module(std::move(d));
}

/// A/I as an A-module; cosets are labelled as in make_quotient.
inline FiniteModule make_module_quotient(const FiniteRing& a, const Ideal& i) {
    const QuotientMap q = make_quotient_map(a, i);
    const std::size_t n = q.ring.order();
    auto d = std::make_shared<detail::ModuleData>();
    d->base = a;
    d->order = n;
    d->add_table.resize(n * n);
    d->act_table.resize(a.order() * n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) d->add_table[x * n + y] = q.ring.add(x, y);
    }
    for (Elem r = 0; r < a.order(); ++r) {
        for (Elem e = 0; e < n; ++e) d->act_table[r * n + e] = q.projection[a.mul(r, q.lift[e])];
    }
    d->kind = ModuleKind::quotient;
    d->quotient_generators = i.generators();
    std::string desc = "quotmod(";
    if (i.generators().empty()) desc += a.name(a.zero());
    for (std::size_t k = 0; k < i.generators().size(); ++k) {
        if (k) desc += ", ";
        desc += a.name(i.generators()[k]);
    }
    d->description = desc + ")";
    d->namer = [a, lift = q.lift](Elem e) { return a.name(lift[e]); };
    return detail::finalize_module(std::move(d));
}

inline FiniteModule make_module_zero(const FiniteRing& a) {
    auto d = std::make_shared<detail::ModuleData>();
    d->base = a;
    d->order = 1;
    d->add_table = {0};
    d->act_table.assign(a.order(), 0);
    d->kind = ModuleKind::zero;
    d->description = "zero";
    return detail::finalize_module(std::move(d));
}

/// Direct sum of modules over one base ring; mixed radix with the last factor fastest.
inline FiniteModule make_module_product(const std::vector<FiniteModule>& factors) {
    if (factors.size() < 2) throw Error(ErrorKind::arity, "a module product needs at least two factors");
    const FiniteRing& a = factors.front().base();
    std::size_t n = 1;
    for (const auto& f : factors) {
        if (!f.base().same_as(a)) throw Error(ErrorKind::module_mismatch, "module factors have different base rings");
        n *= f.order();
        if (n > a.config().max_ring_order) throw ResourceLimitError("max ring order", a.config().max_ring_order, n);
    }
    std::vector<std::size_t> stride(factors.size(), 1);
    for (std::size_t i = factors.size() - 1; i-- > 0;) stride[i] = stride[i + 1] * factors[i + 1].order();
    auto comp = [&](Elem e, std::size_t i) { return static_cast<Elem>((e / stride[i]) % factors[i].order()); };

    auto d = std::make_shared<detail::ModuleData>();
    d->base = a;
    d->order = n;
    d->add_table.resize(n * n);
    d->act_table.resize(a.order() * n);
    for (Elem e = 0; e < n; ++e) {
        for (Elem f = 0; f < n; ++f) {
            std::size_t v = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) v += stride[i] * factors[i].add(comp(e, i), comp(f, i));
            d->add_table[e * n + f] = static_cast<Elem>(v);
        }
    }
    for (Elem r = 0; r < a.order(); ++r) {
        for (Elem e = 0; e < n; ++e) {
            std::size_t v = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) v += stride[i] * factors[i].act(r, comp(e, i));
            d->act_table[r * n + e] = static_cast<Elem>(v);
        }
    }
    d->kind = ModuleKind::product;
    std::string desc;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) desc += " x ";
        const auto& fd = factors[i].description();
        desc += factors[i].kind() == ModuleKind::product ? "(" + fd + ")" : fd;
    }
    d->description = desc;
    d->namer = [factors, stride](Elem e) {
        std::string s = "(";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ", ";
            s += factors[i].name(static_cast<Elem>((e / stride[i]) % factors[i].order()));
        }
        return s + ")";
    };
    return detail::finalize_module(std::move(d));
}

// -- submodule arithmetic -------------------------------------------------

namespace detail {

/// Additive closure of a set of module elements (the set must be stable under the action).
inline ElementSet additive_closure(const FiniteModule& e, ElementSet s) {
    s.set(e.zero());
    std::vector<Elem> frontier = members_of(s);
    while (!frontier.empty()) {
        std::vector<Elem> next;
        const auto cur = members_of(s);
        for (Elem x : frontier) {
            for (Elem y : cur) {
                const Elem z = e.add(x, y);
                if (!s.test(z)) {
                    s.set(z);
                    next.push_back(z);
                }
            }
        }
        frontier = std::move(next);
    }
    return s;
}

inline ElementSet cyclic_submodule(const FiniteModule& e, Elem x) {
    ElementSet s(e.order());
    for (Elem r = 0; r < e.base().order(); ++r) s.set(e.act(r, x));
    return s;
}

}  // namespace detail

/// All submodules, as the closure of the cyclic submodules under sums.
inline std::vector<ElementSet> module_submodules(const FiniteModule& e) {
    std::vector<ElementSet> cyclic;
    std::unordered_set<ElementSet> seen;
    for (Elem x = 0; x < e.order(); ++x) {
        auto c = detail::cyclic_submodule(e, x);
        if (seen.insert(c).second) cyclic.push_back(std::move(c));
    }
    std::vector<ElementSet> all = cyclic;
    for (std::size_t k = 0; k < all.size(); ++k) {
        for (const auto& c : cyclic) {
            auto s = detail::additive_closure(e, all[k] | c);
            if (seen.insert(s).second) all.push_back(std::move(s));
        }
    }
    std::sort(all.begin(), all.end(), detail::canonical_less);
    return all;
}

/// E = Ax for some x.
inline bool module_is_cyclic(const FiniteModule& e) {
    for (Elem x = 0; x < e.order(); ++x) {
        if (detail::cyclic_submodule(e, x).count() == e.order()) return true;
    }
    return false;
}

/// {a in A : aE = 0}.
inline Ideal annihilator(const FiniteModule& e) {
    const FiniteRing& a = e.base();
    ElementSet s(a.order());
    for (Elem r = 0; r < a.order(); ++r) {
        bool kills = true;
        for (Elem x = 0; x < e.order() && kills; ++x) kills = e.act(r, x) == e.zero();
        if (kills) s.set(r);
    }
    return Ideal(a, std::move(s));
}

/// IE, the submodule generated by all ie.
inline ElementSet ideal_times_module(const Ideal& i, const FiniteModule& e) {
    if (!i.ring().same_as(e.base())) throw Error(ErrorKind::module_mismatch, "ideal and module have different base rings");
    ElementSet s(e.order());
    for_each_member(i.members(), [&](Elem r) {
        for (Elem x = 0; x < e.order(); ++x) s.set(e.act(r, x));
    });
    return detail::additive_closure(e, std::move(s));
}

/// Ix = {ix : i in I}.
inline ElementSet ideal_times_element(const Ideal& i, const FiniteModule& e, Elem x) {
    if (!i.ring().same_as(e.base())) throw Error(ErrorKind::module_mismatch, "ideal and module have different base rings");
    ElementSet s(e.order());
    for_each_member(i.members(), [&](Elem r) { s.set(e.act(r, x)); });
    return s;
}

/// aE = {ae : e in E}.
inline ElementSet element_times_module(Elem a, const FiniteModule& e) {
    ElementSet s(e.order());
    for (Elem x = 0; x < e.order(); ++x) s.set(e.act(a, x));
    return s;
}

/// Not a zero divisor of A.
inline bool is_regular(const FiniteRing& a, Elem r) {
    for (Elem b = 1; b < a.order(); ++b) {
        if (a.mul(r, b) == a.zero()) return false;
    }
    return true;
}

/// Some nonunit of A is regular. Never true for a finite ring; kept as an explicit check.
inline bool has_nonunit_regular(const FiniteRing& a) {
    for (Elem r = 0; r < a.order(); ++r) {
        if (!a.is_unit(r) && is_regular(a, r)) return true;
    }
    return false;
}

/// E = aE for every regular a in A.
inline bool divisible_module(const FiniteModule& e) {
    for (Elem r = 0; r < e.base().order(); ++r) {
        if (is_regular(e.base(), r) && element_times_module(r, e).count() != e.order()) return false;
    }
    return true;
}

// -- trivial extension ----------------------------------------------------

namespace detail {

struct TrivialExtensionArithmetic final : Arithmetic {
    TrivialExtensionArithmetic(FiniteRing a, FiniteModule e) : a(std::move(a)), e(std::move(e)), m(this->e.order()) {}
    Elem add(Elem x, Elem y) const override {
        return pack(a.add(x / m, y / m), e.add(x % m, y % m));
    }
    Elem mul(Elem x, Elem y) const override {
        const Elem xa = x / m, xe = x % m, ya = y / m, ye = y % m;
        return pack(a.mul(xa, ya), e.add(e.act(xa, ye), e.act(ya, xe)));
    }
    Elem neg(Elem x) const override { return pack(a.neg(x / m), e.neg(x % m)); }
    Elem pack(Elem ra, Elem re) const { return static_cast<Elem>(ra * m + re); }

    FiniteRing a;
    FiniteModule e;
    std::size_t m;
};

}  // namespace detail

/// A x| E with (a, e)(b, f) = (ab, af + be).
inline FiniteRing make_trivial_extension(const FiniteRing& a, const FiniteModule& e) {
    if (!e.base().same_as(a)) throw Error(ErrorKind::module_mismatch, "module is not over the given ring");
    const std::uint64_t order = std::uint64_t{a.order()} * e.order();
    detail::check_order(order, a.config());
    auto d = std::make_shared<detail::RingData>();
    d->order = static_cast<std::size_t>(order);
    d->one = static_cast<Elem>(a.one() * e.order());
    d->config = a.config();
    d->construction.kind = ConstructionKind::trivial_extension;
    d->construction.parents = {a};
    d->construction.module = e.data();
    d->description = "idealize(" + a.description() + ", " + e.description() + ")";
    const std::size_t m = e.order();
    d->namer = [a, e, m](Elem x) {
        return "pair(" + a.name(static_cast<Elem>(x / m)) + ", " + e.name(static_cast<Elem>(x % m)) + ")";
    };
    d->oracle = std::make_unique<detail::TrivialExtensionArithmetic>(a, e);
    return detail::finalize(std::move(d));
}

/// Base ring and module of a trivial extension.
inline FiniteRing extension_base(const FiniteRing& r) {
    if (r.construction().kind != ConstructionKind::trivial_extension) {
        throw Error(ErrorKind::invalid_argument, "not a trivial extension");
    }
    return r.construction().parents.front();
}

inline FiniteModule extension_module(const FiniteRing& r) {
    if (r.construction().kind != ConstructionKind::trivial_extension) {
        throw Error(ErrorKind::invalid_argument, "not a trivial extension");
    }
    return FiniteModule(r.construction().module);
}

/// (a, e) as an element of A x| E.
inline Elem extension_element(const FiniteRing& r, Elem a, Elem e) {
    return static_cast<Elem>(a * extension_module(r).order() + e);
}

/// I x| E' = {(a, e) : a in I, e in E'} for a submodule E' (all of E by default).
inline Ideal lift_ideal(const FiniteRing& r, const Ideal& i, std::optional<ElementSet> sub = std::nullopt) {
    const FiniteRing a = extension_base(r);
    const FiniteModule e = extension_module(r);
    if (!i.ring().same_as(a)) throw Error(ErrorKind::cross_ring, "ideal is not an ideal of the base ring");
    ElementSet sm = sub ? *sub : ElementSet(e.order()).set();
    ElementSet s(r.order());
    for_each_member(i.members(), [&](Elem x) {
        for_each_member(sm, [&](Elem y) { s.set(extension_element(r, x, y)); });
    });
    return Ideal::from_members(r, s);
}

enum class OaIdealPath { lifted, bruteforce };

inline const char* to_string(OaIdealPath p) { return p == OaIdealPath::lifted ? "lifted" : "bruteforce"; }

struct OaIdealList {
    FiniteRing ring;
    std::vector<Ideal> ideals;
    OaIdealPath path = OaIdealPath::bruteforce;
};

/// The OA-ideals of A x| E. With a regular nonunit in A and E divisible they are
/// exactly the L x| E for OA-ideals L of A; otherwise they come from a full scan.
inline OaIdealList oa_ideals_of_trivial_extension(const FiniteRing& a, const FiniteModule& e) {
    OaIdealList out;
    out.ring = make_trivial_extension(a, e);
    if (has_nonunit_regular(a) && divisible_module(e)) {
        const IdealLattice la(a);
        for (auto i : la.proper()) {
            if (is_OA_definitional(la[i])) out.ideals.push_back(lift_ideal(out.ring, la[i]));
        }
        out.path = OaIdealPath::lifted;
        return out;
    }
    const IdealLattice lr(out.ring);
    for (auto i : lr.proper()) {
        if (is_OA_definitional(lr[i])) out.ideals.push_back(lr[i]);
    }
    return out;
}

}  // namespace oaf
