#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative rings with identity.
 *
 * Elements of a ring of order n are the indices 0..n-1. Index 0 is always
 * the additive identity. Arithmetic is served from dense tables for small
 * rings and from structured arithmetic on the construction tree for larger
 * ones; both paths give the same answers.
 *
 * Supported constructions:
 * - Z/n
 * - B[x]/(f) for a monic f over any finite ring B
 * - finite direct products
 * - quotients R/I (in ideal.hpp)
 * - trivial extensions A x| E (in module.hpp)
 *
 * Every ring is audited against the commutative ring axioms when it is
 * built, up to the bounds in Config.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "oaf/config.hpp"
#include "oaf/error.hpp"

namespace oaf {

using Elem = std::uint32_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Calls f(i) for every set bit i of s, in ascending order.
template <typename F>
void for_each_member(const ElementSet& s, F&& f) {
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
        f(static_cast<Elem>(i));
    }
}

inline std::vector<Elem> members_of(const ElementSet& s) {
    std::vector<Elem> out;
    out.reserve(s.count());
    for_each_member(s, [&](Elem e) { out.push_back(e); });
    return out;
}

class FiniteRing;

namespace detail {
struct ModuleData;
}  // namespace detail

enum class ConstructionKind { zmod, poly_quotient, product, quotient, trivial_extension };

inline const char* to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::zmod: return "ZMod";
        case ConstructionKind::poly_quotient: return "PolyQuotient";
        case ConstructionKind::product: return "Product";
        case ConstructionKind::quotient: return "QuotientByIdeal";
        case ConstructionKind::trivial_extension: return "TrivialExtension";
    }
    return "?";
}

/// Tagged description of how a ring was built.
struct Construction {
    ConstructionKind kind = ConstructionKind::zmod;
    std::uint64_t modulus_n = 0;      // zmod
    std::vector<FiniteRing> parents;  // poly: {base}; product: factors; quotient: {ring}; trivial extension: {A}
    std::vector<Elem> modulus;        // poly: coefficient indices in the base, constant term first
    std::string variable;             // poly
    std::vector<Elem> projection;     // quotient: parent element -> quotient element
    std::vector<Elem> lift;           // quotient: quotient element -> coset representative
    std::shared_ptr<const detail::ModuleData> module;  // trivial extension
};

namespace detail {

struct Arithmetic {
    virtual ~Arithmetic() = default;
    virtual Elem add(Elem a, Elem b) const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual Elem neg(Elem a) const = 0;
};

struct RingData {
    std::size_t order = 0;
    Elem one = 0;
    Construction construction;
    std::string description;
    Config config;
    std::unique_ptr<const Arithmetic> oracle;
    std::vector<Elem> add_table;
    std::vector<Elem> mul_table;
    std::vector<Elem> neg_table;
    ElementSet units;
    ElementSet nilpotents;
    std::function<std::string(Elem)> namer;
};

}  // namespace detail

class RingElement;

/// Shared, immutable handle to a finite commutative ring.
class FiniteRing {
public:
    FiniteRing() = default;

    std::size_t order() const { return d_->order; }
    Elem zero() const { return 0; }
    Elem one() const { return d_->one; }

    Elem add(Elem a, Elem b) const {
        return d_->add_table.empty() ? d_->oracle->add(a, b) : d_->add_table[a * d_->order + b];
    }
    Elem mul(Elem a, Elem b) const {
        return d_->mul_table.empty() ? d_->oracle->mul(a, b) : d_->mul_table[a * d_->order + b];
    }
    Elem neg(Elem a) const { return d_->neg_table[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem pow(Elem a, std::uint64_t k) const {
        Elem result = one();
        while (k > 0) {
            if (k & 1U) result = mul(result, a);
            a = mul(a, a);
            k >>= 1U;
        }
        return result;
    }

    /// k * 1, by double-and-add.
    Elem from_int(std::int64_t k) const {
        bool negative = k < 0;
        std::uint64_t m = negative ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
        Elem acc = zero();
        Elem base = one();
        while (m > 0) {
            if (m & 1U) acc = add(acc, base);
            base = add(base, base);
            m >>= 1U;
        }
        return negative ? neg(acc) : acc;
    }

    bool is_unit(Elem a) const { return d_->units.test(a); }
    const ElementSet& units() const { return d_->units; }
    ElementSet nonunits() const { return ~d_->units; }
    const ElementSet& nilpotents() const { return d_->nilpotents; }
    bool is_nilpotent(Elem a) const { return d_->nilpotents.test(a); }

    /// Every nonzero element is a unit.
    bool is_field() const { return d_->units.count() + 1 == d_->order; }
    /// No nonzero nilpotents.
    bool is_reduced() const { return d_->nilpotents.count() == 1; }

    /// Local iff the nonunits are closed under addition.
    bool is_local() const {
        const auto nu = members_of(nonunits());
        for (std::size_t i = 0; i < nu.size(); ++i) {
            for (std::size_t j = i; j < nu.size(); ++j) {
                if (is_unit(add(nu[i], nu[j]))) return false;
            }
        }
        return true;
    }

    std::vector<Elem> idempotents() const {
        std::vector<Elem> out;
        for (Elem e = 0; e < order(); ++e) {
            if (mul(e, e) == e) out.push_back(e);
        }
        return out;
    }

    /// Nonzero idempotents with no nonzero idempotent strictly below them.
    /// They are pairwise orthogonal and sum to one.
    std::vector<Elem> primitive_idempotents() const {
        const auto idem = idempotents();
        std::vector<Elem> out;
        for (Elem e : idem) {
            if (e == zero()) continue;
            bool primitive = std::none_of(idem.begin(), idem.end(), [&](Elem f) {
                return f != zero() && f != e && mul(f, e) == f;
            });
            if (primitive) out.push_back(e);
        }
        return out;
    }

    std::string name(Elem a) const { return d_->namer ? d_->namer(a) : std::to_string(a); }
    const std::string& description() const { return d_->description; }
    const Construction& construction() const { return d_->construction; }
    const Config& config() const { return d_->config; }
    bool has_tables() const { return !d_->mul_table.empty(); }

    bool same_as(const FiniteRing& other) const { return d_ == other.d_; }
    bool valid() const { return d_ != nullptr; }

    RingElement element(Elem index) const;

    static FiniteRing adopt(std::shared_ptr<const detail::RingData> d) {
        FiniteRing r;
        r.d_ = std::move(d);
        return r;
    }

private:
    std::shared_ptr<const detail::RingData> d_;
};

/// An element bound to its ring; arithmetic across rings throws.
class RingElement {
public:
    RingElement(FiniteRing ring, Elem index) : ring_(std::move(ring)), index_(index) {
        if (index_ >= ring_.order()) {
            throw Error(ErrorKind::invalid_argument, "element index out of range");
        }
    }

    const FiniteRing& ring() const { return ring_; }
    Elem index() const { return index_; }
    bool is_unit() const { return ring_.is_unit(index_); }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        check(a, b);
        return {a.ring_, a.ring_.add(a.index_, b.index_)};
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        check(a, b);
        return {a.ring_, a.ring_.sub(a.index_, b.index_)};
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        check(a, b);
        return {a.ring_, a.ring_.mul(a.index_, b.index_)};
    }
    RingElement operator-() const { return {ring_, ring_.neg(index_)}; }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_.same_as(b.ring_) && a.index_ == b.index_;
    }

private:
    static void check(const RingElement& a, const RingElement& b) {
        if (!a.ring_.same_as(b.ring_)) {
            throw Error(ErrorKind::cross_ring, "elements belong to different rings");
        }
    }

    FiniteRing ring_;
    Elem index_;
};

inline RingElement FiniteRing::element(Elem index) const { return {*this, index}; }

namespace detail {

/// Wraps a name in parentheses when it is a compound expression.
inline std::string paren_if_compound(const std::string& s) {
    bool compound = s.find_first_of("+ ") != std::string::npos ||
                    (s.size() > 1 && s.front() == '-');
    return compound ? "(" + s + ")" : s;
}

inline void check_order(std::uint64_t order, const Config& cfg) {
    if (order > cfg.max_ring_order) {
        throw ResourceLimitError("max ring order", cfg.max_ring_order, order);
    }
}

/// Deterministic sample used for the ternary audit of large rings.
inline std::vector<Elem> audit_sample(std::size_t n, std::size_t sample_size) {
    std::vector<Elem> s{0, 1};
    for (std::size_t i = 0; i < sample_size; ++i) {
        s.push_back(static_cast<Elem>((i * n) / sample_size));
        s.push_back(static_cast<Elem>(n - 1 - (i * 7919U) % n));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline void audit_fail(const FiniteRing& r, const std::string& law, std::initializer_list<Elem> xs) {
    std::string msg = law + " fails in " + r.description() + " at (";
    bool first = true;
    for (Elem x : xs) {
        if (!first) msg += ", ";
        msg += std::to_string(x);
        first = false;
    }
    throw Error(ErrorKind::ring_axiom, msg + ")");
}

inline void audit_ring(const FiniteRing& r) {
    const std::size_t n = r.order();
    const Config& cfg = r.config();
    if (r.one() == r.zero()) audit_fail(r, "one != zero", {r.one()});
    if (n <= cfg.audit_bound) {
        for (Elem a = 0; a < n; ++a) {
            if (r.add(a, 0) != a) audit_fail(r, "additive identity", {a});
            if (r.mul(a, r.one()) != a) audit_fail(r, "multiplicative identity", {a});
            if (r.add(a, r.neg(a)) != 0) audit_fail(r, "additive inverse", {a});
            for (Elem b = a + 1; b < n; ++b) {
                if (r.add(a, b) != r.add(b, a)) audit_fail(r, "additive commutativity", {a, b});
                if (r.mul(a, b) != r.mul(b, a)) audit_fail(r, "multiplicative commutativity", {a, b});
            }
        }
    }
    std::vector<Elem> domain;
    if (n <= cfg.ternary_audit_bound) {
        domain.resize(n);
        std::iota(domain.begin(), domain.end(), Elem{0});
    } else {
        domain = audit_sample(n, 48);
    }
    for (Elem a : domain) {
        for (Elem b : domain) {
            const Elem ab_sum = r.add(a, b);
            const Elem ab = r.mul(a, b);
            for (Elem c : domain) {
                if (r.add(ab_sum, c) != r.add(a, r.add(b, c))) audit_fail(r, "additive associativity", {a, b, c});
                if (r.mul(ab, c) != r.mul(a, r.mul(b, c))) audit_fail(r, "multiplicative associativity", {a, b, c});
                if (r.mul(a, r.add(b, c)) != r.add(ab, r.mul(a, c))) audit_fail(r, "distributivity", {a, b, c});
            }
        }
    }
}

/// Fills tables and caches, audits the axioms, and freezes the ring.
inline FiniteRing finalize(std::shared_ptr<RingData> d) {
    const std::size_t n = d->order;
    d->neg_table.resize(n);
    for (Elem a = 0; a < n; ++a) d->neg_table[a] = d->oracle->neg(a);
    if (n <= d->config.table_threshold) {
        d->add_table.resize(n * n);
        d->mul_table.resize(n * n);
        for (Elem a = 0; a < n; ++a) {
            for (Elem b = 0; b < n; ++b) {
                d->add_table[a * n + b] = d->oracle->add(a, b);
                d->mul_table[a * n + b] = d->oracle->mul(a, b);
            }
        }
    }
    FiniteRing view = FiniteRing::adopt(d);
    audit_ring(view);

    d->units.resize(n);
    for (Elem a = 0; a < n; ++a) {
        if (d->units.test(a)) continue;
        for (Elem b = 0; b < n; ++b) {
            if (view.mul(a, b) == d->one) {
                d->units.set(a);
                d->units.set(b);
                break;
            }
        }
    }
    std::uint64_t big = 1;
    while (big < n) big <<= 1U;
    d->nilpotents.resize(n);
    for (Elem a = 0; a < n; ++a) {
        if (view.pow(a, big) == 0) d->nilpotents.set(a);
    }
    return view;
}

struct ZModArithmetic final : Arithmetic {
    explicit ZModArithmetic(std::uint64_t n) : n(n) {}
    Elem add(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} + b) % n); }
    Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} * b) % n); }
    Elem neg(Elem a) const override { return a == 0 ? 0 : static_cast<Elem>(n - a); }
    std::uint64_t n;
};

/// Coefficient vectors c_0 + c_1 x + ... + c_{d-1} x^{d-1}, index = sum c_i |B|^i.
struct PolyArithmetic final : Arithmetic {
    PolyArithmetic(FiniteRing base, std::vector<Elem> modulus)
        : base(std::move(base)), modulus(std::move(modulus)), degree(this->modulus.size() - 1) {}

    std::vector<Elem> unpack(Elem a) const {
        std::vector<Elem> c(degree);
        const std::uint64_t q = base.order();
        std::uint64_t v = a;
        for (std::size_t i = 0; i < degree; ++i) {
            c[i] = static_cast<Elem>(v % q);
            v /= q;
        }
        return c;
    }
    Elem pack(const std::vector<Elem>& c) const {
        std::uint64_t v = 0;
        for (std::size_t i = degree; i-- > 0;) v = v * base.order() + c[i];
        return static_cast<Elem>(v);
    }

    Elem add(Elem a, Elem b) const override {
        auto x = unpack(a);
        auto y = unpack(b);
        for (std::size_t i = 0; i < degree; ++i) x[i] = base.add(x[i], y[i]);
        return pack(x);
    }
    Elem neg(Elem a) const override {
        auto x = unpack(a);
        for (auto& c : x) c = base.neg(c);
        return pack(x);
    }
    Elem mul(Elem a, Elem b) const override {
        const auto x = unpack(a);
        const auto y = unpack(b);
        std::vector<Elem> prod(2 * degree - 1, base.zero());
        for (std::size_t i = 0; i < degree; ++i) {
            if (x[i] == base.zero()) continue;
            for (std::size_t j = 0; j < degree; ++j) {
                prod[i + j] = base.add(prod[i + j], base.mul(x[i], y[j]));
            }
        }
        // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
        for (std::size_t k = prod.size(); k-- > degree;) {
            const Elem t = prod[k];
            if (t == base.zero()) continue;
            for (std::size_t i = 0; i < degree; ++i) {
                prod[k - degree + i] = base.sub(prod[k - degree + i], base.mul(t, modulus[i]));
            }
            prod[k] = base.zero();
        }
        prod.resize(degree);
        return pack(prod);
    }

    FiniteRing base;
    std::vector<Elem> modulus;
    std::size_t degree;
};

/// Mixed radix, last factor varies fastest.
struct ProductArithmetic final : Arithmetic {
    explicit ProductArithmetic(std::vector<FiniteRing> fs) : factors(std::move(fs)) {
        strides.resize(factors.size());
        std::uint64_t s = 1;
        for (std::size_t i = factors.size(); i-- > 0;) {
            strides[i] = s;
            s *= factors[i].order();
        }
    }

    Elem component(Elem a, std::size_t i) const {
        return static_cast<Elem>((a / strides[i]) % factors[i].order());
    }
    template <typename Op>
    Elem zip(Elem a, Elem b, Op op) const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            v += strides[i] * op(factors[i], component(a, i), component(b, i));
        }
        return static_cast<Elem>(v);
    }

    Elem add(Elem a, Elem b) const override {
        return zip(a, b, [](const FiniteRing& f, Elem x, Elem y) { return f.add(x, y); });
    }
    Elem mul(Elem a, Elem b) const override {
        return zip(a, b, [](const FiniteRing& f, Elem x, Elem y) { return f.mul(x, y); });
    }
    Elem neg(Elem a) const override {
        return zip(a, a, [](const FiniteRing& f, Elem x, Elem) { return f.neg(x); });
    }

    std::vector<FiniteRing> factors;
    std::vector<std::uint64_t> strides;
};

struct QuotientArithmetic final : Arithmetic {
    QuotientArithmetic(FiniteRing parent, std::vector<Elem> projection, std::vector<Elem> lift)
        : parent(std::move(parent)), projection(std::move(projection)), lift(std::move(lift)) {}
    Elem add(Elem a, Elem b) const override { return projection[parent.add(lift[a], lift[b])]; }
    Elem mul(Elem a, Elem b) const override { return projection[parent.mul(lift[a], lift[b])]; }
    Elem neg(Elem a) const override { return projection[parent.neg(lift[a])]; }

    FiniteRing parent;
    std::vector<Elem> projection;
    std::vector<Elem> lift;
};

inline std::string poly_name(const FiniteRing& base, const std::vector<Elem>& c, const std::string& var) {
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == base.zero()) continue;
        std::string term;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0) {
            term = base.name(c[k]);
        } else if (c[k] == base.one()) {
            term = mono;
        } else {
            term = paren_if_compound(base.name(c[k])) + "*" + mono;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

/// Z/nZ with canonical representatives 0..n-1.
inline FiniteRing make_zmod(std::int64_t n, const Config& cfg = {}) {
    if (n < 2) throw Error(ErrorKind::invalid_order, "Z/n needs n >= 2, got " + std::to_string(n));
    detail::check_order(static_cast<std::uint64_t>(n), cfg);
    auto d = std::make_shared<detail::RingData>();
    d->order = static_cast<std::size_t>(n);
    d->one = 1;
    d->config = cfg;
    d->construction.kind = ConstructionKind::zmod;
    d->construction.modulus_n = static_cast<std::uint64_t>(n);
    d->description = "Z/" + std::to_string(n);
    d->oracle = std::make_unique<detail::ZModArithmetic>(static_cast<std::uint64_t>(n));
    return detail::finalize(std::move(d));
}

/// B[var]/(f) where f = modulus[0] + modulus[1] var + ... must be monic of degree >= 1.
/// Coefficients are element indices of the base ring.
inline FiniteRing make_poly_quotient(const FiniteRing& base, std::vector<Elem> modulus,
                                     std::string var = "x") {
    if (modulus.size() < 2) {
        throw Error(ErrorKind::unsupported_modulus, "modulus must have degree >= 1");
    }
    for (Elem c : modulus) {
        if (c >= base.order()) throw Error(ErrorKind::invalid_argument, "modulus coefficient out of range");
    }
    if (modulus.back() != base.one()) {
        throw Error(ErrorKind::unsupported_modulus, "modulus must be monic");
    }
    const std::size_t degree = modulus.size() - 1;
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < degree; ++i) {
        order *= base.order();
        detail::check_order(order, base.config());
    }
    auto d = std::make_shared<detail::RingData>();
    d->order = static_cast<std::size_t>(order);
    d->one = base.one();
    d->config = base.config();
    d->construction.kind = ConstructionKind::poly_quotient;
    d->construction.parents = {base};
    d->construction.modulus = modulus;
    d->construction.variable = var;
    std::string desc = "poly(" + base.description();
    for (Elem c : modulus) desc += ", " + base.name(c);
    if (var != "x") desc += ", var=" + var;
    d->description = desc + ")";
    auto arith = std::make_unique<detail::PolyArithmetic>(base, modulus);
    const auto* raw = arith.get();
    d->namer = [raw, var](Elem a) { return detail::poly_name(raw->base, raw->unpack(a), var); };
    d->oracle = std::move(arith);
    return detail::finalize(std::move(d));
}

/// Direct product with componentwise operations; needs at least two factors.
inline FiniteRing make_product(const std::vector<FiniteRing>& factors) {
    if (factors.size() < 2) {
        throw Error(ErrorKind::arity, "a product needs at least two factors");
    }
    std::uint64_t order = 1;
    for (const auto& f : factors) {
        order *= f.order();
        detail::check_order(order, factors.front().config());
    }
    auto d = std::make_shared<detail::RingData>();
    d->order = static_cast<std::size_t>(order);
    d->config = factors.front().config();
    d->construction.kind = ConstructionKind::product;
    d->construction.parents = factors;
    auto arith = std::make_unique<detail::ProductArithmetic>(factors);
    std::uint64_t one = 0;
    std::string desc;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        one += arith->strides[i] * factors[i].one();
        if (i) desc += " x ";
        const auto& fd = factors[i].description();
        desc += factors[i].construction().kind == ConstructionKind::product ? "(" + fd + ")" : fd;
    }
    d->one = static_cast<Elem>(one);
    d->description = desc;
    const auto* raw = arith.get();
    d->namer = [raw](Elem a) {
        std::string s = "(";
        for (std::size_t i = 0; i < raw->factors.size(); ++i) {
            if (i) s += ", ";
            s += raw->factors[i].name(raw->component(a, i));
        }
        return s + ")";
    };
    d->oracle = std::move(arith);
    return detail::finalize(std::move(d));
}

/// Component i of a product-ring element.
inline Elem product_component(const FiniteRing& product, Elem a, std::size_t i) {
    const auto& c = product.construction();
    if (c.kind != ConstructionKind::product) throw Error(ErrorKind::invalid_argument, "not a product ring");
    std::uint64_t stride = 1;
    for (std::size_t j = c.parents.size(); j-- > i + 1;) stride *= c.parents[j].order();
    return static_cast<Elem>((a / stride) % c.parents[i].order());
}

/// Assembles a product-ring element from its components.
inline Elem product_element(const FiniteRing& product, const std::vector<Elem>& components) {
    const auto& c = product.construction();
    if (c.kind != ConstructionKind::product || components.size() != c.parents.size()) {
        throw Error(ErrorKind::arity, "component count does not match the product");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i] >= c.parents[i].order()) throw Error(ErrorKind::invalid_argument, "component out of range");
        v = v * c.parents[i].order() + components[i];
    }
    return static_cast<Elem>(v);
}

}  // namespace oaf
